#pragma once

// The four studied summand families, their convolution squares, and truncated
// sums. All construction happens in factored (cyclotomic) form; dense
// polynomials appear only inside the running sums.

#include <stdexcept>
#include <string>
#include <vector>

#include "qsc/qproduct.hpp"
#include "qsc/ratfunc.hpp"

namespace qsc {

struct DegenerateSpecialization : std::domain_error {
  explicit DegenerateSpecialization(const std::string& what) : std::domain_error(what) {}
};

struct HypothesisViolation : std::invalid_argument {
  explicit HypothesisViolation(const std::string& what) : std::invalid_argument(what) {}
};

// (+-q^r; q^s)_k = prod_{i=0}^{k-1} (1 -+ q^{r+si}). `negated` selects the
// -q^r argument. r may be negative or zero (Laurent/vanishing factors are
// legal; a vanishing factor makes the product zero).
struct PochhammerSpec {
  long base_exp = 0;   // r
  long step = 1;       // s >= 1
  bool negated = false;
  long length = 0;     // k >= 0
};

CycloProduct pochhammer(const PochhammerSpec& spec);
// Dense form; requires every factor exponent r + s*i to be nonnegative.
Poly pochhammer_poly(const PochhammerSpec& spec);

enum class SeriesKind { S1, S2, S3, S4 };

// S3 carries the specialization exponent m (argument parameter fixed to q^m);
// m is ignored for the other kinds.
struct SeriesId {
  SeriesKind kind = SeriesKind::S1;
  long m = 0;

  static SeriesId s1() { return {SeriesKind::S1, 0}; }
  static SeriesId s2() { return {SeriesKind::S2, 0}; }
  static SeriesId s3(long m) { return {SeriesKind::S3, m}; }
  static SeriesId s4() { return {SeriesKind::S4, 0}; }

  std::string str() const;
  friend bool operator<(const SeriesId& a, const SeriesId& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.m < b.m;
  }
};

// k-th summand in factored form (memoized). Throws DegenerateSpecialization
// if a denominator factor vanishes identically (S3 with m = 6+6i or -6-6i).
const CycloProduct& term(const SeriesId& id, long k);

// Convenience dense views of the summands.
RatFunc term_s1(long k);
RatFunc term_s2(long k);
RatFunc term_s3(long k, long m);
RatFunc term_s4(long k);

// a_q(k) = sum_{j=0}^k c_q(j) c_q(k-j).
RatFunc convolution(const SeriesId& id, long k);

enum class SumMode { Plain, Squared };

// Incremental accumulator: after advance_to(n) the value is
//   Plain:   sum_{k<n} c_q(k)
//   Squared: sum_{k<n} a_q(k)  (added pairwise, never via dense squaring)
// advance_to may only move forward; snapshots are cheap relative to restart,
// which lets a scan over many n values share one pass.
class SeriesAccumulator {
 public:
  SeriesAccumulator(SeriesId id, SumMode mode) : id_(id), mode_(mode) {}

  void advance_to(long n);
  long position() const { return next_; }
  FactoredValue value_parts() { return sum_.value_parts(); }
  RatFunc value() { return sum_.value(); }

 private:
  SeriesId id_;
  SumMode mode_;
  long next_ = 0;  // first k (Plain) or block index (Squared) not yet added
  FactoredSum sum_;
};

RatFunc truncated_sum(const SeriesId& id, SumMode mode, long n);
FactoredValue truncated_sum_factored(const SeriesId& id, SumMode mode, long n);

// Lemma checks for convolution collapsing, templated over any exact
// commutative ring (used with Rational and with cyclotomic-field elements in
// tests). The sequence is given by its first values; index access beyond the
// supplied range is a hypothesis violation.
//
// Part (a): if c(k) = 0 for (d-1)/2 < k <= d-1 then
//   (sum_{j<d} c(j))^2 = sum_{k<d} sum_{j<=k} c(j) c(k-j).
// Part (b): if additionally c(ld+k) = c(ld) c(k) for 0 <= k < d-1 then
//   sum_{j<=ld+k} c(j)c(ld+k-j)
//     = (sum_{i<=l} c(id) c((l-i)d)) * (sum_{j<=k} c(j)c(k-j)).
template <typename T>
bool lemma1_part_a(const std::vector<T>& c, long d) {
  if (d < 1 || static_cast<long>(c.size()) < d)
    throw HypothesisViolation("lemma1(a): need at least d values");
  const T zero{};
  for (long k = (d - 1) / 2 + 1; k <= d - 1; ++k)
    if (!(c[k] == zero)) throw HypothesisViolation("lemma1(a): c(k) != 0 in upper half window");
  T lhs{};
  for (long j = 0; j < d; ++j) lhs = lhs + c[j];
  lhs = lhs * lhs;
  T rhs{};
  for (long k = 0; k < d; ++k)
    for (long j = 0; j <= k; ++j) rhs = rhs + c[j] * c[k - j];
  return lhs == rhs;
}

template <typename T>
bool lemma1_part_b(const std::vector<T>& c, long d, long l, long k) {
  if (d < 1 || l < 0 || k < 0 || k > d - 1)
    throw HypothesisViolation("lemma1(b): need 0 <= k <= d-1");
  if (static_cast<long>(c.size()) < l * d + k + 1)
    throw HypothesisViolation("lemma1(b): sequence too short");
  const T zero{};
  for (long kk = (d - 1) / 2 + 1; kk <= d - 1; ++kk)
    if (!(c[kk] == zero)) throw HypothesisViolation("lemma1(b): part (a) hypothesis fails");
  for (long ll = 0; ll * d < static_cast<long>(c.size()); ++ll)
    for (long kk = 0; kk < d - 1 && ll * d + kk < static_cast<long>(c.size()); ++kk)
      if (!(c[ll * d + kk] == c[ll * d] * c[kk]))
        throw HypothesisViolation("lemma1(b): multiplicativity hypothesis fails");
  T lhs{};
  for (long j = 0; j <= l * d + k; ++j) lhs = lhs + c[j] * c[l * d + k - j];
  T outer{};
  for (long i = 0; i <= l; ++i) outer = outer + c[i * d] * c[(l - i) * d];
  T inner{};
  for (long j = 0; j <= k; ++j) inner = inner + c[j] * c[k - j];
  return lhs == outer * inner;
}

}  // namespace qsc
