#pragma once

// Dense univariate polynomials over arbitrary-precision integers.
//
// Representation: coefficient vector in ascending degree order. The zero
// polynomial is the empty vector; otherwise the last coefficient is nonzero.
// All values are immutable after construction and all operations are pure,
// so concurrent use needs no synchronization.

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsc/bigint.hpp"

namespace qsc {

struct PolyDivisionByZero : std::domain_error {
  PolyDivisionByZero() : std::domain_error("polynomial division by zero") {}
};

// Division over the rationals produced a non-integer quotient or remainder;
// the integer-typed interface cannot represent it.
struct NonIntegralDivision : std::domain_error {
  explicit NonIntegralDivision(const std::string& what) : std::domain_error(what) {}
};

// divexact was called on a non-divisible pair.
struct ExactDivisionFailed : std::domain_error {
  explicit ExactDivisionFailed(const std::string& what) : std::domain_error(what) {}
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(BigInt constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }
  explicit Poly(long constant) : Poly(BigInt(constant)) {}
  explicit Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  // Ascending-order construction from small literals: {c0, c1, ...}.
  static Poly from_coeffs(std::initializer_list<long> coeffs) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
  }

  // c * q^exp
  static Poly monomial(BigInt c, long exp);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  // degree of the zero polynomial is -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  const std::vector<BigInt>& coeffs() const { return c_; }

  // Coefficient of q^i; zero beyond the degree.
  const BigInt& operator[](long i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
  }

  const BigInt& leading() const { return c_.back(); }  // pre: nonzero

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly operator*(const BigInt& s) const;

  // * q^k (k >= 0)
  Poly shifted(long k) const;
  // / q^k; requires q^k | *this
  Poly unshifted(long k) const;
  // multiplicity of the factor q (0 for the zero polynomial)
  long trailing_zeros() const;

  // gcd of coefficients, nonnegative; content of 0 is 0
  BigInt content() const;
  Poly primitive_part() const;

  Rational eval(const Rational& x) const;
  BigInt eval(const BigInt& x) const;

  // Human-readable form, descending powers: "q^3 - 2*q + 1".
  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline Poly operator*(const BigInt& s, const Poly& p) { return p * s; }

// Quotient and remainder with deg r < deg b. Division runs over the
// rationals; if quotient or remainder fails to be integral the result cannot
// be represented here and NonIntegralDivision is thrown. Every divisor used
// by this project has unit leading coefficient, for which the integer path
// always applies.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

// Exact quotient; throws ExactDivisionFailed on nonzero remainder or a
// non-integral quotient.
Poly divexact(const Poly& a, const Poly& b);

// True iff b | a over the rationals (b != 0).
bool divides(const Poly& b, const Poly& a);

// Primitive gcd with positive leading coefficient (subresultant PRS).
// Requires not both inputs zero.
Poly gcd(const Poly& a, const Poly& b);

namespace detail {
// Exposed for tests and the threshold benchmark; operator* dispatches
// between these.
Poly mul_schoolbook(const Poly& a, const Poly& b);
Poly mul_karatsuba(const Poly& a, const Poly& b);
// lc(b)^(deg a - deg b + 1) * a mod b, computed entirely over the integers.
// Zero iff b | a over the rationals; used for integer-valued remainder
// witnesses when b is not monic.
Poly pseudo_rem(const Poly& a, const Poly& b);
// Operands whose shorter side is below this use schoolbook multiplication.
// Measured crossover on this workload sits near 32 limbs of coefficients;
// see tools/poly_bench.cpp for the measurement.
inline constexpr size_t kKaratsubaThreshold = 32;
}  // namespace detail

}  // namespace qsc
