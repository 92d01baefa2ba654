#include "qsc/qseries.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qsc {

CycloProduct pochhammer(const PochhammerSpec& spec) {
  if (spec.step < 1) throw std::invalid_argument("pochhammer: step must be >= 1");
  if (spec.length < 0) throw std::invalid_argument("pochhammer: negative length");
  CycloProduct p;
  for (long i = 0; i < spec.length; ++i) {
    long e = spec.base_exp + spec.step * i;
    p *= spec.negated ? CycloProduct::one_plus_q_pow(e) : CycloProduct::one_minus_q_pow(e);
    if (p.is_zero()) break;
  }
  return p;
}

Poly pochhammer_poly(const PochhammerSpec& spec) {
  if (spec.base_exp < 0)
    throw std::invalid_argument("pochhammer_poly: Laurent factor, use the factored form");
  CycloProduct p = pochhammer(spec);
  if (p.is_zero()) return Poly();
  Poly out = p.numerator_part().expand();
  // scalar is +-1 here (no rational parts arise from (1 -+ q^e) with e >= 0)
  if (p.scalar() == -1) return -out;
  return out * BigInt(p.scalar().get_num());
}

std::string SeriesId::str() const {
  switch (kind) {
    case SeriesKind::S1: return "S1";
    case SeriesKind::S2: return "S2";
    case SeriesKind::S3: return "S3(m=" + std::to_string(m) + ")";
    case SeriesKind::S4: return "S4";
  }
  return "?";
}

namespace {

CycloProduct build_term(const SeriesId& id, long k) {
  std::vector<PochhammerSpec> num, den;
  long qint_arg = 0;
  long qexp = 0;
  Rational sign(1);
  switch (id.kind) {
    case SeriesKind::S1:
      num = {{1, 2, false, k}, {1, 2, true, k}, {1, 2, true, k}};
      den = {{4, 4, false, k}, {4, 4, true, k}, {4, 4, true, k}};
      qint_arg = 6 * k + 1;
      qexp = 3 * k * k;
      if (k % 2 == 1) sign = -1;
      break;
    case SeriesKind::S2:
      num = {{2, 4, false, k}, {1, 2, true, k}, {1, 2, true, k}};
      den = {{4, 4, false, k}, {4, 4, true, k}, {4, 4, true, k}};
      qint_arg = 6 * k + 1;
      qexp = k * k;
      break;
    case SeriesKind::S3:
      num = {{id.m + 1, 2, false, k}, {1 - id.m, 2, false, k}, {1, 2, false, 2 * k}};
      den = {{id.m + 6, 6, false, k}, {6 - id.m, 6, false, k}, {2, 2, false, 2 * k}};
      qint_arg = 8 * k + 1;
      qexp = 2 * k * k;
      break;
    case SeriesKind::S4:
      num = {{1, 2, false, k}, {1, 2, false, k}, {1, 2, false, 2 * k}};
      den = {{6, 6, false, k}, {6, 6, false, k}, {2, 2, false, 2 * k}};
      qint_arg = 8 * k + 1;
      qexp = 2 * k * k;
      break;
  }
  CycloProduct d;
  for (const auto& spec : den) d *= pochhammer(spec);
  if (d.is_zero())
    throw DegenerateSpecialization("series " + id.str() + ": denominator factor vanishes at k=" +
                                   std::to_string(k));
  CycloProduct t = CycloProduct::from_scalar(sign);
  for (const auto& spec : num) t *= pochhammer(spec);
  t *= d.inverse();
  t *= CycloProduct::q_integer_factored(qint_arg);
  t *= CycloProduct::q_power(qexp);
  return t;
}

std::mutex term_cache_mutex;
std::map<std::tuple<SeriesKind, long, long>, CycloProduct> term_cache;

}  // namespace

const CycloProduct& term(const SeriesId& id, long k) {
  if (k < 0) throw std::invalid_argument("term: k must be nonnegative");
  std::lock_guard<std::mutex> lock(term_cache_mutex);
  auto key = std::make_tuple(id.kind, id.kind == SeriesKind::S3 ? id.m : 0, k);
  auto it = term_cache.find(key);
  if (it == term_cache.end()) it = term_cache.emplace(key, build_term(id, k)).first;
  return it->second;
}

RatFunc term_s1(long k) { return term(SeriesId::s1(), k).to_ratfunc(); }
RatFunc term_s2(long k) { return term(SeriesId::s2(), k).to_ratfunc(); }
RatFunc term_s3(long k, long m) { return term(SeriesId::s3(m), k).to_ratfunc(); }
RatFunc term_s4(long k) { return term(SeriesId::s4(), k).to_ratfunc(); }

RatFunc convolution(const SeriesId& id, long k) {
  if (k < 0) throw std::invalid_argument("convolution: k must be nonnegative");
  FactoredSum acc;
  for (long j = 0; j <= k; ++j) acc.add(term(id, j) * term(id, k - j));
  return acc.value();
}

void SeriesAccumulator::advance_to(long n) {
  if (n < next_) throw std::invalid_argument("SeriesAccumulator: cannot rewind");
  for (; next_ < n; ++next_) {
    if (mode_ == SumMode::Plain) {
      sum_.add(term(id_, next_));
    } else {
      // block K contributes a_q(K) = sum_j c(j) c(K-j), added pairwise
      for (long j = 0; j <= next_; ++j) sum_.add(term(id_, j) * term(id_, next_ - j));
    }
  }
}

RatFunc truncated_sum(const SeriesId& id, SumMode mode, long n) {
  if (n < 1) throw std::invalid_argument("truncated_sum: n must be >= 1");
  SeriesAccumulator acc(id, mode);
  acc.advance_to(n);
  return acc.value();
}

FactoredValue truncated_sum_factored(const SeriesId& id, SumMode mode, long n) {
  if (n < 1) throw std::invalid_argument("truncated_sum: n must be >= 1");
  SeriesAccumulator acc(id, mode);
  acc.advance_to(n);
  return acc.value_parts();
}

}  // namespace qsc
