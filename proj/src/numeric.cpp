#include "qsc/numeric.hpp"

#include <mpfr.h>

#include <stdexcept>

#include "qsc/cyclotomic.hpp"
#include "qsc/padic.hpp"

namespace qsc {

namespace {

HpFloat hp_pow(const HpFloat& base, long e) {
  if (e >= 0) return pow(base, static_cast<unsigned>(e));
  return 1 / pow(base, static_cast<unsigned>(-e));
}

HpFloat pi_hp() {
  HpFloat r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

HpFloat tail_tolerance(unsigned tail_digits) {
  return hp_pow(HpFloat(10), -static_cast<long>(tail_digits) - 10);
}

// Incremental (+-q^r; q^s)_k: one advance() appends the next factor.
struct PochRunner {
  HpFloat value{1};
  HpFloat cur;   // q^{r + s i} for the factor appended next
  HpFloat step;  // q^s
  bool negated;

  PochRunner(const HpFloat& q, long r, long s, bool neg)
      : cur(hp_pow(q, r)), step(hp_pow(q, s)), negated(neg) {}

  void advance() {
    value *= negated ? 1 + cur : 1 - cur;
    cur *= step;
  }
};

// q-integer [j] at a numeric point.
HpFloat q_int(const HpFloat& q, long j) { return (1 - hp_pow(q, j)) / (1 - q); }

// Truncated (+-q^r; q^s)_inf, factors cut once below tol.
HpFloat infinite_poch(const HpFloat& q, long r, long s, bool negated, const HpFloat& tol,
                      long max_factors) {
  if (r < 1) throw std::invalid_argument("infinite_poch: base exponent must be positive");
  PochRunner run(q, r, s, negated);
  for (long i = 0; i < max_factors && abs(run.cur) >= tol; ++i) run.advance();
  return run.value;
}

}  // namespace

ScopedPrecision::ScopedPrecision(unsigned digits10) : previous_(HpFloat::default_precision()) {
  if (digits10 < 30) throw std::invalid_argument("precision below 30 digits");
  HpFloat::default_precision(digits10);
}

ScopedPrecision::~ScopedPrecision() { HpFloat::default_precision(previous_); }

HpFloat to_hp(const BigInt& x) {
  HpFloat r;
  mpfr_set_z(r.backend().data(), x.get_mpz_t(), MPFR_RNDN);
  return r;
}

HpFloat to_hp(const Rational& x) {
  HpFloat r;
  mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
  return r;
}

HpComplex HpComplex::operator/(const HpComplex& o) const {
  HpFloat norm = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / norm, (im * o.re - re * o.im) / norm};
}

HpComplex primitive_root_of_unity(long d) {
  if (d < 1) throw std::invalid_argument("primitive_root_of_unity: d must be positive");
  HpFloat angle = 2 * pi_hp() / d;
  return {cos(angle), sin(angle)};
}

HpComplex eval_at(const Poly& p, const HpComplex& z) {
  HpComplex r;
  for (long i = p.degree(); i >= 0; --i) r = r * z + HpComplex{to_hp(p[i]), HpFloat(0)};
  return r;
}

HpFloat eval_series(const SeriesId& id, const HpFloat& q, long max_terms, unsigned tail_digits) {
  if (abs(q) >= 1) throw std::invalid_argument("eval_series: requires |q| < 1");
  if (max_terms < 1) throw std::invalid_argument("eval_series: need at least one term");
  if (q == 0) {
    // Only the k = 0 summand (which is 1) survives, but specializations with
    // a negative power of q in a factor base cannot be evaluated literally.
    if (id.kind == SeriesKind::S3 && (id.m >= 2 || id.m <= -1))
      throw std::invalid_argument("eval_series: factor base carries a negative power of q; q = 0 is outside the domain");
    return HpFloat(1);
  }
  const HpFloat tol = tail_tolerance(tail_digits);

  // Numerator and denominator factor runners, the q-integer multiplier
  // [mult*k+1], and the quadratic exponent coefficient of q^{c k^2}.
  std::vector<PochRunner> num, den;
  std::vector<int> num_rate, den_rate;  // advances per unit k
  long mult, quad;
  bool alternating = false;
  switch (id.kind) {
    case SeriesKind::S1:
      num = {{q, 1, 2, false}, {q, 1, 2, true}, {q, 1, 2, true}};
      den = {{q, 4, 4, false}, {q, 4, 4, true}, {q, 4, 4, true}};
      num_rate = {1, 1, 1};
      den_rate = {1, 1, 1};
      mult = 6, quad = 3, alternating = true;
      break;
    case SeriesKind::S2:
      num = {{q, 2, 4, false}, {q, 1, 2, true}, {q, 1, 2, true}};
      den = {{q, 4, 4, false}, {q, 4, 4, true}, {q, 4, 4, true}};
      num_rate = {1, 1, 1};
      den_rate = {1, 1, 1};
      mult = 6, quad = 1;
      break;
    case SeriesKind::S3:
    case SeriesKind::S4: {
      long m = id.kind == SeriesKind::S4 ? 0 : id.m;
      num = {{q, m + 1, 2, false}, {q, 1 - m, 2, false}, {q, 1, 2, false}};
      den = {{q, m + 6, 6, false}, {q, 6 - m, 6, false}, {q, 2, 2, false}};
      num_rate = {1, 1, 2};
      den_rate = {1, 1, 2};
      mult = 8, quad = 2;
      break;
    }
    default:
      throw std::invalid_argument("eval_series: unknown series");
  }

  HpFloat sum = 0;
  HpFloat prev_abs = 0;
  int growth = 0;
  for (long k = 0; k < max_terms; ++k) {
    if (k > 0) {
      for (size_t i = 0; i < num.size(); ++i)
        for (int s = 0; s < num_rate[i]; ++s) num[i].advance();
      for (size_t i = 0; i < den.size(); ++i)
        for (int s = 0; s < den_rate[i]; ++s) den[i].advance();
    }
    HpFloat term = q_int(q, mult * k + 1) * hp_pow(q, quad * k * k);
    for (const PochRunner& r : num) term *= r.value;
    for (const PochRunner& r : den) term /= r.value;
    if (alternating && (k & 1)) term = -term;

    HpFloat mag = abs(term);
    if (k > 0 && mag < tol) break;
    if (k > 0 && mag > prev_abs && mag > 1e6 && ++growth >= 5)
      throw std::runtime_error("eval_series: terms are growing, series diverges here");
    prev_abs = mag;
    sum += term;
  }
  return sum;
}

HpFloat eval_product(const SeriesId& id, const HpFloat& q, long max_factors,
                     unsigned tail_digits) {
  if (abs(q) >= 1) throw std::invalid_argument("eval_product: requires |q| < 1");
  const HpFloat tol = tail_tolerance(tail_digits);
  auto poch = [&](long r, long s, bool neg) {
    return infinite_poch(q, r, s, neg, tol, max_factors);
  };
  switch (id.kind) {
    case SeriesKind::S1: {
      // The square on the denominator is essential: the exact q-expansion of
      // the series (to q^80) identifies it as (q^3;q^2)_inf (q^4;q^8)_inf^2
      // = (q^3;q^2)_inf / (-q^4;q^4)_inf^2. Quoting it unsquared leaves a
      // q^4-order mismatch.
      HpFloat d = poch(4, 4, true);
      return poch(3, 2, false) / (d * d);
    }
    case SeriesKind::S2: {
      HpFloat n = poch(2, 4, true);
      HpFloat d = poch(4, 4, true);
      return n * n / ((1 - q) * d * d);
    }
    case SeriesKind::S3:
    case SeriesKind::S4: {
      long m = id.kind == SeriesKind::S4 ? 0 : id.m;
      if (m < -2 || m > 2)
        throw std::invalid_argument("eval_product: product form needs -2 <= m <= 2");
      HpFloat n = poch(1, 2, false) * poch(6, 6, false) * poch(m + 3, 6, false) *
                  poch(3 - m, 6, false);
      HpFloat d = (1 - q) * poch(2, 2, false) * poch(3, 6, false) * poch(m + 6, 6, false) *
                  poch(6 - m, 6, false);
      return n / d;
    }
  }
  throw std::invalid_argument("eval_product: unknown series");
}

IdentityResult identity_check(const SeriesId& id, const HpFloat& q, const HpFloat& tolerance,
                              unsigned tail_digits) {
  IdentityResult r;
  r.series = eval_series(id, q, 1000, tail_digits);
  r.product = eval_product(id, q, 100000, tail_digits);
  r.error = abs(r.series - r.product);
  r.ok = r.error < tolerance;
  return r;
}

ZetaCheckResult zeta_pochhammer_check(long d, const HpFloat& tolerance) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("zeta_pochhammer_check: d must be odd, >= 3");
  HpComplex zeta = primitive_root_of_unity(d);
  ZetaCheckResult res;
  res.max_error = 0;
  const long spec[4][2] = {{1, 1}, {2, 2}, {1, 2}, {4, 4}};  // (base power, step power)
  for (const auto& bs : spec) {
    // prod_{i<d} (1 + zeta^{b + s i})
    HpComplex cur{HpFloat(1), HpFloat(0)};
    for (long e = 0; e < bs[0]; ++e) cur = cur * zeta;
    HpComplex step{HpFloat(1), HpFloat(0)};
    for (long e = 0; e < bs[1]; ++e) step = step * zeta;
    HpComplex prod{HpFloat(1), HpFloat(0)};
    for (long i = 0; i < d; ++i) {
      prod = prod * HpComplex{1 + cur.re, cur.im};
      cur = cur * step;
    }
    HpFloat err = (prod - HpComplex{HpFloat(2), HpFloat(0)}).abs_value();
    if (err > res.max_error) res.max_error = err;
  }
  res.ok = res.max_error < tolerance;
  return res;
}

RootLimitResult root_limit_check(SeriesKind kind, long d, long l, const HpFloat& tolerance) {
  if (kind != SeriesKind::S1 && kind != SeriesKind::S2)
    throw std::invalid_argument("root_limit_check: only the first two series have limit formulas");
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("root_limit_check: d must be odd, >= 3");
  if (l < 0) throw std::invalid_argument("root_limit_check: l must be nonnegative");

  RootLimitResult res;
  SeriesId id = kind == SeriesKind::S1 ? SeriesId::s1() : SeriesId::s2();
  const CycloProduct& t = term(id, l * d);
  RatFunc f = t.to_ratfunc();
  if (divisible_by_cyclotomic(f.den(), d)) {
    // The pole at the root survived reduction: the singularity is not
    // removable and the limit formula cannot hold. Report instead of
    // dividing by zero.
    res.non_removable = true;
    return res;
  }
  HpComplex zeta = primitive_root_of_unity(d);
  res.value = eval_at(f.num(), zeta) / eval_at(f.den(), zeta);
  Rational base = kind == SeriesKind::S1 ? Rational(-1, 8) : Rational(1, 4);
  res.target = pow_rat(base, l) * Rational(central_binomial(l));
  res.error = (res.value - HpComplex{to_hp(res.target), HpFloat(0)}).abs_value();
  res.ok = res.error < tolerance;
  return res;
}

CentralLimitResult central_limit_alternating(long terms, const HpFloat& tolerance) {
  CentralLimitResult res;
  Rational sum = 0;
  Rational weight = 1;
  for (long l = 0; l < terms; ++l) {
    sum += weight * Rational(central_binomial(l));
    weight *= Rational(-1, 8);
  }
  res.value = to_hp(sum);
  HpFloat target = sqrt(HpFloat(6)) / 3;
  res.error = abs(res.value - target);
  res.ok = res.error < tolerance;
  res.detail = "alternating central-binomial sum vs sqrt(6)/3";
  return res;
}

CentralLimitResult central_limit_divergence(long terms) {
  CentralLimitResult res;
  if (terms < 100) throw std::invalid_argument("central_limit_divergence: need >= 100 terms");
  // Terms are C(2l,l)/4^l ~ 1/sqrt(pi l), so partial sums grow like
  // 2 sqrt(terms/pi) and pass any bound; verify monotone growth and the
  // growth law rather than looping to astronomical lengths.
  HpFloat sum = 0;
  HpFloat weight = 1;
  bool monotone = true;
  for (long l = 0; l < terms; ++l) {
    HpFloat term = weight * to_hp(central_binomial(l));
    if (term <= 0) monotone = false;
    sum += term;
    weight /= 4;
  }
  res.value = sum;
  HpFloat asymptotic = 2 * sqrt(HpFloat(terms) / pi_hp());
  HpFloat ratio = sum / asymptotic;
  res.error = abs(ratio - 1);
  res.ok = monotone && res.error < HpFloat("0.05");
  res.detail = "partial sum " + sum.str(8) + " after " + std::to_string(terms) +
               " terms; asymptotic 2*sqrt(L/pi) = " + asymptotic.str(8) +
               "; exceeds 1000 by L ~ 785399";
  return res;
}

}  // namespace qsc
