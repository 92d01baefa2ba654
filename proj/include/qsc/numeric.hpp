#pragma once

// High-precision floating checks: the series = product identities, the
// root-of-unity product values, and the central-binomial limit facts that the
// congruence proofs lean on. Everything numeric lives here; the rest of the
// project is exact.

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "qsc/qseries.hpp"

namespace qsc {

using HpFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

// Sets the working decimal precision for values constructed in scope and
// restores the previous setting on exit. Precision below 30 digits is
// rejected (the tolerances used here would be meaningless).
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

// Exact conversions (no decimal round trip).
HpFloat to_hp(const BigInt& x);
HpFloat to_hp(const Rational& x);

// Minimal complex pair over HpFloat; only what the root-of-unity checks use.
struct HpComplex {
  HpFloat re{0};
  HpFloat im{0};

  HpComplex operator+(const HpComplex& o) const { return {re + o.re, im + o.im}; }
  HpComplex operator-(const HpComplex& o) const { return {re - o.re, im - o.im}; }
  HpComplex operator*(const HpComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  HpComplex operator/(const HpComplex& o) const;
  HpFloat abs_value() const { return sqrt(re * re + im * im); }
};

// e^{2 pi i / d}
HpComplex primitive_root_of_unity(long d);

// Horner evaluation with exact coefficient conversion.
HpComplex eval_at(const Poly& p, const HpComplex& z);

// Partial sum of the first summands at real |q| < 1. Stops early once the
// next summand drops below 10^{-(tail_digits+10)} in magnitude (the q^{k^2}
// factors make the tail collapse geometrically); throws std::runtime_error
// if the terms grow instead.
HpFloat eval_series(const SeriesId& id, const HpFloat& q, long max_terms, unsigned tail_digits);

// The matching infinite-product side, truncated once the remaining factors
// differ from 1 by less than 10^{-(tail_digits+10)}.
HpFloat eval_product(const SeriesId& id, const HpFloat& q, long max_factors, unsigned tail_digits);

struct IdentityResult {
  HpFloat series;
  HpFloat product;
  HpFloat error;
  bool ok = false;
};

// Series vs product at one sample point.
IdentityResult identity_check(const SeriesId& id, const HpFloat& q, const HpFloat& tolerance,
                              unsigned tail_digits);

struct ZetaCheckResult {
  HpFloat max_error;
  bool ok = false;
};

// The four length-d products (-z;z)_d, (-z^2;z^2)_d, (-z;z^2)_d, (-z^4;z^4)_d
// at a primitive d-th root z, all of which equal 2 for odd d.
ZetaCheckResult zeta_pochhammer_check(long d, const HpFloat& tolerance);

struct RootLimitResult {
  bool non_removable = false;  // reduced denominator still vanishes at the root
  HpComplex value;
  Rational target;
  HpFloat error;
  bool ok = false;
};

// c_q(l*d) evaluated at a primitive d-th root of unity after exact
// normalization, against the central-binomial limit formula:
// S1: (-1/8)^l C(2l,l); S2: (1/4)^l C(2l,l). kind must be S1 or S2.
RootLimitResult root_limit_check(SeriesKind kind, long d, long l, const HpFloat& tolerance);

struct CentralLimitResult {
  HpFloat value;
  HpFloat error;
  bool ok = false;
  std::string detail;
};

// Partial sum of sum_l (-1/8)^l C(2l,l) against its closed value sqrt(6)/3.
CentralLimitResult central_limit_alternating(long terms, const HpFloat& tolerance);

// Divergence of sum_l (1/4)^l C(2l,l): partial sums are strictly increasing
// and track the 2 sqrt(l/pi) asymptotic, which exceeds any bound; `terms`
// partial sums are inspected and the growth law is reported in `detail`.
CentralLimitResult central_limit_divergence(long terms);

}  // namespace qsc
