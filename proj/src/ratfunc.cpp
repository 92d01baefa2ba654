#include "qsc/ratfunc.hpp"

#include <utility>

#include "qsc/cyclotomic.hpp"

namespace qsc {

namespace {

// Exact scalar division of every coefficient; c must divide the content.
Poly scale_down(const Poly& p, const BigInt& c) {
  std::vector<BigInt> v(p.coeffs());
  for (auto& x : v) x /= c;
  return Poly(std::move(v));
}

}  // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("RatFunc: zero denominator");
  normalize();
}

RatFunc::RatFunc(const Rational& r)
    : num_(BigInt(r.get_num())), den_(BigInt(r.get_den())) {}

RatFunc RatFunc::from_reduced(Poly num, Poly den) {
  if (den.is_zero()) throw ZeroDenominator("RatFunc: zero denominator");
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.num_.is_zero()) {
    r.den_ = Poly(BigInt(1));
    return r;
  }
  BigInt c = gcd(r.num_.content(), r.den_.content());
  if (sgn(r.den_.leading()) < 0) c = -c;
  if (c != 1) {
    r.num_ = scale_down(r.num_, c);
    r.den_ = scale_down(r.den_, c);
  }
  return r;
}

// Canonical form: gcd(num, den) constant, gcd(content(num), content(den)) = 1,
// den with positive leading coefficient. Equal fractions then compare equal
// representation-wise.
void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(BigInt(1));
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  BigInt c = gcd(num_.content(), den_.content());
  if (sgn(den_.leading()) < 0) c = -c;
  if (c != 1) {
    num_ = scale_down(num_, c);
    den_ = scale_down(den_, c);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ = num_ - o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.num_.is_zero()) throw ZeroDenominator("RatFunc: division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (sgn(d) == 0) throw ZeroDenominator("RatFunc::eval: pole at evaluation point");
  return num_.eval(x) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

const char* to_string(CongruenceVerdict v) {
  switch (v) {
    case CongruenceVerdict::Holds: return "holds";
    case CongruenceVerdict::Fails: return "fails";
    case CongruenceVerdict::UndefinedGcd: return "undefined_gcd";
  }
  return "?";
}

CongruenceVerdict congruent(const RatFunc& a, const RatFunc& b, const Poly& modulus,
                            CongruenceWitness* witness) {
  if (modulus.is_zero()) throw InvalidModulus("congruent: zero modulus");
  if (modulus.is_constant()) return CongruenceVerdict::Holds;  // unit modulus
  RatFunc diff = a - b;
  Poly g = gcd(modulus, diff.den());
  if (!g.is_constant()) {
    if (witness) witness->gcd_obstruction = g;
    return CongruenceVerdict::UndefinedGcd;
  }
  if (diff.is_zero()) return CongruenceVerdict::Holds;
  const BigInt& lc = modulus.leading();
  if (lc == 1 || lc == -1) {
    Poly rem = divrem(diff.num(), modulus).second;
    if (rem.is_zero()) return CongruenceVerdict::Holds;
    if (witness) witness->remainder = rem;
  } else {
    // Divisibility over the rationals; the pseudo-remainder is an integer
    // multiple of the true remainder and serves as the witness.
    if (divides(modulus, diff.num())) return CongruenceVerdict::Holds;
    if (witness) witness->remainder = detail::pseudo_rem(diff.num(), modulus);
  }
  return CongruenceVerdict::Fails;
}

CongruenceVerdict congruent_factorwise(const RatFunc& a, const RatFunc& b,
                                       const std::vector<std::pair<long, long>>& cyclo_factors,
                                       CongruenceWitness* witness) {
  RatFunc diff = a - b;
  for (const auto& [d, mult] : cyclo_factors) {
    if (mult <= 0) throw InvalidModulus("congruent_factorwise: nonpositive multiplicity");
    if (divisible_by_cyclotomic(diff.den(), d)) {
      if (witness) witness->gcd_obstruction = cyclotomic_poly(d);
      return CongruenceVerdict::UndefinedGcd;
    }
    if (diff.is_zero()) continue;
    if (cyclotomic_multiplicity(diff.num(), d, mult) < mult) {
      if (witness) witness->remainder = divrem(diff.num(), cyclotomic_poly(d)).second;
      return CongruenceVerdict::Fails;
    }
  }
  return CongruenceVerdict::Holds;
}

}  // namespace qsc
