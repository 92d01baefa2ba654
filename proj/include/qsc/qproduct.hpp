#pragma once

// Factored arithmetic for q-series work.
//
// Every factor that appears in the series of interest — (1 - q^j), (1 + q^j),
// q-integers [n], powers of q, rational scalars — splits into cyclotomic
// polynomials:
//
//   1 - q^j  =  -prod_{d | j} Phi_d(q)          (j > 0)
//   1 + q^j  =   prod_{d | 2j, d !| j} Phi_d(q)  (j > 0)
//   [n]      =   prod_{d | n, d > 1} Phi_d(q)
//
// so a summand is scalar * q^e * prod Phi_d^{e_d} with integer exponents
// (negative ones give Laurent factors and denominators). CycloProduct holds
// that form: multiplication is exponent addition, and reducing a fraction
// against such a denominator is trial division by small monic cyclotomics
// instead of a general polynomial gcd.
//
// FactoredSum accumulates sums of such terms over a running least common
// denominator, keeping only the expanded numerator as a dense polynomial.

#include <map>
#include <string>
#include <vector>

#include "qsc/poly.hpp"
#include "qsc/ratfunc.hpp"

namespace qsc {

class CycloProduct {
 public:
  CycloProduct() = default;  // one

  static CycloProduct zero();
  static CycloProduct one() { return CycloProduct(); }
  static CycloProduct from_scalar(Rational s);
  static CycloProduct q_power(long e);
  static CycloProduct one_minus_q_pow(long j);   // any j, zero when j == 0
  static CycloProduct one_plus_q_pow(long j);    // any j, scalar 2 when j == 0
  static CycloProduct q_integer_factored(long n);  // [n], n >= 0
  static CycloProduct cyclotomic(long d, long exp = 1);

  bool is_zero() const { return zero_; }
  bool is_one() const;
  const Rational& scalar() const { return scalar_; }
  long q_exponent() const { return qexp_; }
  const std::map<long, long>& factors() const { return f_; }

  CycloProduct& operator*=(const CycloProduct& o);
  friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }

  CycloProduct inverse() const;  // throws ZeroDenominator on zero
  CycloProduct pow(long e) const;

  // Split into (numerator part, denominator part): both have nonnegative
  // exponents, nonnegative q-power, and scalar 1; the rational scalar is
  // reported separately by scalar(). zero splits as (zero, one).
  CycloProduct numerator_part() const;
  CycloProduct denominator_part() const;

  // Dense expansion. Requires scalar 1, qexp >= 0 and all exponents >= 0
  // (use the part splitters first); factors are multiplied smallest-degree
  // first through a pairing heap so large products stay balanced.
  Poly expand() const;

  RatFunc to_ratfunc() const;

  // Formal degree of the expansion: qexp + sum e_d * phi(d).
  long degree() const;

  std::string str() const;

  bool operator==(const CycloProduct& o) const;

 private:
  bool zero_ = false;
  Rational scalar_ = Rational(1);
  long qexp_ = 0;
  std::map<long, long> f_;  // d -> exponent, zero entries never stored
};

// A reduced fraction scale * num / den.expand() with `den` a denominator-form
// CycloProduct (scalar 1, nonnegative exponents).
struct FactoredValue {
  Rational scale = Rational(1);
  Poly num;
  CycloProduct den;

  RatFunc to_ratfunc() const;
};

class FactoredSum {
 public:
  FactoredSum() = default;

  void add(const CycloProduct& term);
  // Adds term * v for a factored term times an already-accumulated value
  // (used for Cauchy products of partial sums).
  void add_product(const CycloProduct& term, const FactoredValue& v);

  // Divides out of the numerator every cyclotomic and q-power the denominator
  // still holds, and renormalizes content. Called automatically every few
  // adds; idempotent.
  void reduce();

  bool is_zero() const { return num_.is_zero(); }
  FactoredValue value_parts();  // fully reduced snapshot
  RatFunc value();              // fully reduced, no polynomial gcd needed

 private:
  void add_fraction(const Rational& scale, Poly num, const CycloProduct& den);

  Rational scale_ = Rational(1);
  Poly num_;               // starts at zero
  CycloProduct den_;       // denominator form
  int adds_since_reduce_ = 0;
  static constexpr int kReduceEvery = 4;
};

// Congruence verdict for a reduced factored value against a polynomial
// modulus: UndefinedGcd when the denominator shares a cyclotomic (or q) with
// the modulus, otherwise a single remainder test of the numerator.
CongruenceVerdict congruent_factored_value(const FactoredValue& diff, const Poly& modulus,
                                           CongruenceWitness* witness = nullptr);

}  // namespace qsc
