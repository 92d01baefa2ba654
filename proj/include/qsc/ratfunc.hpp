#pragma once

// Rational functions over Q in one variable, kept normalized (reduced,
// positive-leading-coefficient monic-content denominator), plus the
// three-valued congruence test A == B (mod P) used throughout the engine.

#include <optional>
#include <stdexcept>
#include <string>

#include "qsc/poly.hpp"

namespace qsc {

struct ZeroDenominator : std::domain_error {
  explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

struct InvalidModulus : std::invalid_argument {
  explicit InvalidModulus(const std::string& what) : std::invalid_argument(what) {}
};

class RatFunc {
 public:
  RatFunc() : num_(), den_(BigInt(1)) {}
  RatFunc(Poly num, Poly den);          // normalizes
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(BigInt(1)) {}
  explicit RatFunc(const Rational& r);
  explicit RatFunc(long v) : num_(v), den_(BigInt(1)) {}

  static RatFunc from_poly(Poly p) { return RatFunc(std::move(p)); }

  // For fractions already known to be in lowest terms (e.g. produced from a
  // factored representation): skips the polynomial gcd, still fixes integer
  // content and denominator sign.
  static RatFunc from_reduced(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;  // throws ZeroDenominator at poles
  std::string str() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

enum class CongruenceVerdict { Holds, Fails, UndefinedGcd };

const char* to_string(CongruenceVerdict v);

// Evidence retained from a congruence check: on Fails, `remainder` is the
// nonzero residue num(A-B) mod P; on UndefinedGcd, `gcd_obstruction` is the
// nontrivial gcd(P, den(A-B)).
struct CongruenceWitness {
  std::optional<Poly> remainder;
  std::optional<Poly> gcd_obstruction;
};

// A == B (mod P) in Q(q): write A - B = N/D in lowest terms; the congruence
// holds iff P | N and gcd(P, D) = 1. A unit (degree-0) modulus makes every
// congruence hold; a zero modulus is rejected.
CongruenceVerdict congruent(const RatFunc& a, const RatFunc& b, const Poly& modulus,
                            CongruenceWitness* witness = nullptr);

// Diagnostic variant: checks each (factor, multiplicity) of the modulus given
// in cyclotomic-factored form, without expanding the product. Same semantics
// as `congruent` against the expanded modulus when the factors are pairwise
// coprime (cyclotomics are).
CongruenceVerdict congruent_factorwise(const RatFunc& a, const RatFunc& b,
                                       const std::vector<std::pair<long, long>>& cyclo_factors,
                                       CongruenceWitness* witness = nullptr);

}  // namespace qsc
