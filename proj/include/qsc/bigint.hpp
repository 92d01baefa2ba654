#pragma once

// Arbitrary-precision integer/rational carriers (GMP) plus a few small
// helpers shared by every module.

#include <gmpxx.h>

#include <string>

namespace qsc {

using BigInt = mpz_class;
using Rational = mpq_class;

inline int sgn(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

inline bool is_integer(const Rational& x) {
  return mpz_cmp_ui(x.get_den().get_mpz_t(), 1) == 0;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rat(const Rational& base, long e) {
  if (e >= 0) {
    Rational r(pow_int(base.get_num(), static_cast<unsigned long>(e)),
               pow_int(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  Rational r(pow_int(base.get_den(), static_cast<unsigned long>(-e)),
             pow_int(base.get_num(), static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

}  // namespace qsc
