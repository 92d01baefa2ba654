#pragma once

// Exact rational arithmetic with p-adic valuation: the q -> 1 corollaries of
// the congruence family and the two conjectured mod-p^2 refinements.

#include <vector>

#include "qsc/bigint.hpp"

namespace qsc {

// A rational number read p-adically (denominators must stay coprime to p for
// congruence statements about it to make sense).
struct PadicRational {
  Rational value;
  long p = 2;
};

// C(2k, k), memoized, by the multiplicative recurrence
// C(2k,k) = C(2k-2,k-1) * 2(2k-1)/k.
BigInt central_binomial(long k);

bool is_prime(long n);
std::vector<long> primes_below(long bound);  // ascending, excludes bound

// sum_{k<p} (-1)^k/8^k sum_{j<=k} C(2j,j) C(2k-2j,k-j) (6j+1)(6k-6j+1)
PadicRational cor1_sum(long p);
// sum_{k<p} 1/4^k   sum_{j<=k} C(2j,j) C(2k-2j,k-j) (6j+1)(6k-6j+1)
PadicRational cor2_sum(long p);
// sum_{k<p} 1/(2^{8k} 3^{2k}) sum_{j<=k} C(2j,j)^2 C(4j,2j) (8j+1)
//                                        C(2k-2j,k-j)^2 C(4k-4j,2k-2j) (8k-8j+1)
PadicRational cor4_sum(long p);

// v_p(x), x != 0; negative when p divides the denominator.
long padic_valuation(long p, const Rational& x);

// x == target (mod p^r) read p-adically: v_p(x - target) >= r. Throws
// std::domain_error when p divides a denominator of x or target.
bool congruent_mod_prime_power(const Rational& x, const Rational& target, long p, long r);

inline bool congruent_mod_prime_power(const PadicRational& x, const Rational& target, long r) {
  return congruent_mod_prime_power(x.value, target, x.p, r);
}

struct PrimeEvidence {
  long p = 0;
  Rational value;
  bool ok = false;
};

// which = 1: cor1_sum(p) == -p/2 (mod p^2); which = 2: cor2_sum(p) == p
// (mod p^2). One row per prime, ascending. A failed row would contradict the
// conjectures' reported computational evidence, so callers are expected to
// surface it prominently.
std::vector<PrimeEvidence> conjecture_evidence(int which, const std::vector<long>& primes);

}  // namespace qsc
