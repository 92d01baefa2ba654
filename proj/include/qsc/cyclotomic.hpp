#pragma once

// q-integers [n], cyclotomic polynomials Phi_n, divisor enumeration and the
// Jacobi symbol: the number-theoretic vocabulary shared by all verifiers.

#include <vector>

#include "qsc/poly.hpp"

namespace qsc {

// [n] = 1 + q + ... + q^(n-1); [0] = 0.
const Poly& q_integer(long n);

// Phi_n(q), computed by the division recurrence
//   Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d
// and memoized. n >= 1.
const Poly& cyclotomic_poly(long n);

// All divisors of n in ascending order (n >= 1).
std::vector<long> divisors(long n);

// Euler totient by trial-division factorization.
long euler_phi(long n);

// Jacobi symbol (a/n) for odd n >= 1; throws std::invalid_argument otherwise.
int jacobi_symbol(long a, long n);

// True iff Phi_d | p. Reduces p modulo q^d - 1 first (a cheap fold), then
// modulo Phi_d, so no large intermediate coefficients appear.
bool divisible_by_cyclotomic(const Poly& p, long d);

// Multiplicity of Phi_d in p (p != 0), capped at `cap` when cap >= 0.
long cyclotomic_multiplicity(const Poly& p, long d, long cap = -1);

}  // namespace qsc
