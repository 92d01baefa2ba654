#include "qsc/padic.hpp"

#include <mutex>
#include <stdexcept>

namespace qsc {

namespace {

std::mutex cache_mutex;

// p-adic valuation of a nonzero integer.
long int_valuation(long p, const BigInt& x) {
  BigInt reduced;
  return static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), BigInt(p).get_mpz_t()));
}

void require_prime(long p, const char* who) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be prime");
}

}  // namespace

BigInt central_binomial(long k) {
  if (k < 0) throw std::invalid_argument("central_binomial: k must be nonnegative");
  static std::vector<BigInt> cache{BigInt(1)};
  std::lock_guard<std::mutex> lock(cache_mutex);
  while (static_cast<long>(cache.size()) <= k) {
    long i = static_cast<long>(cache.size());
    BigInt next = cache.back() * 2 * (2 * i - 1);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(i));
    cache.push_back(std::move(next));
  }
  return cache[static_cast<size_t>(k)];
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_below(long bound) {
  std::vector<long> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(static_cast<size_t>(bound), false);
  for (long i = 2; i < bound; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j < bound; j += i) composite[static_cast<size_t>(j)] = true;
  }
  return out;
}

namespace {

// sum_{j<=k} C(2j,j) C(2k-2j,k-j) (6j+1)(6k-6j+1)
BigInt inner_six(long k) {
  BigInt s = 0;
  for (long j = 0; j <= k; ++j)
    s += central_binomial(j) * central_binomial(k - j) * (6 * j + 1) * (6 * (k - j) + 1);
  return s;
}

// C(2j,j)^2 C(4j,2j) (8j+1) — the half of the cor4 summand indexed j.
BigInt half_eight(long j) {
  BigInt c = central_binomial(j);
  return c * c * central_binomial(2 * j) * (8 * j + 1);
}

PadicRational weighted_sum(long p, const Rational& ratio, BigInt (*inner)(long)) {
  Rational sum = 0;
  Rational weight = 1;
  for (long k = 0; k < p; ++k) {
    sum += weight * Rational(inner(k));
    weight *= ratio;
  }
  return {sum, p};
}

BigInt inner_eight(long k) {
  BigInt s = 0;
  for (long j = 0; j <= k; ++j) s += half_eight(j) * half_eight(k - j);
  return s;
}

}  // namespace

PadicRational cor1_sum(long p) {
  require_prime(p, "cor1_sum");
  if (p == 2) throw std::invalid_argument("cor1_sum: requires an odd prime");
  return weighted_sum(p, Rational(-1, 8), inner_six);
}

PadicRational cor2_sum(long p) {
  require_prime(p, "cor2_sum");
  if (p == 2) throw std::invalid_argument("cor2_sum: requires an odd prime");
  return weighted_sum(p, Rational(1, 4), inner_six);
}

PadicRational cor4_sum(long p) {
  require_prime(p, "cor4_sum");
  if (p <= 3) throw std::invalid_argument("cor4_sum: requires p > 3");
  return weighted_sum(p, Rational(1, 2304), inner_eight);  // 1/(2^8 3^2)
}

long padic_valuation(long p, const Rational& x) {
  if (sgn(x) == 0) throw std::invalid_argument("padic_valuation: x must be nonzero");
  require_prime(p, "padic_valuation");
  long num = int_valuation(p, x.get_num());
  // A canonical rational has coprime parts, so at most one side carries p.
  return num > 0 ? num : -int_valuation(p, x.get_den());
}

bool congruent_mod_prime_power(const Rational& x, const Rational& target, long p, long r) {
  require_prime(p, "congruent_mod_prime_power");
  if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)) ||
      mpz_divisible_ui_p(target.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::domain_error("congruent_mod_prime_power: p divides a denominator");
  Rational diff = x - target;
  if (sgn(diff) == 0) return true;
  return padic_valuation(p, diff) >= r;
}

std::vector<PrimeEvidence> conjecture_evidence(int which, const std::vector<long>& primes) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("conjecture_evidence: which must be 1 or 2");
  std::vector<PrimeEvidence> table;
  table.reserve(primes.size());
  for (long p : primes) {
    PadicRational s = which == 1 ? cor1_sum(p) : cor2_sum(p);
    Rational target = which == 1 ? Rational(-p, 2) : Rational(p);
    table.push_back({p, s.value, congruent_mod_prime_power(s.value, target, p, 2)});
  }
  return table;
}

}  // namespace qsc
