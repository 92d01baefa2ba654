#include "qsc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qsc {

namespace {

std::mutex cache_mutex;
std::map<long, Poly> q_integer_cache;   // append-only
std::map<long, Poly> cyclotomic_cache;  // append-only

Poly make_q_integer(long n) {
  return Poly(std::vector<BigInt>(static_cast<size_t>(n), BigInt(1)));
}

Poly q_pow_minus_one(long n) {
  std::vector<BigInt> v(static_cast<size_t>(n) + 1);
  v[0] = -1;
  v.back() = 1;
  return Poly(std::move(v));
}

}  // namespace

const Poly& q_integer(long n) {
  if (n < 0) throw std::invalid_argument("q_integer: n must be nonnegative");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = q_integer_cache.find(n);
  if (it == q_integer_cache.end()) it = q_integer_cache.emplace(n, make_q_integer(n)).first;
  return it->second;
}

const Poly& cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cyclotomic_cache.find(n);
  if (it != cyclotomic_cache.end()) return it->second;
  // Fill every divisor bottom-up so the recurrence only sees cached values.
  for (long d : divisors(n)) {
    if (cyclotomic_cache.count(d)) continue;
    Poly num = q_pow_minus_one(d);
    for (long e : divisors(d)) {
      if (e == d) continue;
      num = divexact(num, cyclotomic_cache.at(e));
    }
    cyclotomic_cache.emplace(d, std::move(num));
  }
  return cyclotomic_cache.at(n);
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

int jacobi_symbol(long a, long n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("jacobi_symbol: n must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

bool divisible_by_cyclotomic(const Poly& p, long d) {
  if (p.is_zero()) return true;
  const Poly& phi = cyclotomic_poly(d);
  if (p.degree() < phi.degree()) return false;
  // p mod (q^d - 1): fold coefficient i onto i mod d. Phi_d | q^d - 1, so
  // divisibility by Phi_d survives the fold.
  std::vector<BigInt> folded(static_cast<size_t>(d));
  const auto& c = p.coeffs();
  for (size_t i = 0; i < c.size(); ++i) folded[i % static_cast<size_t>(d)] += c[i];
  return divrem(Poly(std::move(folded)), phi).second.is_zero();
}

long cyclotomic_multiplicity(const Poly& p, long d, long cap) {
  if (p.is_zero()) throw std::invalid_argument("cyclotomic_multiplicity of zero polynomial");
  long count = 0;
  Poly cur = p;
  while ((cap < 0 || count < cap) && divisible_by_cyclotomic(cur, d)) {
    cur = divexact(cur, cyclotomic_poly(d));
    ++count;
  }
  return count;
}

}  // namespace qsc
