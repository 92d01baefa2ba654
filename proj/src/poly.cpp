#include "qsc/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qsc {

Poly Poly::monomial(BigInt c, long exp) {
  if (c == 0) return Poly();
  std::vector<BigInt> v(static_cast<size_t>(exp) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<BigInt> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size()) v[i] = c_[i];
    if (i < o.c_.size()) v[i] += o.c_[i];
  }
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size()) v[i] = c_[i];
    if (i < o.c_.size()) v[i] -= o.c_[i];
  }
  return Poly(std::move(v));
}

Poly Poly::operator*(const BigInt& s) const {
  if (s == 0) return Poly();
  std::vector<BigInt> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
  return Poly(std::move(v));
}

namespace detail {

Poly mul_schoolbook(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<BigInt> v(ac.size() + bc.size() - 1);
  for (size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (size_t j = 0; j < bc.size(); ++j) {
      v[i + j] += ac[i] * bc[j];  // gmpxx folds this into mpz_addmul
    }
  }
  return Poly(std::move(v));
}

namespace {

// dst[offset..] += src
void add_at(std::vector<BigInt>& dst, const std::vector<BigInt>& src, size_t offset) {
  if (dst.size() < offset + src.size()) dst.resize(offset + src.size());
  for (size_t i = 0; i < src.size(); ++i) dst[offset + i] += src[i];
}

void sub_at(std::vector<BigInt>& dst, const std::vector<BigInt>& src, size_t offset) {
  if (dst.size() < offset + src.size()) dst.resize(offset + src.size());
  for (size_t i = 0; i < src.size(); ++i) dst[offset + i] -= src[i];
}

Poly slice(const std::vector<BigInt>& c, size_t from, size_t to) {
  if (from >= c.size()) return Poly();
  to = std::min(to, c.size());
  return Poly(std::vector<BigInt>(c.begin() + static_cast<long>(from),
                                  c.begin() + static_cast<long>(to)));
}

}  // namespace

Poly mul_karatsuba(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  const size_t n = std::max(ac.size(), bc.size());
  if (std::min(ac.size(), bc.size()) <= kKaratsubaThreshold) return mul_schoolbook(a, b);

  const size_t m = (n + 1) / 2;
  Poly a0 = slice(ac, 0, m), a1 = slice(ac, m, ac.size());
  Poly b0 = slice(bc, 0, m), b1 = slice(bc, m, bc.size());

  Poly z0 = a0 * b0;
  Poly z2 = a1 * b1;
  Poly z1 = (a0 + a1) * (b0 + b1);

  std::vector<BigInt> v(ac.size() + bc.size() - 1);
  add_at(v, z0.coeffs(), 0);
  add_at(v, z1.coeffs(), m);
  sub_at(v, z0.coeffs(), m);
  sub_at(v, z2.coeffs(), m);
  add_at(v, z2.coeffs(), 2 * m);
  return Poly(std::move(v));
}

}  // namespace detail

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (std::min(c_.size(), o.c_.size()) <= detail::kKaratsubaThreshold)
    return detail::mul_schoolbook(*this, o);
  return detail::mul_karatsuba(*this, o);
}

Poly Poly::shifted(long k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(static_cast<size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::unshifted(long k) const {
  if (is_zero() || k == 0) return *this;
  if (trailing_zeros() < k) throw NonIntegralDivision("unshifted: q^k does not divide operand");
  return Poly(std::vector<BigInt>(c_.begin() + k, c_.end()));
}

long Poly::trailing_zeros() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<long>(i);
  return 0;
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    g = qsc::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  BigInt g = content();
  if (g == 1) return *this;
  std::vector<BigInt> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] / g;
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

BigInt Poly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

namespace {

// Long division when the divisor's leading coefficient is a unit: stays in
// the integers throughout.
std::pair<Poly, Poly> divrem_unit_lc(const Poly& a, const Poly& b) {
  const long da = a.degree(), db = b.degree();
  const bool neg_lc = sgn(b.leading()) < 0;
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quo(static_cast<size_t>(da - db) + 1);
  const auto& bc = b.coeffs();
  for (long i = da - db; i >= 0; --i) {
    BigInt t = rem[static_cast<size_t>(i + db)];
    if (neg_lc) t = -t;
    if (t != 0) {
      for (long j = 0; j <= db; ++j) rem[static_cast<size_t>(i + j)] -= t * bc[static_cast<size_t>(j)];
    }
    quo[static_cast<size_t>(i)] = std::move(t);
  }
  rem.resize(static_cast<size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

// General divisor: run the division over the rationals, then demand
// integrality of both outputs.
std::pair<Poly, Poly> divrem_rational(const Poly& a, const Poly& b) {
  const long da = a.degree(), db = b.degree();
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quo(static_cast<size_t>(da - db) + 1);
  const Rational lc(b.leading());
  const auto& bc = b.coeffs();
  for (long i = da - db; i >= 0; --i) {
    Rational t = rem[static_cast<size_t>(i + db)] / lc;
    if (t != 0) {
      for (long j = 0; j <= db; ++j) rem[static_cast<size_t>(i + j)] -= t * Rational(bc[static_cast<size_t>(j)]);
    }
    quo[static_cast<size_t>(i)] = std::move(t);
  }
  auto to_int = [](std::vector<Rational>& v, const char* what) {
    std::vector<BigInt> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      if (!is_integer(v[i])) throw NonIntegralDivision(std::string("divrem: non-integral ") + what);
      out[i] = v[i].get_num();
    }
    return Poly(std::move(out));
  };
  rem.resize(static_cast<size_t>(db));
  Poly q = to_int(quo, "quotient");
  Poly r = to_int(rem, "remainder");
  return {std::move(q), std::move(r)};
}

}  // namespace

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PolyDivisionByZero();
  if (a.degree() < b.degree()) return {Poly(), a};
  if (b.leading() == 1 || b.leading() == -1) return divrem_unit_lc(a, b);
  return divrem_rational(a, b);
}

Poly divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PolyDivisionByZero();
  std::pair<Poly, Poly> qr;
  try {
    qr = divrem(a, b);
  } catch (const NonIntegralDivision&) {
    throw ExactDivisionFailed("divexact: quotient not integral");
  }
  if (!qr.second.is_zero()) throw ExactDivisionFailed("divexact: nonzero remainder");
  return std::move(qr.first);
}

bool divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) throw PolyDivisionByZero();
  if (a.is_zero()) return true;
  if (a.degree() < b.degree()) return false;
  // Rational-division remainder test; unit-lc divisors take the integer path.
  if (b.leading() == 1 || b.leading() == -1) return divrem_unit_lc(a, b).second.is_zero();
  const long da = a.degree(), db = b.degree();
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const Rational lc(b.leading());
  const auto& bc = b.coeffs();
  for (long i = da - db; i >= 0; --i) {
    Rational t = rem[static_cast<size_t>(i + db)] / lc;
    if (t != 0)
      for (long j = 0; j <= db; ++j) rem[static_cast<size_t>(i + j)] -= t * Rational(bc[static_cast<size_t>(j)]);
  }
  for (long j = 0; j < db; ++j)
    if (rem[static_cast<size_t>(j)] != 0) return false;
  return true;
}

namespace detail {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all integer.
Poly pseudo_rem(const Poly& a, const Poly& b) {
  Poly r = a;
  const long db = b.degree();
  const BigInt& lb = b.leading();
  long e = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    Poly t = Poly::monomial(r.leading(), r.degree() - db);
    r = r * lb - t * b;
    --e;
  }
  if (e > 0) r = r * pow_int(lb, static_cast<unsigned long>(e));
  return r;
}

}  // namespace detail

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
  auto normalize = [](Poly p) {
    p = p.primitive_part();
    if (!p.is_zero() && sgn(p.leading()) < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);

  Poly A = a.primitive_part();
  Poly B = b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  if (B.degree() == 0) return Poly(1L);

  // Subresultant polynomial remainder sequence (Cohen, Algorithm 3.3.1):
  // keeps coefficient growth polynomial instead of exponential.
  BigInt g = 1, h = 1;
  for (;;) {
    const long delta = A.degree() - B.degree();
    Poly R = detail::pseudo_rem(A, B);
    if (R.is_zero()) break;
    if (R.degree() == 0) return Poly(1L);
    A = std::move(B);
    BigInt divisor = g * pow_int(h, static_cast<unsigned long>(delta));
    if (divisor == 1) {
      B = std::move(R);
    } else {
      std::vector<BigInt> v(R.coeffs().size());
      for (size_t i = 0; i < v.size(); ++i) v[i] = R.coeffs()[i] / divisor;
      B = Poly(std::move(v));
    }
    g = A.leading();
    if (delta >= 1) {
      BigInt gd = pow_int(g, static_cast<unsigned long>(delta));
      h = (delta == 1) ? gd : gd / pow_int(h, static_cast<unsigned long>(delta - 1));
    }
  }
  return normalize(B);
}

}  // namespace qsc
