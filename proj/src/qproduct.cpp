#include "qsc/qproduct.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qsc/cyclotomic.hpp"

namespace qsc {

CycloProduct CycloProduct::zero() {
  CycloProduct p;
  p.zero_ = true;
  p.scalar_ = 0;
  return p;
}

CycloProduct CycloProduct::from_scalar(Rational s) {
  if (sgn(s) == 0) return zero();
  CycloProduct p;
  p.scalar_ = std::move(s);
  return p;
}

CycloProduct CycloProduct::q_power(long e) {
  CycloProduct p;
  p.qexp_ = e;
  return p;
}

CycloProduct CycloProduct::cyclotomic(long d, long exp) {
  if (d < 1) throw std::invalid_argument("CycloProduct::cyclotomic: index must be positive");
  CycloProduct p;
  if (exp != 0) p.f_.emplace(d, exp);
  return p;
}

CycloProduct CycloProduct::one_minus_q_pow(long j) {
  if (j == 0) return zero();
  CycloProduct p;
  long e = j;
  if (j < 0) {
    // 1 - q^j = q^j * (q^-j - 1) = q^j * prod_{d | -j} Phi_d
    e = -j;
    p.qexp_ = j;
  } else {
    p.scalar_ = -1;
  }
  for (long d : divisors(e)) p.f_.emplace(d, 1);
  return p;
}

CycloProduct CycloProduct::one_plus_q_pow(long j) {
  if (j == 0) return from_scalar(Rational(2));
  CycloProduct p;
  long e = j;
  if (j < 0) {
    e = -j;
    p.qexp_ = j;  // 1 + q^j = q^j * (1 + q^-j)
  }
  for (long d : divisors(2 * e))
    if (e % d != 0) p.f_.emplace(d, 1);
  return p;
}

CycloProduct CycloProduct::q_integer_factored(long n) {
  if (n < 0) throw std::invalid_argument("q_integer_factored: n must be nonnegative");
  if (n == 0) return zero();
  CycloProduct p;
  for (long d : divisors(n))
    if (d > 1) p.f_.emplace(d, 1);
  return p;
}

bool CycloProduct::is_one() const {
  return !zero_ && scalar_ == 1 && qexp_ == 0 && f_.empty();
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& o) {
  if (zero_ || o.zero_) {
    *this = zero();
    return *this;
  }
  scalar_ *= o.scalar_;
  qexp_ += o.qexp_;
  for (const auto& [d, e] : o.f_) {
    long& mine = f_[d];
    mine += e;
    if (mine == 0) f_.erase(d);
  }
  return *this;
}

CycloProduct CycloProduct::inverse() const {
  if (zero_) throw ZeroDenominator("CycloProduct::inverse of zero");
  CycloProduct p;
  p.scalar_ = Rational(1) / scalar_;
  p.qexp_ = -qexp_;
  for (const auto& [d, e] : f_) p.f_.emplace(d, -e);
  return p;
}

CycloProduct CycloProduct::pow(long e) const {
  if (e == 0) return one();
  if (zero_) {
    if (e < 0) throw ZeroDenominator("CycloProduct::pow of zero with negative exponent");
    return zero();
  }
  CycloProduct base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  CycloProduct p;
  p.scalar_ = pow_rat(base.scalar_, e);
  p.qexp_ = base.qexp_ * e;
  for (const auto& [d, k] : base.f_) p.f_.emplace(d, k * e);
  return p;
}

CycloProduct CycloProduct::numerator_part() const {
  if (zero_) return zero();
  CycloProduct p;
  if (qexp_ > 0) p.qexp_ = qexp_;
  for (const auto& [d, e] : f_)
    if (e > 0) p.f_.emplace(d, e);
  return p;
}

CycloProduct CycloProduct::denominator_part() const {
  CycloProduct p;
  if (zero_) return p;
  if (qexp_ < 0) p.qexp_ = -qexp_;
  for (const auto& [d, e] : f_)
    if (e < 0) p.f_.emplace(d, -e);
  return p;
}

Poly CycloProduct::expand() const {
  if (zero_) return Poly();
  if (scalar_ != 1) throw std::logic_error("CycloProduct::expand: scalar must be 1");
  if (qexp_ < 0) throw std::logic_error("CycloProduct::expand: negative power of q");
  // Balanced product: always multiply the two smallest operands, so the work
  // stays near one full-size multiplication instead of a linear chain.
  std::multimap<long, Poly> heap;
  for (const auto& [d, e] : f_) {
    if (e < 0) throw std::logic_error("CycloProduct::expand: negative exponent");
    const Poly& phi = cyclotomic_poly(d);
    for (long i = 0; i < e; ++i) heap.emplace(phi.degree(), phi);
  }
  Poly result(BigInt(1));
  if (!heap.empty()) {
    while (heap.size() > 1) {
      auto n1 = heap.extract(heap.begin());
      auto n2 = heap.extract(heap.begin());
      Poly prod = n1.mapped() * n2.mapped();
      long deg = prod.degree();
      heap.emplace(deg, std::move(prod));
    }
    result = std::move(heap.begin()->second);
  }
  return qexp_ > 0 ? result.shifted(qexp_) : result;
}

RatFunc CycloProduct::to_ratfunc() const {
  if (zero_) return RatFunc();
  Poly num = numerator_part().expand() * BigInt(scalar_.get_num());
  Poly den = denominator_part().expand() * BigInt(scalar_.get_den());
  return RatFunc::from_reduced(std::move(num), std::move(den));
}

long CycloProduct::degree() const {
  if (zero_) return -1;
  long deg = qexp_;
  for (const auto& [d, e] : f_) deg += e * euler_phi(d);
  return deg;
}

std::string CycloProduct::str() const {
  if (zero_) return "0";
  std::ostringstream out;
  out << scalar_.get_str();
  if (qexp_ != 0) out << " * q^" << qexp_;
  for (const auto& [d, e] : f_) {
    out << " * Phi_" << d;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

bool CycloProduct::operator==(const CycloProduct& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return scalar_ == o.scalar_ && qexp_ == o.qexp_ && f_ == o.f_;
}

namespace {

// Pointwise max of two denominator-form products (least common denominator).
CycloProduct lcm_den(const CycloProduct& a, const CycloProduct& b) {
  CycloProduct r = CycloProduct::q_power(std::max(a.q_exponent(), b.q_exponent()));
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      r *= CycloProduct::cyclotomic(ia->first, ia->second);
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      r *= CycloProduct::cyclotomic(ib->first, ib->second);
      ++ib;
    } else {
      r *= CycloProduct::cyclotomic(ia->first, std::max(ia->second, ib->second));
      ++ia, ++ib;
    }
  }
  return r;
}

// a / b for denominator-form products with b dividing a pointwise.
CycloProduct den_quotient(const CycloProduct& a, const CycloProduct& b) {
  CycloProduct r = CycloProduct::q_power(a.q_exponent() - b.q_exponent());
  for (const auto& [d, e] : a.factors()) {
    auto it = b.factors().find(d);
    long rest = e - (it == b.factors().end() ? 0 : it->second);
    if (rest != 0) r *= CycloProduct::cyclotomic(d, rest);
  }
  return r;
}

}  // namespace

RatFunc FactoredValue::to_ratfunc() const {
  if (num.is_zero() || sgn(scale) == 0) return RatFunc();
  Poly n = num * BigInt(scale.get_num());
  Poly d = den.expand() * BigInt(scale.get_den());
  return RatFunc::from_reduced(std::move(n), std::move(d));
}

void FactoredSum::add(const CycloProduct& term) {
  if (term.is_zero()) return;
  add_fraction(term.scalar(), term.numerator_part().expand(), term.denominator_part());
}

void FactoredSum::add_product(const CycloProduct& term, const FactoredValue& v) {
  if (term.is_zero() || v.num.is_zero() || sgn(v.scale) == 0) return;
  Poly num = term.numerator_part().expand() * v.num;
  add_fraction(term.scalar() * v.scale, std::move(num), term.denominator_part() * v.den);
}

void FactoredSum::add_fraction(const Rational& scale, Poly num, const CycloProduct& den) {
  if (num.is_zero() || sgn(scale) == 0) return;
  if (num_.is_zero()) {
    scale_ = scale;
    num_ = std::move(num);
    den_ = den;
    adds_since_reduce_ = 0;
    return;
  }
  CycloProduct new_den = lcm_den(den_, den);
  CycloProduct a = den_quotient(new_den, den_);
  CycloProduct b = den_quotient(new_den, den);
  Poly left = a.is_one() ? std::move(num_) : num_ * a.expand();
  Poly right = b.is_one() ? std::move(num) : num * b.expand();

  BigInt l = lcm(BigInt(scale_.get_den()), BigInt(scale.get_den()));
  BigInt c1 = BigInt(scale_.get_num()) * (l / BigInt(scale_.get_den()));
  BigInt c2 = BigInt(scale.get_num()) * (l / BigInt(scale.get_den()));
  num_ = left * c1 + right * c2;
  scale_ = Rational(1, l);
  den_ = std::move(new_den);
  if (++adds_since_reduce_ >= kReduceEvery) reduce();
}

void FactoredSum::reduce() {
  adds_since_reduce_ = 0;
  if (num_.is_zero()) {
    scale_ = 1;
    den_ = CycloProduct::one();
    return;
  }
  // Shared powers of q.
  long qe = std::min(num_.trailing_zeros(), den_.q_exponent());
  if (qe > 0) num_ = num_.unshifted(qe);
  // Trial-divide each cyclotomic still in the denominator out of the
  // numerator; each factor is irreducible, so this is an exact gcd.
  CycloProduct new_den = CycloProduct::q_power(den_.q_exponent() - qe);
  for (const auto& [d, e] : den_.factors()) {
    long left = e;
    while (left > 0 && divisible_by_cyclotomic(num_, d)) {
      num_ = divexact(num_, cyclotomic_poly(d));
      --left;
    }
    if (left > 0) new_den *= CycloProduct::cyclotomic(d, left);
  }
  den_ = std::move(new_den);
  // Fold integer content and sign into the scalar.
  BigInt c = num_.content();
  if (sgn(num_.leading()) < 0) c = -c;
  if (c != 1) {
    std::vector<BigInt> v(num_.coeffs());
    for (auto& x : v) x /= c;
    num_ = Poly(std::move(v));
    scale_ *= Rational(c);
  }
}

FactoredValue FactoredSum::value_parts() {
  reduce();
  return FactoredValue{scale_, num_, den_};
}

RatFunc FactoredSum::value() {
  reduce();
  if (num_.is_zero()) return RatFunc();
  Poly n = num_ * BigInt(scale_.get_num());
  Poly d = den_.expand() * BigInt(scale_.get_den());
  return RatFunc::from_reduced(std::move(n), std::move(d));
}

CongruenceVerdict congruent_factored_value(const FactoredValue& diff, const Poly& modulus,
                                           CongruenceWitness* witness) {
  if (modulus.is_zero()) throw InvalidModulus("congruent: zero modulus");
  if (modulus.is_constant()) return CongruenceVerdict::Holds;
  if (!diff.num.is_zero() && sgn(diff.scale) != 0) {
    for (const auto& [d, e] : diff.den.factors()) {
      (void)e;
      if (divisible_by_cyclotomic(modulus, d)) {
        if (witness) witness->gcd_obstruction = cyclotomic_poly(d);
        return CongruenceVerdict::UndefinedGcd;
      }
    }
    if (diff.den.q_exponent() > 0 && modulus[0] == 0) {
      if (witness) witness->gcd_obstruction = Poly::monomial(BigInt(1), 1);
      return CongruenceVerdict::UndefinedGcd;
    }
  }
  if (diff.num.is_zero() || sgn(diff.scale) == 0) return CongruenceVerdict::Holds;
  const BigInt& lc = modulus.leading();
  if (lc == 1 || lc == -1) {
    Poly rem = divrem(diff.num, modulus).second;
    if (rem.is_zero()) return CongruenceVerdict::Holds;
    if (witness) witness->remainder = rem;
  } else {
    if (divides(modulus, diff.num)) return CongruenceVerdict::Holds;
    if (witness) witness->remainder = detail::pseudo_rem(diff.num, modulus);
  }
  return CongruenceVerdict::Fails;
}

}  // namespace qsc
