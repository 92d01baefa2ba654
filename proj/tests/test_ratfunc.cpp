#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qsc/cyclotomic.hpp"
#include "qsc/ratfunc.hpp"

using namespace qsc;

namespace {

Poly random_poly(std::mt19937& rng, long max_degree) {
  std::uniform_int_distribution<long> deg(-1, max_degree);
  std::uniform_int_distribution<long> coeff(-6, 6);
  long d = deg(rng);
  std::vector<BigInt> c;
  for (long i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
  return Poly(std::move(c));
}

RatFunc random_ratfunc(std::mt19937& rng, long max_degree = 6) {
  Poly den;
  while (den.is_zero()) den = random_poly(rng, max_degree);
  return RatFunc(random_poly(rng, max_degree), den);
}

}  // namespace

TEST_CASE("normalization: reduced, canonical denominator") {
  // (q^2 - 1) / (q - 1) = q + 1
  RatFunc r(Poly::from_coeffs({-1, 0, 1}), Poly::from_coeffs({-1, 1}));
  CHECK(r.is_poly());
  CHECK(r.num() == Poly::from_coeffs({1, 1}));

  // content folds into the numerator-side rational scale consistently:
  // 2q / 4 and q / 2 normalize identically
  CHECK(RatFunc(Poly::from_coeffs({0, 2}), Poly(4L)) ==
        RatFunc(Poly::from_coeffs({0, 1}), Poly(2L)));

  // denominator sign is canonical
  CHECK(RatFunc(Poly(1L), Poly::from_coeffs({1, -2})) ==
        RatFunc(Poly(-1L), Poly::from_coeffs({-1, 2})));

  CHECK_THROWS_AS(RatFunc(Poly(1L), Poly()), ZeroDenominator);
}

TEST_CASE("normalization is idempotent on random inputs") {
  std::mt19937 rng(321);
  for (int t = 0; t < 200; ++t) {
    RatFunc r = random_ratfunc(rng);
    RatFunc again(r.num(), r.den());
    CHECK(again == r);
    CHECK(gcd(r.num().is_zero() ? r.den() : r.num(), r.den()).degree() == 0);
  }
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937 rng(1009);
  for (int t = 0; t < 120; ++t) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFunc());
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("evaluation and poles") {
  RatFunc r(Poly::from_coeffs({1, 1}), Poly::from_coeffs({-2, 1}));  // (q+1)/(q-2)
  CHECK(r.eval(Rational(3)) == Rational(4));
  CHECK_THROWS_AS(r.eval(Rational(2)), ZeroDenominator);
}

TEST_CASE("congruence: spec semantics") {
  const Poly m5 = q_integer(5);

  // A - B = [5] * anything (mod [5]) holds
  RatFunc a(q_integer(5) * Poly::from_coeffs({2, 3}));
  CHECK(congruent(a, RatFunc(), m5) == CongruenceVerdict::Holds);

  // remainder witness on failure
  CongruenceWitness w;
  RatFunc b(Poly::from_coeffs({0, 0, 1}));  // q^2
  CHECK(congruent(b, RatFunc(), m5, &w) == CongruenceVerdict::Fails);
  REQUIRE(w.remainder.has_value());
  CHECK(*w.remainder == Poly::from_coeffs({0, 0, 1}));

  // denominator sharing a factor with the modulus: undefined
  RatFunc c(Poly(1L), q_integer(5));
  CongruenceWitness w2;
  CHECK(congruent(c, RatFunc(), m5, &w2) == CongruenceVerdict::UndefinedGcd);
  REQUIRE(w2.gcd_obstruction.has_value());
  CHECK(w2.gcd_obstruction->degree() > 0);

  // unit modulus: everything holds
  CHECK(congruent(b, c, Poly(1L)) == CongruenceVerdict::Holds);
  CHECK(congruent(b, c, Poly(-7L)) == CongruenceVerdict::Holds);

  // zero modulus rejected
  CHECK_THROWS_AS(congruent(a, b, Poly()), InvalidModulus);

  // A = B trivially
  CHECK(congruent(a, a, m5) == CongruenceVerdict::Holds);
}

TEST_CASE("congruence is an equivalence compatible with arithmetic") {
  std::mt19937 rng(2718);
  const Poly mod = q_integer(7);
  auto holds = [&](const RatFunc& x, const RatFunc& y) {
    return congruent(x, y, mod) == CongruenceVerdict::Holds;
  };
  int used = 0;
  while (used < 60) {
    RatFunc a = random_ratfunc(rng, 5), b = random_ratfunc(rng, 5), c = random_ratfunc(rng, 5);
    // stay inside the well-defined region: denominators coprime to the modulus
    if (gcd(a.den(), mod).degree() > 0 || gcd(b.den(), mod).degree() > 0 ||
        gcd(c.den(), mod).degree() > 0)
      continue;
    ++used;
    CHECK(holds(a, a));
    if (holds(a, b)) CHECK(holds(b, a));
    if (holds(a, b) && holds(b, c)) CHECK(holds(a, c));
    // shifting both sides by a multiple of the modulus never changes verdicts
    RatFunc shift(mod * random_poly(rng, 3));
    CHECK(congruent(a + shift, b, mod) == congruent(a, b, mod));
    // congruences add
    if (holds(a, b)) {
      CHECK(holds(a + c, b + c));
      CHECK(holds(a * c, b * c));
    }
  }
}

TEST_CASE("factorwise congruence agrees with the expanded modulus") {
  std::mt19937 rng(555);
  // modulus [15] = Phi_3 Phi_5 Phi_15; same check, two routes
  std::vector<std::pair<long, long>> factors = {{3, 1}, {5, 1}, {15, 1}};
  const Poly expanded = q_integer(15);
  int used = 0;
  while (used < 80) {
    RatFunc a = random_ratfunc(rng, 10), b = random_ratfunc(rng, 10);
    CongruenceVerdict direct = congruent(a, b, expanded);
    CongruenceVerdict split = congruent_factorwise(a, b, factors);
    CHECK(direct == split);
    ++used;
    // also exercise a case guaranteed to hold
    RatFunc lift = b + RatFunc(expanded * random_poly(rng, 4));
    CHECK(congruent_factorwise(lift, b, factors) == CongruenceVerdict::Holds);
  }
  // multiplicity matters: q^2 - 2q + 1 = (q-1)^2 is 0 mod Phi_1 but not Phi_1^2... twice over
  Poly phi1_sq = cyclotomic_poly(1) * cyclotomic_poly(1);
  RatFunc f(cyclotomic_poly(1));
  CHECK(congruent_factorwise(f, RatFunc(), {{1, 1}}) == CongruenceVerdict::Holds);
  CHECK(congruent_factorwise(f, RatFunc(), {{1, 2}}) == CongruenceVerdict::Fails);
  CHECK(congruent(f, RatFunc(), phi1_sq) == CongruenceVerdict::Fails);
}
