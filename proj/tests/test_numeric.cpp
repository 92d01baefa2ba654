#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qsc/numeric.hpp"

using namespace qsc;

namespace {

HpFloat tol_digits(unsigned d) { return pow(HpFloat(10), -static_cast<int>(d)); }

}  // namespace

TEST_CASE("scoped precision guards the working digits") {
  ScopedPrecision outer(50);
  CHECK(HpFloat::default_precision() == 50);
  {
    ScopedPrecision inner(100);
    CHECK(HpFloat::default_precision() == 100);
  }
  CHECK(HpFloat::default_precision() == 50);
  CHECK_THROWS_AS(ScopedPrecision(10), std::invalid_argument);
}

TEST_CASE("exact conversions avoid the decimal round trip") {
  ScopedPrecision prec(50);
  // 1/3 converted exactly equals the high-precision quotient, not the double.
  HpFloat third = to_hp(Rational(1, 3));
  CHECK(abs(third - HpFloat(1) / HpFloat(3)) < tol_digits(49));
  CHECK(abs(third - HpFloat(1.0 / 3.0)) > tol_digits(20));
  CHECK(to_hp(BigInt("123456789012345678901234567890")) ==
        HpFloat("123456789012345678901234567890"));
  CHECK(to_hp(Rational(-7, 2)) == HpFloat("-3.5"));
}

TEST_CASE("complex helper arithmetic") {
  ScopedPrecision prec(50);
  const HpComplex a{HpFloat(1), HpFloat(2)};
  const HpComplex b{HpFloat(3), HpFloat(-1)};
  // (1+2i)/(3-i) = (1+7i)/10
  HpComplex q = a / b;
  CHECK(abs(q.re - HpFloat(1) / 10) < tol_digits(45));
  CHECK(abs(q.im - HpFloat(7) / 10) < tol_digits(45));
  HpComplex p = a * b;  // (1+2i)(3-i) = 5+5i
  CHECK(abs(p.re - 5) < tol_digits(45));
  CHECK(abs(p.im - 5) < tol_digits(45));
  CHECK(abs(a.abs_value() - sqrt(HpFloat(5))) < tol_digits(45));

  // i^4 = 1 via the primitive 4th root.
  HpComplex i4 = primitive_root_of_unity(4);
  CHECK(abs(i4.re) < tol_digits(45));
  CHECK(abs(i4.im - 1) < tol_digits(45));
  HpComplex acc{HpFloat(1), HpFloat(0)};
  for (int t = 0; t < 4; ++t) acc = acc * i4;
  CHECK(abs(acc.re - 1) < tol_digits(40));
  CHECK(abs(acc.im) < tol_digits(40));
}

TEST_CASE("polynomial evaluation at complex points matches Horner by hand") {
  ScopedPrecision prec(50);
  // p(q) = q^2 + 1 at q = i vanishes.
  Poly p = Poly::monomial(1, 2) + Poly(1);
  HpComplex at_i = eval_at(p, primitive_root_of_unity(4));
  CHECK(at_i.abs_value() < tol_digits(40));
  // p at 2: 5.
  HpComplex at_two = eval_at(p, HpComplex{HpFloat(2), HpFloat(0)});
  CHECK(abs(at_two.re - 5) < tol_digits(40));
}

TEST_CASE("series evaluation basics") {
  ScopedPrecision prec(50);
  // Only the k=0 summand survives at q=0 and it is 1 for every family.
  CHECK(eval_series(SeriesId::s1(), HpFloat(0), 10, 25) == 1);
  CHECK(eval_series(SeriesId::s2(), HpFloat(0), 10, 25) == 1);
  CHECK(eval_series(SeriesId::s3(1), HpFloat(0), 10, 25) == 1);
  CHECK(eval_series(SeriesId::s4(), HpFloat(0), 10, 25) == 1);
  // q^{1-m} with m = 2 puts a negative power of q in a factor base, so the
  // literal evaluation at q = 0 is rejected rather than returning garbage.
  CHECK_THROWS_AS(eval_series(SeriesId::s3(2), HpFloat(0), 10, 25), std::invalid_argument);

  // The q^{k^2} decay makes the tail negligible: adding one more term at
  // moderate q does not move the value at this precision.
  HpFloat a = eval_series(SeriesId::s1(), HpFloat("0.2"), 100, 25);
  HpFloat b = eval_series(SeriesId::s1(), HpFloat("0.2"), 101, 25);
  CHECK(abs(a - b) < tol_digits(30));

  CHECK_THROWS_AS(eval_series(SeriesId::s1(), HpFloat(1), 10, 25), std::invalid_argument);
  CHECK_THROWS_AS(eval_series(SeriesId::s2(), HpFloat("-1.5"), 10, 25), std::invalid_argument);
}

TEST_CASE("series equals product at sample points") {
  ScopedPrecision prec(50);
  const HpFloat tol = tol_digits(25);
  struct Sample {
    SeriesId id;
    const char* q;
  };
  const Sample samples[] = {
      {SeriesId::s1(), "0.1"}, {SeriesId::s2(), "0.3"},   {SeriesId::s3(1), "0.2"},
      {SeriesId::s3(2), "0.05"}, {SeriesId::s4(), "0.25"},
  };
  for (const auto& s : samples) {
    CAPTURE(s.id.str());
    CAPTURE(s.q);
    IdentityResult r = identity_check(s.id, HpFloat(s.q), tol, 25);
    CHECK(r.ok);
    CHECK(r.error < tol);
    CHECK(abs(r.series - r.product) == r.error);
  }
}

TEST_CASE("identity residual is stable under precision doubling") {
  HpFloat coarse, fine;
  {
    ScopedPrecision prec(50);
    coarse = identity_check(SeriesId::s2(), HpFloat("0.2"), tol_digits(25), 25).series;
  }
  {
    ScopedPrecision prec(100);
    fine = identity_check(SeriesId::s2(), HpFloat("0.2"), tol_digits(50), 50).series;
  }
  // The two runs agree to nearly the coarser precision (a few digits are
  // lost to accumulation): the residual is roundoff, not a discrepancy.
  ScopedPrecision prec(100);
  CHECK(abs(coarse - fine) < tol_digits(43));
}

TEST_CASE("root-of-unity pochhammer products all collapse to 2") {
  ScopedPrecision prec(50);
  for (long d : {3L, 5L, 9L, 15L}) {
    CAPTURE(d);
    ZetaCheckResult r = zeta_pochhammer_check(d, tol_digits(30));
    CHECK(r.ok);
    CHECK(r.max_error < tol_digits(30));
  }
  CHECK_THROWS_AS(zeta_pochhammer_check(4, tol_digits(30)), std::invalid_argument);
  CHECK_THROWS_AS(zeta_pochhammer_check(1, tol_digits(30)), std::invalid_argument);
}

TEST_CASE("root-of-unity limits hit the central-binomial weights") {
  ScopedPrecision prec(50);
  const HpFloat tol = tol_digits(10);

  // l = 0 term is 1 for both families.
  RootLimitResult unit = root_limit_check(SeriesKind::S1, 3, 0, tol);
  CHECK(unit.ok);
  CHECK(unit.target == Rational(1));

  // S1 at d=3, l=2: (-1/8)^2 C(4,2) = 6/64 = 3/32.
  RootLimitResult s1 = root_limit_check(SeriesKind::S1, 3, 2, tol);
  CHECK(s1.ok);
  CHECK(s1.target == Rational(3, 32));
  CHECK(s1.error < tol);

  // S2 at d=5, l=1: (1/4) C(2,1) = 1/2.
  RootLimitResult s2 = root_limit_check(SeriesKind::S2, 5, 1, tol);
  CHECK(s2.ok);
  CHECK(s2.target == Rational(1, 2));

  // The singularity at the root is removable: after reduction the
  // denominator no longer vanishes there, so evaluation proceeded.
  CHECK(!unit.non_removable);
  CHECK(!s1.non_removable);
  CHECK(!s2.non_removable);
  CHECK(s2.error < tol);

  CHECK_THROWS_AS(root_limit_check(SeriesKind::S3, 3, 1, tol), std::invalid_argument);
  CHECK_THROWS_AS(root_limit_check(SeriesKind::S1, 4, 1, tol), std::invalid_argument);
  CHECK_THROWS_AS(root_limit_check(SeriesKind::S1, 3, -1, tol), std::invalid_argument);
}

TEST_CASE("alternating central-binomial sum converges to sqrt(6)/3") {
  ScopedPrecision prec(50);
  CentralLimitResult r = central_limit_alternating(60, tol_digits(8));
  CHECK(r.ok);
  CHECK(r.error < tol_digits(8));
  ScopedPrecision fine(60);
  CHECK(abs(r.value - sqrt(HpFloat(6)) / 3) < tol_digits(7));
}

TEST_CASE("positive central-binomial sum grows without bound") {
  ScopedPrecision prec(50);
  CentralLimitResult r = central_limit_divergence(10000);
  CHECK(r.ok);
  CHECK(r.value > 100);  // the partial sum is already far past any small bound
  CHECK(!r.detail.empty());
  CHECK(r.detail.find("1000") != std::string::npos);
  CHECK_THROWS_AS(central_limit_divergence(50), std::invalid_argument);
}
