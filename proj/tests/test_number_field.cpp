#include "doctest.h"

#include <random>

#include "betadyn/error.hpp"
#include "betadyn/number_field.hpp"

using namespace betadyn;

namespace {

NumberField golden() { return NumberField::make(MinimalPolynomial::parse("-1,-1,1")); }

// Plain double bisection, independent of the exact machinery.
double bisect(double (*f)(double), double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(lo) < 0) == (f(mid) < 0)) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("make_field isolates the base") {
  auto f = golden();
  CHECK(f.degree() == 2);
  CHECK(f.irreducibility_verified());
  CHECK(f.beta_interval().lo >= Rational(16180, 10000));
  CHECK(f.beta_interval().hi <= Rational(16181, 10000));

  auto trib = NumberField::make(MinimalPolynomial::parse("-1,-1,-1,1"));
  const double oracle = bisect([](double x) { return x * x * x - x * x - x - 1; }, 1, 2);
  CHECK(trib.beta_interval().lo >= Rational(18392, 10000));
  CHECK(trib.beta_interval().hi <= Rational(18393, 10000));
  CHECK(trib.beta_approx() == doctest::Approx(oracle).epsilon(1e-14));
}

TEST_CASE("make_field errors") {
  CHECK(kind_of([] { NumberField::make(MinimalPolynomial::parse("-2,1")); }) == ErrorKind::NoRootInRange);
  CHECK(kind_of([] { NumberField::make(MinimalPolynomial::parse("-3,2")); }) == ErrorKind::InvalidPolynomial);
  // (x^2 - x - 1)(x^2 + 1)
  CHECK(kind_of([] { NumberField::make(MinimalPolynomial::parse("-1,-1,0,-1,1")); }) == ErrorKind::NotIrreducible);
  // (x^2 - x - 1)(x^3 + x + 1)
  CHECK(kind_of([] { NumberField::make(MinimalPolynomial::parse("-1,-2,0,0,-1,1")); }) == ErrorKind::NotIrreducible);
  CHECK(kind_of([] { MinimalPolynomial::parse("1,x,2"); }) == ErrorKind::InvalidPolynomial);
}

TEST_CASE("minimal polynomial round trip") {
  auto mp = MinimalPolynomial::parse(" -1, -1 ,1");
  CHECK(mp.to_csv() == "-1,-1,1");
  CHECK(nbonacci_polynomial(3).to_csv() == "-1,-1,-1,1");
}

TEST_CASE("is_pisot") {
  auto g = is_pisot(golden());
  CHECK(g.is_pisot);
  CHECK(g.eta_upper > Rational(618, 1000));
  CHECK(g.eta_upper < Rational(6181, 10000));

  auto quartic = is_pisot(NumberField::make(MinimalPolynomial::parse("-1,0,0,-1,1")));
  CHECK(quartic.is_pisot);
  CHECK(quartic.eta_upper.get_d() == doctest::Approx(0.9404356826994156).epsilon(1e-9));

  auto sqrt2 = is_pisot(NumberField::make(MinimalPolynomial::parse("-2,0,1")));
  CHECK_FALSE(sqrt2.is_pisot);

  auto numeric = is_pisot(NumberField::rational_base(Rational(9, 5)));
  CHECK_FALSE(numeric.is_pisot);
  CHECK(numeric.eta_upper == 0);
}

TEST_CASE("field arithmetic identities") {
  auto f = golden();
  const auto binv = f.beta_power(-1);
  const auto binv2 = f.beta_power(-2);
  CHECK(binv + binv2 == f.one());
  CHECK(binv.mul_by_beta() == f.one());
  CHECK(f.beta_power(2) == f.beta_power(1) + f.one());
  CHECK(f.max_point() == f.beta_power(1));
  CHECK((binv + binv2 - f.one()).sign() == 0);
  CHECK((binv - binv2).sign() == 1);
  CHECK(f.zero().sign() == 0);
  CHECK(f.rational(Rational(3, 7)) * Rational(7, 3) == f.one());
  CHECK(f.beta_power(3) * f.beta_power(-3) == f.one());
  CHECK(f.beta_power(5).inverse() == f.beta_power(-5));
}

TEST_CASE("mul_by_beta follows the z-vector recurrence") {
  // Field x^3 - q1 x^2 - q2 x - q3 with q = (1,1,1): z'_k = z_1 q_k + z_{k+1}, z'_d = z_1 q_d.
  auto f = NumberField::make(nbonacci_polynomial(3));
  auto x = f.from_coefficients({Integer(2), Integer(-3), Integer(5)}, Integer(7));
  auto y = x.mul_by_beta();
  CHECK(y == f.from_coefficients({Integer(2 - 3), Integer(2 + 5), Integer(2)}, Integer(7)));
  CHECK(y.div_by_beta() == x);
}

TEST_CASE("field mismatch") {
  auto a = golden().one();
  auto b = NumberField::make(nbonacci_polynomial(3)).one();
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("sign antisymmetry and canonical uniqueness on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-20, 20);
  for (const char* mp : {"-1,-1,1", "-1,-1,-1,1", "-1,0,0,-1,1", "-2,0,1"}) {
    auto f = NumberField::make(MinimalPolynomial::parse(mp));
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Integer> na, nb;
      for (int k = 0; k < f.degree(); ++k) {
        na.emplace_back(coef(rng));
        nb.emplace_back(coef(rng));
      }
      auto a = f.from_coefficients(na, Integer(1 + trial % 5));
      auto b = f.from_coefficients(nb, Integer(3));
      CHECK((a - b).sign() == -(b - a).sign());
      // beta^2 a beta^-2 normalizes back to a.
      CHECK(a.mul_by_beta().mul_by_beta().div_by_beta().div_by_beta() == a);
      CHECK((a * b) == (b * a));
      // Value check against an independent double evaluation.
      const double beta = f.beta_approx();
      double v = 0, p = 1;
      for (const auto& c : a.numerators()) {
        p /= beta;
        v += c.get_d() * p;
      }
      v /= a.denominator().get_d();
      CHECK(a.to_double() == doctest::Approx(v).epsilon(1e-9));
    }
  }
}

TEST_CASE("reduction identity preserves value") {
  auto f = NumberField::make(nbonacci_polynomial(3));
  auto x = f.from_digits(std::vector<int>{1, 0, 1, 1, 0, 1});
  const double before = x.to_double() * f.beta_approx();
  CHECK(x.mul_by_beta().to_double() == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("numeric base is an exact rational field") {
  auto f = NumberField::rational_base(Rational(9, 5));
  CHECK(f.degree() == 1);
  CHECK(f.beta_power(1).to_double() == doctest::Approx(1.8));
  CHECK(f.max_point().to_double() == doctest::Approx(1.25));
  CHECK_THROWS_AS(NumberField::rational_base(Rational(2)), Error);
}
