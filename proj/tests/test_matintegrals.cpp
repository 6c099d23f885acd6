#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "croftint/errors.hpp"
#include "croftint/matintegrals.hpp"

using namespace croftint;

TEST_CASE("spectral constant") {
  // c(1) = sqrt(pi) / (2 Gamma(3/2)) = 1
  CHECK(spectral_constant(1).eval().value == doctest::Approx(1.0).epsilon(1e-12));
  // c(2) = 2 pi^2 / (4 Gamma_2(2)) = pi
  CHECK(spectral_constant(2).eval().value == doctest::Approx(M_PI).epsilon(1e-12));
  // no poles at positive half-integer arguments
  for (long num = 1; num <= 9; ++num)
    CHECK(spectral_constant(3).pole_order_at(rat(num, 2)) == 0);
}

TEST_CASE("D closed forms") {
  auto d1 = D_closed(1, EpsilonKind::Abs);
  // D_1^abs(s) = 2/(s+1)
  auto v = d1.eval(0.0);
  CHECK(v.real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(D_closed(3, EpsilonKind::Sgn).identically_zero);
  CHECK(D_closed(5, EpsilonKind::Sgn).identically_zero);
  CHECK(!D_closed(2, EpsilonKind::Sgn).identically_zero);
  // cos/sin parity: n = 2 mod 4 kills cos, n = 0 mod 4 kills sin
  CHECK(D_closed(2, EpsilonKind::Cos).identically_zero);
  CHECK(!D_closed(2, EpsilonKind::Sin).identically_zero);
  CHECK(D_closed(4, EpsilonKind::Sin).identically_zero);
  CHECK(!D_closed(4, EpsilonKind::Cos).identically_zero);
}

TEST_CASE("reduced numerators of nonzero D are constant") {
  for (int n = 1; n <= 6; ++n) {
    for (auto kind : {EpsilonKind::Abs, EpsilonKind::Sgn, EpsilonKind::Cos, EpsilonKind::Sin}) {
      auto d = D_closed(n, kind);
      if (d.identically_zero) continue;
      CHECK(d.re.num().degree() == 0);
    }
  }
}

TEST_CASE("D plus is the Gamma ratio") {
  auto d = D_closed(1, EpsilonKind::Plus);
  REQUIRE(d.plus.has_value());
  // D_1^+(s) = Gamma(s+1)Gamma(1)/Gamma(s+2) = 1/(s+1)
  auto v = d.eval(1.0);
  CHECK(v.real() == doctest::Approx(0.5).epsilon(1e-10));
  auto v0 = d.eval(0.0);
  CHECK(v0.real() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("volume consistency: D_2^abs(0) is the volume of the matrix box") {
  // {-I <= X <= I} in Sym_2 has volume c(2) * I_2(0) = pi * 4/3
  auto d = D_closed(2, EpsilonKind::Abs);
  CHECK(d.eval(0.0).real() == doctest::Approx(M_PI * 4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("MC oracle matches closed forms at low samples") {
  const long samples = 200000;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<EpsilonKind, double>> what;
    for (auto kind : {EpsilonKind::Abs, EpsilonKind::Sgn, EpsilonKind::Cos, EpsilonKind::Sin})
      for (double s : {0.0, 1.0}) what.emplace_back(kind, s);
    auto est = D_mc_batch(n, what, samples, 20240601u, 2);
    for (size_t i = 0; i < what.size(); ++i) {
      auto d = D_closed(n, what[i].first);
      double closed = d.eval(what[i].second).real();
      double tol = 4.5 * est[i].stderr_ + 1e-12;
      CHECK(std::abs(est[i].mean - closed) <= tol);
    }
  }
}

TEST_CASE("MC estimates do not depend on the worker count") {
  auto a = D_mc_oracle(2, EpsilonKind::Abs, 1.0, 40000, 7u, 1);
  auto b = D_mc_oracle(2, EpsilonKind::Abs, 1.0, 40000, 7u, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_ == b.stderr_);
  auto c = D_mc_oracle(2, EpsilonKind::Abs, 1.0, 40000, 8u, 1);
  CHECK(a.mean != c.mean);  // seed matters
  CHECK_THROWS_AS(D_mc_oracle(5, EpsilonKind::Abs, 0.0, 10, 1u), DimensionTooLarge);
}

TEST_CASE("selberg normalization") {
  // m = 1: plain Beta values
  CHECK(selberg_normalization(1, Rat(0), Rat(0)).eval().value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(selberg_normalization(1, Rat(1), Rat(0)).eval().value ==
        doctest::Approx(0.5).epsilon(1e-12));
  // m = 2, a = b = 0: int over the square of |mu1 - mu2| = 1/3
  CHECK(selberg_normalization(2, Rat(0), Rat(0)).eval().value ==
        doctest::Approx(1.0 / 3).epsilon(1e-11));
  // arcsine case behind the (1,1,1) angle density
  CHECK(selberg_normalization(1, rat(-1, 2), rat(-1, 2)).eval().value ==
        doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("constantine ratio pole orders") {
  // N=1, kappa=0, alpha=0: Gamma(s+1)/Gamma(s+2), matching D_1^+
  auto c1 = constantine_ratio(1, Rat(0), Partition{});
  CHECK(c1.numerator_pole_order(Rat(-1)) == 1);
  CHECK(c1.denominator_pole_order(Rat(-2)) == 1);
  // N=3, alpha=-1/2, kappa=0 at s0=-4: numerator 2, denominator 1
  auto c3 = constantine_ratio(3, rat(-1, 2), Partition{});
  CHECK(c3.numerator_pole_order(Rat(-4)) == 2);
  CHECK(c3.denominator_pole_order(Rat(-4)) == 1);
  CHECK(c3.net_pole_order(Rat(-4)) == 1);
  // kappa = (1,1,1)
  auto c3k = constantine_ratio(3, rat(-1, 2), Partition({1, 1, 1}));
  CHECK(c3k.net_pole_order(Rat(-4)) <= 1);
  // kappa = (2,1,1): colliding numerator/denominator shifts stay separate
  auto c3c = constantine_ratio(3, rat(-1, 2), Partition({2, 1, 1}));
  CHECK(c3c.numerator_pole_order(Rat(-4)) == 2);
  CHECK(c3c.denominator_pole_order(Rat(-4)) == 1);
}

TEST_CASE("epsilon coefficients") {
  CHECK(epsilon_coeff(EpsilonKind::Abs, 3) == Rat(1));
  CHECK(epsilon_coeff(EpsilonKind::Sgn, 3) == Rat(-1));
  CHECK(epsilon_coeff(EpsilonKind::Cos, 2) == Rat(-1));
  CHECK(epsilon_coeff(EpsilonKind::Cos, 1) == Rat(0));
  CHECK(epsilon_coeff(EpsilonKind::Sin, 1) == Rat(1));
  CHECK(epsilon_coeff(EpsilonKind::Sin, 3) == Rat(-1));
}
