#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "croftint/errors.hpp"
#include "croftint/gamma_product.hpp"
#include "croftint/hyper_u.hpp"
#include "croftint/quadrature.hpp"
#include "croftint/rng.hpp"

using namespace croftint;

TEST_CASE("gamma_n_kappa structure") {
  auto g1 = GammaProduct::gamma_n_kappa(1, Partition{});
  CHECK(g1.pi_power() == Rat(0));
  CHECK(g1.factors().size() == 1);
  CHECK(g1.factors().begin()->first == Rat(0));  // Gamma(x)

  // N=3, kappa=0 at x = -2: arguments {-2, -5/2, -3}, two poles
  auto g3 = GammaProduct::gamma_n_kappa(3, Partition{});
  CHECK(g3.pole_order_at(Rat(-2)) == 2);

  // N=3, kappa=(1,1,0) at x = -2: arguments {-1, -3/2, -3}
  auto g3k = GammaProduct::gamma_n_kappa(3, Partition({1, 1, 0}));
  CHECK(g3k.pole_order_at(Rat(-2)) == 2);
}

TEST_CASE("gamma pole order examples") {
  auto g1 = GammaProduct::gamma_n(1);
  CHECK(g1.pole_order_at(Rat(-4)) == 1);
  // ratio Gamma_3(x+2)/Gamma_3(x+7/2) at x0 = -4
  auto ratio = GammaProduct::gamma_n(3, Rat(2)) * GammaProduct::gamma_n(3, rat(7, 2)).inverse();
  CHECK(ratio.pole_order_at(Rat(-4)) == 1);
}

TEST_CASE("gamma pole order additive under multiplication") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    long n1 = 1 + rng.next_u64() % 4;
    long n2 = 1 + rng.next_u64() % 4;
    Rat o1(static_cast<long>(rng.next_u64() % 9) - 4, 2);
    Rat o2(static_cast<long>(rng.next_u64() % 9) - 4, 2);
    o1.canonicalize();
    o2.canonicalize();
    auto a = GammaProduct::gamma_n(n1, o1);
    auto b = GammaProduct::gamma_n(n2, o2).inverse();
    Rat x0(static_cast<long>(rng.next_u64() % 17) - 8, 2);
    x0.canonicalize();
    CHECK((a * b).pole_order_at(x0) == a.pole_order_at(x0) + b.pole_order_at(x0));
  }
}

TEST_CASE("gamma numeric evaluation") {
  // Gamma_1(x) at 1/2 is sqrt(pi)
  auto g = GammaProduct::gamma_n(1);
  auto v = g.eval_at(rat(1, 2));
  CHECK(v.net_pole_order == 0);
  CHECK(v.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
  // cancelling pole pair Gamma(x-1)/Gamma(x) at x = 0 equals -1
  GammaProduct r;
  r.multiply_gamma(Rat(-1)).multiply_gamma(Rat(0), -1);
  auto rv = r.eval_at(Rat(0));
  CHECK(rv.net_pole_order == 0);
  CHECK(rv.value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("u base values") {
  CHECK(u_eval(Rat(0), Rat(0), Rat(0)) == doctest::Approx(1.0).epsilon(1e-10));
  // continuation of 1/(s+1) at s = -2
  CHECK(u_eval(Rat(-2), Rat(0), Rat(0)) == doctest::Approx(-1.0).epsilon(1e-10));
  // u(1, 0, 1) = B(2, 2) = 1/6
  CHECK(u_eval(Rat(1), Rat(0), Rat(1)) == doctest::Approx(1.0 / 6).epsilon(1e-10));
  // u(s, 1, 0) = 1/(s+1) + 1/(s+2) continued to s = -3
  CHECK(u_eval(Rat(-3), Rat(1), Rat(0)) == doctest::Approx(-1.5).epsilon(1e-9));
  // non-integer a: u(-a-2, a, 0) = -2^{a+1}/(a+1)
  CHECK(u_eval(rat(-5, 2), rat(1, 2), Rat(0)) ==
        doctest::Approx(-std::exp2(1.5) / 1.5).epsilon(1e-9));
}

TEST_CASE("u recurrence consistency under quadrature") {
  // u(s, a, b) = u(s+1, a-1, b) + u(s, a-1, b) for 200 random points
  SplitMix64 rng(5150);
  int checked = 0;
  while (checked < 200) {
    double s = 3.0 * rng.next_unit();
    double a = 4.0 * rng.next_unit() - 1.0;
    double b = 3.0 * rng.next_unit() - 0.5;
    double lhs = u_quadrature(s, a, b);
    double rhs = u_quadrature(s + 1, a - 1, b) + u_quadrature(s, a - 1, b);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    ++checked;
  }
}

TEST_CASE("u diagonal identity u(s,a,a) = B((s+1)/2, a+1)/2") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    double s = 2.5 * rng.next_unit() + 0.1;
    double a = 2.0 * rng.next_unit() - 0.4;
    double lhs = u_quadrature(s, a, a);
    double rhs = 0.5 * gamma_signed((s + 1) / 2) * gamma_signed(a + 1) /
                 gamma_signed((s + 1) / 2 + a + 1);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("u_residue examples") {
  CHECK(u_residue(1, rat(7, 2), rat(-1, 2)) == Rat(1));
  CHECK(u_residue(2, Rat(1), Rat(0)) == Rat(1));
  // m = 5, a = 3/2, b = 1/2: x^4 coefficient of (1+x)(1-x^2)^{1/2}
  Rat r = u_residue(5, rat(3, 2), rat(1, 2));
  CHECK(r == rat(-1, 8));
  CHECK(r != 0);
}

TEST_CASE("u_residue matches a finite-difference derivative") {
  // independent oracle: (1/(m-1)!) d^{m-1}/dx^{m-1} (1+x)^a (1-x)^b at 0 by
  // central differences
  auto fn = [](double x, double a, double b) {
    return std::pow(1 + x, a) * std::pow(1 - x, b);
  };
  double a = 1.5, b = 0.5;
  // m = 3: second derivative / 2!
  double h = 1e-4;
  double d2 = (fn(h, a, b) - 2 * fn(0, a, b) + fn(-h, a, b)) / (h * h);
  CHECK(u_residue(3, rat(3, 2), rat(1, 2)).get_d() == doctest::Approx(d2 / 2).epsilon(1e-6));
}

TEST_CASE("u_residue sign pattern for strict half-integer pairs") {
  // all binomial summands share a sign, so the residue never vanishes
  for (long da = 1; da <= 21; da += 2) {      // a = da/2 - hmm strict halves
    for (long db = -1; db < da; db += 2) {
      Rat a(da, 2), b(db, 2);
      a.canonicalize();
      b.canonicalize();
      if (a <= b || b < rat(-1, 2)) continue;
      Rat sum = a + b + 3;
      if (!is_integer(sum) || sum > 12 || sum < 1) continue;
      long m = to_long(sum);
      CHECK(u_residue(m, a, b) != 0);
    }
  }
}

TEST_CASE("u_diag3 closed form") {
  // a = b gives 0
  CHECK(u_diag3(rat(1, 2), rat(1, 2)) == doctest::Approx(0.0));
  // a = 1/2, b = 0: cross-check against the reduction-based evaluation
  double direct = u_diag3(rat(1, 2), Rat(0));
  double reduced = u_eval(rat(-7, 2), rat(1, 2), Rat(0));
  CHECK(direct == doctest::Approx(reduced).epsilon(1e-8));
  // a = 3/2, b = 1 is nonzero by the corollary
  CHECK(std::abs(u_diag3(rat(3, 2), Rat(1))) > 1e-8);
  CHECK(u_diag3_rational_part(rat(3, 2), 1) != 0);
}

TEST_CASE("u_diag3 against an independent reduction route") {
  // half-integer a with integer b keeps the continuation point off the pole
  // set; compare the closed form against the recurrence-based route
  double closed = u_diag3(rat(1, 2), Rat(1));
  double reduced = u_eval(rat(-9, 2), rat(1, 2), Rat(1));
  CHECK(closed == doctest::Approx(reduced).epsilon(1e-8));
  // both strict half-integers force a Beta pole (the residue lemma regime)
  CHECK_THROWS_AS(u_diag3(rat(3, 2), rat(1, 2)), BetaPole);
}

TEST_CASE("odd_p_total examples") {
  // a = 0, m = 0: limit of 2 u(s,0,0) at s = -3 equals -1
  auto t0 = odd_p_total(Rat(0), 0);
  CHECK(t0.exact);
  CHECK(t0.exact_value == Rat(-1));
  // a = 1/2, m = 1: divergent Beta term; nonzero in the extended sense
  auto t1 = odd_p_total(rat(1, 2), 1);
  CHECK(t1.divergent);
  CHECK(t1.value != 0.0);
  // a = 1, m = 2: finite nonzero rational 2*B(-5/2, 2) = 8/15
  auto t2 = odd_p_total(Rat(1), 2);
  CHECK(t2.exact);
  CHECK(t2.exact_value == rat(8, 15));
}

TEST_CASE("odd_p_total matches the direct two-term limit") {
  // integer a, m odd: combination u(s, a+m, a) + u(s, a, a+m); evaluate both
  // terms at s0 by the continuation and compare
  Rat a(0), b(1);  // m = 1, s0 = -4
  double combo = u_eval(Rat(-4), b, a) + u_eval(Rat(-4), a, b);
  auto t = odd_p_total(a, 1);
  CHECK(t.exact);
  CHECK(combo == doctest::Approx(t.exact_value.get_d()).epsilon(1e-9));
}

TEST_CASE("u_eval errors") {
  CHECK_THROWS_AS(u_eval(Rat(-1), Rat(0), Rat(0)), PoleAtPoint);
  // irrational pair with no reduction path outside the convergent range
  CHECK_THROWS_AS(u_eval(Rat(-2), rat(1, 3), rat(1, 5)), NotReducible);
}
