#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "croftint/errors.hpp"
#include "croftint/ratfun.hpp"
#include "croftint/rng.hpp"

using namespace croftint;

namespace {

// r = 4 / ((s+1)(2s+3))
RatFun spec_example() {
  Poly den = Poly::linear(Rat(1), Rat(1)) * Poly::linear(Rat(2), Rat(3));
  return RatFun(Poly::constant(Rat(4)), den);
}

Rat random_rat(SplitMix64& rng, long num_range, long den_range) {
  long num = static_cast<long>(rng.next_u64() % (2 * num_range + 1)) - num_range;
  long den = 1 + static_cast<long>(rng.next_u64() % den_range);
  return rat(num, den);
}

RatFun random_ratfun(SplitMix64& rng) {
  int dn = 1 + static_cast<int>(rng.next_u64() % 3);
  int dd = 1 + static_cast<int>(rng.next_u64() % 3);
  std::vector<Rat> nc, dc;
  for (int i = 0; i <= dn; ++i) nc.push_back(random_rat(rng, 6, 4));
  for (int i = 0; i < dd; ++i) dc.push_back(random_rat(rng, 6, 4));
  dc.push_back(Rat(1));  // keep the denominator nonzero
  return RatFun(Poly(nc), Poly(dc));
}

}  // namespace

TEST_CASE("eval at regular points") {
  RatFun r(Poly::constant(Rat(2)), Poly::linear(Rat(1), Rat(1)));  // 2/(s+1)
  CHECK(r.eval(Rat(0)) == Rat(2));
  CHECK(spec_example().eval(Rat(0)) == rat(4, 3));
  // oracle: int over 1 >= x >= y >= -1 of (x - y) equals 4/3, the value of
  // 4/((s+1)(2s+3)) at s = 0
  CHECK_THROWS_AS(r.eval(Rat(-1)), PoleAtPoint);
}

TEST_CASE("pole orders") {
  // 1/(s+2)^2
  Poly den = Poly::linear(Rat(1), Rat(2)) * Poly::linear(Rat(1), Rat(2));
  RatFun r(Poly::constant(Rat(1)), den);
  CHECK(r.pole_order(Rat(-2)) == 2);
  // (s+1)/(s+1) reduces away
  RatFun t(Poly::linear(Rat(1), Rat(1)), Poly::linear(Rat(1), Rat(1)));
  CHECK(t.pole_order(Rat(-1)) == 0);
  CHECK(t == RatFun::constant(Rat(1)));
  CHECK(spec_example().pole_order(rat(-3, 2)) == 1);
  // signed order is negative at a zero
  RatFun z(Poly::linear(Rat(1), Rat(0)), Poly::constant(Rat(1)));
  CHECK(z.signed_pole_order(Rat(0)) == -1);
}

TEST_CASE("laurent expansions") {
  RatFun r(Poly::constant(Rat(2)), Poly::linear(Rat(1), Rat(1)));
  LaurentData ld = r.laurent(Rat(-1), 2);
  CHECK(ld.pole_order == 1);
  CHECK(ld.residue() == Rat(2));
  CHECK(ld.coeff(0) == Rat(0));

  LaurentData ld2 = spec_example().laurent(Rat(-1), 0);
  CHECK(ld2.pole_order == 1);
  // residue = lim (s+1) r(s) = 4/(2(-1)+3) = 4
  CHECK(ld2.residue() == Rat(4));

  RatFun lin(Poly::linear(Rat(1), Rat(2)), Poly::constant(Rat(1)));  // s + 2
  LaurentData ld3 = lin.laurent(Rat(0), 3);
  CHECK(ld3.pole_order == 0);
  CHECK(ld3.coeff(0) == Rat(2));
  CHECK(ld3.coeff(1) == Rat(1));
  CHECK(ld3.coeff(2) == Rat(0));
}

TEST_CASE("laurent round trip converges at O(h^{K+1})") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    RatFun r = random_ratfun(rng);
    Rat s0 = random_rat(rng, 3, 2);
    if (r.den().eval(s0) == 0) continue;
    const int K = 4;
    LaurentData ld = r.laurent(s0, K);
    // exact check on a shrinking h-grid: the truncation error at s0 + h is
    // O(h^{K+1}), so error / h^K -> 0 along h = 1/2^j
    Rat prev_ratio = 0;
    bool first = true;
    for (int j = 3; j <= 6; ++j) {
      Rat h = rat(1, 1L << j);
      Rat s = s0 + h;
      if (r.den().eval(s) == 0) continue;
      Rat sum = 0;
      Rat hp = rat_pow(h, -ld.pole_order);
      for (int k = -ld.pole_order; k <= K; ++k) {
        sum += ld.coeff(k) * hp;
        hp *= h;
      }
      Rat err = r.eval(s) - sum;
      Rat scale = rat_pow(h, K);
      Rat ratio = err / scale;  // should shrink like h
      if (!first) {
        Rat a = ratio < 0 ? -ratio : ratio;
        Rat b = prev_ratio < 0 ? -prev_ratio : prev_ratio;
        if (b != 0) CHECK(a < b);
      }
      prev_ratio = ratio;
      first = false;
    }
  }
}

TEST_CASE("arithmetic is exact") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    RatFun r1 = random_ratfun(rng);
    RatFun r2 = random_ratfun(rng);
    Rat s0 = random_rat(rng, 4, 3);
    if (r1.den().eval(s0) == 0 || r2.den().eval(s0) == 0) continue;
    CHECK((r1 + r2).eval(s0) == r1.eval(s0) + r2.eval(s0));
    CHECK((r1 * r2).eval(s0) == r1.eval(s0) * r2.eval(s0));
    CHECK((r1 - r1).is_zero());
  }
}

TEST_CASE("equality is structural after reduction") {
  // (s^2 - 1)/(s - 1) == s + 1
  Poly num({Rat(-1), Rat(0), Rat(1)});
  RatFun a(num, Poly::linear(Rat(1), Rat(-1)));
  RatFun b(Poly::linear(Rat(1), Rat(1)), Poly::constant(Rat(1)));
  CHECK(a == b);
  // scaling both parts leaves the reduced form unchanged
  RatFun c(num * Rat(3), Poly::linear(Rat(3), Rat(-3)));
  CHECK(a == c);
}

TEST_CASE("factored display") {
  CHECK(spec_example().str_factored() == "4/((s+1)(2s+3))");
}
