#include "croftint/hyper_u.hpp"

#include <cmath>
#include <limits>

#include "croftint/errors.hpp"
#include "croftint/gamma_product.hpp"
#include "croftint/quadrature.hpp"

namespace croftint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double integrand(double x, double s, double a, double b) {
  return std::pow(x, s) * std::pow(1.0 + x, a) * std::pow(1.0 - x, b);
}

// Softening exponent for an endpoint singularity t^g with g > -1.
int softening_power(double g) {
  if (g >= 0.0) return 1;
  int m = static_cast<int>(std::ceil(2.0 / (1.0 + g)));
  return std::min(std::max(m, 1), 64);
}

}  // namespace

double u_quadrature(double s, double a, double b, double rel_tol) {
  if (!(s > -1.0) || !(b > -1.0))
    throw DomainError("u_quadrature requires s > -1 and b > -1");
  // Left half: substitute x = t^ms so the integrand is C^1 at 0.
  int ms = softening_power(s);
  auto left = [&](double t) {
    double x = std::pow(t, ms);
    return ms * std::pow(t, ms * (s + 1.0) - 1.0) * std::pow(1.0 + x, a) *
           std::pow(1.0 - x, b);
  };
  // Right half: y = 1 - x, then y = t^mb.
  int mb = softening_power(b);
  auto right = [&](double t) {
    double y = std::pow(t, mb);
    double x = 1.0 - y;
    return mb * std::pow(t, mb * (b + 1.0) - 1.0) * std::pow(x, s) *
           std::pow(1.0 + x, a);
  };
  double split = 0.5;
  auto rl = AdaptiveGK::integrate(left, 0.0, std::pow(split, 1.0 / ms), rel_tol);
  auto rr = AdaptiveGK::integrate(right, 0.0, std::pow(split, 1.0 / mb), rel_tol);
  (void)integrand;
  return rl.value + rr.value;
}

BetaValue beta_limit(const Rat& x, const Rat& y) {
  BetaValue out;
  // Exact route when either argument is a positive integer.
  const Rat* intp = nullptr;
  const Rat* other = nullptr;
  if (is_integer(y) && y >= 1) {
    intp = &y;
    other = &x;
  } else if (is_integer(x) && x >= 1) {
    intp = &x;
    other = &y;
  }
  if (intp) {
    long n = to_long(*intp);
    Rat coeff = 1;  // (n-1)!
    for (long i = 2; i < n; ++i) coeff *= i;
    Rat denom = 1;
    int zero_factors = 0;
    for (long i = 0; i < n; ++i) {
      Rat f = *other + i;
      if (f == 0)
        ++zero_factors;
      else
        denom *= f;
    }
    if (zero_factors > 0) {
      out.net_pole_order = zero_factors;  // at most one in fact
      out.exact = true;
      out.exact_value = coeff / denom;  // coefficient of 1/eps
      out.value = out.exact_value > 0 ? kInf : -kInf;
      return out;
    }
    out.exact = true;
    out.exact_value = coeff / denom;
    out.value = out.exact_value.get_d();
    return out;
  }

  int ox = is_nonpositive_integer(x) ? 1 : 0;
  int oy = is_nonpositive_integer(y) ? 1 : 0;
  int oxy = is_nonpositive_integer(x + y) ? 1 : 0;
  out.net_pole_order = ox + oy - oxy;
  if (out.net_pole_order < 0) {
    out.value = 0.0;
    return out;
  }
  if (out.net_pole_order > 0) {
    // Divergent; sign from the leading coefficient when only x is at a pole.
    double sign = 1.0;
    if (ox && !oy && !oxy) {
      long k = -to_long(x);
      double lead = (k % 2 == 0 ? 1.0 : -1.0);
      sign = lead * gamma_signed(y.get_d()) / gamma_signed(Rat(x + y).get_d());
    } else if (oy && !ox && !oxy) {
      long k = -to_long(y);
      double lead = (k % 2 == 0 ? 1.0 : -1.0);
      sign = lead * gamma_signed(x.get_d()) / gamma_signed(Rat(x + y).get_d());
    }
    out.value = sign >= 0 ? kInf : -kInf;
    return out;
  }
  // Net order zero without a positive-integer argument: either no factor is
  // at a pole, or a pole pair cancels; fold via Laurent leading coefficients.
  GammaProduct g;
  g.multiply_gamma(x).multiply_gamma(y).multiply_gamma(x + y, -1);
  auto ev = g.eval_at(Rat(0));
  out.value = ev.value;
  return out;
}

Rat u_residue(long m, const Rat& a, const Rat& b) {
  if (m < 1) throw DomainError("u_residue: m must be >= 1");
  // Coefficient of x^{m-1} in (1+x)^a (1-x)^b.
  Rat acc = 0;
  for (long i = 0; i <= m - 1; ++i) {
    long k = m - 1 - i;
    Rat term = binom(a, i) * binom(b, k);
    if (k % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

double u_diag3(const Rat& a, const Rat& b) {
  if (a < rat(-1, 2) || b < rat(-1, 2))
    throw DomainError("u_diag3 requires a, b >= -1/2");
  if (a == b) return 0.0;  // the (a - b) factor wins
  BetaValue bv = beta_limit(-a - b - 2, b + 1);
  if (bv.net_pole_order > 0)
    throw BetaPole("u_diag3: Beta continuation singular");
  double scale = std::exp2(Rat(a + b + 1).get_d());
  double factor = Rat((a - b) / (a + 1)).get_d();
  return scale * factor * bv.value;
}

Rat u_diag3_rational_part(const Rat& a, long b) {
  if (b < 0) throw DomainError("u_diag3_rational_part: b must be >= 0");
  if (a == Rat(b)) return Rat(0);
  BetaValue bv = beta_limit(-a - b - 2, Rat(b + 1));
  if (bv.net_pole_order > 0)
    throw BetaPole("u_diag3: Beta continuation singular");
  if (!bv.exact) throw DomainError("u_diag3_rational_part: not exact");
  return (a - Rat(b)) / (a + 1) * bv.exact_value;
}

OddPTotal odd_p_total(const Rat& a, long m) {
  if (a < 0 || m < 0) throw DomainError("odd_p_total: a >= 0 half-integer, m >= 0");
  OddPTotal out;
  Rat s0 = -2 * a - m - 3;
  if (m == 0) {
    BetaValue bv = beta_limit((s0 + 1) / 2, a + 1);
    if (bv.net_pole_order > 0) {
      out.divergent = true;
      out.value = bv.value;
      return out;
    }
    out.value = bv.value;
    if (bv.exact) {
      out.exact = true;
      out.exact_value = bv.exact_value;
    }
    return out;
  }
  Rat finite_sum = 0;
  double finite_sum_d = 0.0;
  Rat divergent_coeff = 0;
  bool any_divergent = false;
  bool all_exact = true;
  for (long j = 0; j <= m; ++j) {
    if ((j - m) % 2 == 0) continue;
    Rat c = binom(Rat(m), j);
    BetaValue bv = beta_limit((s0 + j + 1) / 2, a + 1);
    if (bv.net_pole_order > 0) {
      any_divergent = true;
      if (bv.exact) divergent_coeff += c * bv.exact_value;
      continue;
    }
    if (bv.exact)
      finite_sum += c * bv.exact_value;
    else
      all_exact = false;
    finite_sum_d += c.get_d() * bv.value;
  }
  if (any_divergent) {
    out.divergent = true;
    out.value = divergent_coeff >= 0 ? kInf : -kInf;
    return out;
  }
  if (all_exact) {
    out.exact = true;
    out.exact_value = finite_sum;
    out.value = finite_sum.get_d();
  } else {
    out.value = finite_sum_d;
  }
  return out;
}

namespace {

// u(s, a, 0) via the integration-by-parts recurrence raising s into the
// convergent range.  For non-integer a every integer s <= -1 is a genuine
// pole (the residue is a nonzero binomial coefficient), so those points are
// rejected rather than stepped across.
double u_a0(const Rat& s, const Rat& a) {
  if (s > -1) return u_quadrature(s.get_d(), a.get_d(), 0.0);
  if (is_integer(s)) throw PoleAtPoint("u continuation pole at integer s <= -1");
  // u(s,a,0) = 2^{a+1}/(s+1) - (1 + (a+1)/(s+1)) u(s+1, a, 0)
  double tail = u_a0(s + 1, a);
  double sp1 = Rat(s + 1).get_d();
  return std::exp2(Rat(a + 1).get_d()) / sp1 - (1.0 + (a.get_d() + 1.0) / sp1) * tail;
}

double beta_or_throw(const Rat& x, const Rat& y) {
  BetaValue bv = beta_limit(x, y);
  if (bv.net_pole_order > 0) throw PoleAtPoint("u continuation pole");
  return bv.value;
}

}  // namespace

double u_eval(const Rat& s, const Rat& a, const Rat& b) {
  // Expansion of (1+x)^a for integer a >= 0 reduces to classical Beta.
  if (is_integer(a) && a >= 0) {
    long an = to_long(a);
    double acc = 0.0;
    for (long j = 0; j <= an; ++j)
      acc += binom(a, j).get_d() * beta_or_throw(s + j + 1, b + 1);
    return acc;
  }
  // Expansion of (1-x)^b for integer b >= 0 leaves u(., a, 0) terms.
  if (is_integer(b) && b >= 0) {
    long bn = to_long(b);
    double acc = 0.0;
    for (long j = 0; j <= bn; ++j) {
      double term = binom(b, j).get_d() * u_a0(s + j, a);
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  }
  // Integer gap: reduce to the diagonal u(., c, c) = (1/2) B((.+1)/2, c+1).
  if (is_integer(a - b)) {
    Rat diff = a - b;
    if (diff >= 0) {
      long m = to_long(diff);
      double acc = 0.0;
      for (long j = 0; j <= m; ++j)
        acc += binom(diff, j).get_d() * 0.5 * beta_or_throw((s + j + 1) / 2, b + 1);
      return acc;
    }
    long m = to_long(-diff);
    double acc = 0.0;
    for (long j = 0; j <= m; ++j) {
      double term = binom(-diff, j).get_d() * 0.5 * beta_or_throw((s + j + 1) / 2, a + 1);
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  }
  if (s > -1 && b > -1) return u_quadrature(s.get_d(), a.get_d(), b.get_d());
  throw NotReducible("u_eval: no reduction path for these (s, a, b)");
}

double u_eval(double s, const Rat& a, const Rat& b) {
  if (s > -1.0 && b > -1) return u_quadrature(s, a.get_d(), b.get_d());
  // Try to interpret s as a rational with a small denominator.
  for (long q : {1L, 2L, 4L}) {
    double scaled = s * q;
    if (std::abs(scaled - std::round(scaled)) < 1e-12) {
      Rat sr(static_cast<long>(std::llround(scaled)), q);
      sr.canonicalize();
      return u_eval(sr, a, b);
    }
  }
  throw NotReducible("u_eval: irrational s outside the convergent range");
}

}  // namespace croftint
