#ifndef CROFTINT_MATINTEGRALS_HPP
#define CROFTINT_MATINTEGRALS_HPP

#include <complex>
#include <cstdint>
#include <optional>

#include "croftint/gamma_product.hpp"
#include "croftint/ratfun.hpp"
#include "croftint/selberg.hpp"

namespace croftint {

// Signature weight for D_n^eps(s) = sum_{a+b=n} eps(b) int_{S_{a,b}(1)} |det X|^s dX.
enum class EpsilonKind { Abs, Sgn, Cos, Sin, Plus };

// eps(b) for the four trigonometric weights; exact in {-1, 0, 1}.
Rat epsilon_coeff(EpsilonKind kind, int b);

// Spectral pushforward constant c(n) = n! pi^{n^2/2} / (2^n Gamma_n((n+2)/2)),
// as a formal GammaProduct (evaluate at x = 0 for the numeric value).
GammaProduct spectral_constant(int n);

// D_n^eps(s) = c(n) * I_n^eps(s); `re`/`im` hold the exact spectral rational
// functions and `constant` the positive transcendental prefactor.  For
// kind = Plus the result is instead the Gamma-ratio form (formal in s).
struct MatIntegralResult {
  EpsilonKind kind = EpsilonKind::Abs;
  int n = 0;
  bool identically_zero = false;
  RatFun re, im;
  GammaProduct constant;
  // Present only for Plus: D_n^+(s) = s_part(s) * const_part.
  struct PlusForm {
    GammaProduct s_part;      // Gamma_n(s + (n+1)/2) / Gamma_n(s + n + 1)
    GammaProduct const_part;  // Gamma_n((n+1)/2)
  };
  std::optional<PlusForm> plus;

  // Numeric value of D at a non-pole point.
  std::complex<double> eval(double s) const;
};

MatIntegralResult D_closed(int n, EpsilonKind kind);

struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  double acceptance = 0.0;
  bool convergence_warning = false;
};

// Monte Carlo oracle for D_n^eps(s): uniform sampling of symmetric matrices
// from the entry box [-1,1]^{n(n+1)/2}, filtered to operator norm <= 1;
// deterministic given (seed); estimates invariant to the worker count.
McEstimate D_mc_oracle(int n, EpsilonKind kind, double s, long samples,
                       std::uint64_t seed, int workers = 1);

// One sampling pass accumulating several (kind, s) statistics at once; used
// by the acceptance suite.  Entries are (kind, s) pairs.
std::vector<McEstimate> D_mc_batch(int n, const std::vector<std::pair<EpsilonKind, double>>& what,
                                   long samples, std::uint64_t seed, int workers = 1);

// Selberg normalization constant of the eigenvalue density:
//   int_{[0,1]^m} prod |mu_i - mu_j| prod mu^a (1-mu)^b dmu.
GammaProduct selberg_normalization(int m, const Rat& a, const Rat& b);

// Constantine's Beta-Jacobi ratio in a formal variable s:
//   int_{0<=X<=I_N} (det X)^s det(I-X)^alpha C*_kappa(X) dX
//     = Gamma_N(s + (N+1)/2, kappa) Gamma_N(alpha + (N+1)/2)
//       / Gamma_N(s + alpha + N + 1, kappa).
struct ConstantineRatio {
  GammaProduct numerator;    // Gamma_N(s + (N+1)/2, kappa), formal in s
  GammaProduct denominator;  // Gamma_N(s + alpha + N + 1, kappa), formal in s
  GammaProduct const_part;   // Gamma_N(alpha + (N+1)/2)
  int numerator_pole_order(const Rat& s0) const { return numerator.pole_order_at(s0); }
  int denominator_pole_order(const Rat& s0) const { return denominator.pole_order_at(s0); }
  int net_pole_order(const Rat& s0) const {
    return numerator_pole_order(s0) - denominator_pole_order(s0);
  }
};
ConstantineRatio constantine_ratio(int N, const Rat& alpha, const Partition& kappa);

}  // namespace croftint

#endif
