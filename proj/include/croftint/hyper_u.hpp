#ifndef CROFTINT_HYPER_U_HPP
#define CROFTINT_HYPER_U_HPP

#include "croftint/rational.hpp"

namespace croftint {

// The family u(s, a, b) = int_0^1 x^s (1+x)^a (1-x)^b dx and the handful of
// exact facts about it that the certificates consume: residues, the
// diagonal closed form at s = -a-b-3, and the two-term limits entering the
// O(p,2) basis argument.

// Direct adaptive quadrature; requires s > -1 and b > -1.
double u_quadrature(double s, double a, double b, double rel_tol = 1e-11);

// Meromorphic continuation by recurrence reduction; throws NotReducible
// when no reduction path applies and PoleAtPoint when the continued value
// has a genuine pole at s.
double u_eval(const Rat& s, const Rat& a, const Rat& b);
double u_eval(double s, const Rat& a, const Rat& b);

// Res_{s=-m} u(s,a,b) = (1/(m-1)!) d^{m-1}/dx^{m-1} [(1+x)^a (1-x)^b] at 0,
// computed by formal series differentiation; exact.
Rat u_residue(long m, const Rat& a, const Rat& b);

// u(-a-b-3, a, b) = 2^{a+b+1} (a-b)/(a+1) B(-a-b-2, b+1); requires
// a, b >= -1/2.  Throws BetaPole when the Beta continuation is singular.
double u_diag3(const Rat& a, const Rat& b);

// Exact certificate core of u_diag3 when b is a non-negative integer:
// value = rational * 2^{a+b+1}; returns the rational part.
Rat u_diag3_rational_part(const Rat& a, long b);

// lim_{s -> -2a-m-3} of the parity-filtered binomial reduction
//   sum_{j != m mod 2} C(m,j) B((s+j+1)/2, a+1)           (m >= 1)
//   B((s+1)/2, a+1)                                       (m  = 0)
// entering the O(p,2) restriction pairings.  For integer a the value is an
// exact rational; for strict half-integer a individual Beta terms may
// diverge, in which case `divergent` is set and value carries the sign of
// the common divergent coefficient.
struct OddPTotal {
  double value = 0.0;
  bool divergent = false;
  bool exact = false;
  Rat exact_value = 0;
};
OddPTotal odd_p_total(const Rat& a, long m);

// Pole-aware Beta continuation B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y),
// understood as the limit along x when arguments sit on the pole set.
struct BetaValue {
  int net_pole_order = 0;  // >0 diverges, <0 value is 0
  double value = 0.0;
  bool exact = false;
  Rat exact_value = 0;
};
BetaValue beta_limit(const Rat& x, const Rat& y);

}  // namespace croftint

#endif
