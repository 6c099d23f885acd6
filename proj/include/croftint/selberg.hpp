#ifndef CROFTINT_SELBERG_HPP
#define CROFTINT_SELBERG_HPP

#include <optional>
#include <vector>

#include "croftint/ratfun.hpp"
#include "croftint/rational.hpp"

namespace croftint {

// Exponent vector e = (e_1, ..., e_n) stored as doubled integers 2*e_j so
// the integer and strict-half-integer regimes share one representation.
// Mixed parity is rejected at construction.
class ExponentVector {
 public:
  enum class Regime { Integer, HalfInteger };

  explicit ExponentVector(std::vector<long> doubled);
  static ExponentVector from_integers(const std::vector<long>& e);

  size_t n() const { return doubled_.size(); }
  const std::vector<long>& doubled() const { return doubled_; }
  Regime regime() const { return regime_; }
  Rat entry(size_t j) const { return rat(doubled_[j], 2); }

  // Number of even / odd entries (integer regime only).
  int n_plus() const;
  int n_minus() const;

 private:
  std::vector<long> doubled_;
  Regime regime_;
};

// Domain selector for the oracle: the full chain Delta_n or one signed
// chamber Delta_{a,b}.
struct FDomain {
  bool full = true;
  int a = 0, b = 0;
  static FDomain whole() { return FDomain{}; }
  static FDomain chamber(int a, int b) { return FDomain{false, a, b}; }
};

// Exact brute-force oracle: iterated symbolic integration of
// det(x_i^{e_j - 1}) over the ordered domain, by permutation expansion.
// Exact in both regimes (the branch convention makes half-integer values
// Gaussian rationals).  Throws DimensionTooLarge above n = 6.
CRat f_oracle(const ExponentVector& e, const FDomain& domain = FDomain::whole());

// Removal recursion over sorted exponent subsets, memoized.
CRat f_recursive(const ExponentVector& e);

// Closed form: integer regime via the epsilon_n product formula with the
// vanishing rule; half-integer regime via the delta_n(m) congruence-split
// formula.
CRat f_closed(const ExponentVector& e);

// The 8-periodic sign sequence, generated from its defining recurrence
// eps_1 = 1, eps_{2m} = (-1)^m eps_{2m-1}, eps_{2m+1} = eps_{2m}.
int epsilon_sequence(int n);

// delta_n(m) including the 2^{n/2} scale; exact Gaussian rational.
CRat delta_factor(int n, int m);

enum class SelbergShape { Abs, Sgn, Mixed };

// Spectral rational functions I_n^shape(s), defined so that
// D_n^shape(s) = c(n) * I_n^shape(s) with c(n) the spectral pushforward
// constant.  Mixed returns the complex combination split into real and
// imaginary parts.
struct SelbergIResult {
  RatFun re;
  RatFun im;  // zero except for Mixed with n odd or n = 2 mod 4
  bool identically_zero = false;
};
SelbergIResult selberg_I(int n, SelbergShape shape);

// Residue-identity evaluation; returns (lhs, rhs), equal by the identity.
// which = 1, 2, 3 selects the three identities; 2 requires even length,
// 3 odd length.  Throws DegenerateInput when a denominator vanishes.
std::pair<Rat, Rat> residue_identity_check(const std::vector<Rat>& a, int which);

// Closed form for the positive-chamber integral (Robbins, DiPippo-Howe):
//   int_{1 >= x_1 >= ... >= x_n >= 0} det(x_i^{e_j - 1}) dx
//     = (1 / prod e_j) prod_{i<j} (e_i - e_j) / (e_i + e_j).
// Valid for arbitrary positive exponents; exact here for rational ones.
Rat dipippo_howe(const ExponentVector& e);

// Independent oracle for int_{Delta_n} prod |x_i|^s V(x) dx at integer
// s >= 0, by dense-polynomial iterated integration over sign chambers.
Rat oracle_vandermonde_abs(int n, long s);

// Same integral family continued to rational s by the monomial-wise
// meromorphic continuation of each chamber integral (every chamber term is
// rational in s).  kind: 0 = abs weights, 1 = sgn, 2 = cos + i sin.
CRat continued_vandermonde(int n, const Rat& s, int kind);

}  // namespace croftint

#endif
