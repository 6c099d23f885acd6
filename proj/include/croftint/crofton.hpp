#ifndef CROFTINT_CROFTON_HPP
#define CROFTINT_CROFTON_HPP

#include <string>
#include <vector>

#include "croftint/gamma_product.hpp"
#include "croftint/rational.hpp"

namespace croftint {

// The four universal families whose pairings certify non-trivial invariant
// Crofton formulas.
enum class UniversalTag { Abs2m, Sgn2m1, CosPP, SinPP };

struct UniversalCase {
  UniversalTag tag;
  int parameter;  // m for Abs2m/Sgn2m1, p for CosPP/SinPP
};

struct PairingResult {
  std::string case_name;
  int p = 0, q = 0, k = 0;
  Rat s0;
  Rat exact_value;       // spectral rational part; the certified quantity
  double numeric_value;  // including the positive pushforward constant
  bool nonzero = false;
};

// Evaluates the continued pairing for the case; throws InadmissibleCase for
// the excluded p mod 4 classes and DomainError outside desk scale.
PairingResult universal_pairing(const UniversalCase& c);

struct CentroaffineResult {
  int p = 0;
  Rat s0;
  Rat cos_part, sin_part;  // exact spectral parts of the ball pairings
  double cos_value = 0.0, sin_value = 0.0;
  int sin_coefficient = 0;  // (-1)^{p/2} for even p, 0 when unused
  bool certified = false;
};

// Ball-evaluation data behind the centro-affine Crofton recipe; rejects
// p = 3 mod 4.
CentroaffineResult centroaffine_pairing(int p);

struct MuCRow {
  Partition kappa;
  int num_order = 0, den_order = 0, net = 0;
};

struct MuCReport {
  int m = 0, N = 0;
  Rat s0, alpha;
  int required_order = 0;  // the Laurent order the pairing extracts
  std::vector<MuCRow> rows;
  bool tail_stationary = false;
  bool certified = false;
};

// Certifies the kernel mechanism: every kappa in Lambda^2_N yields net
// pole order <= 1 < m for the Constantine ratio at s0 = -2m.
MuCReport mu_c_vanishing(int m);

struct RestrictionRow {
  int b = 0;
  bool structurally_zero = false;
  Rat u_a, u_b;  // parameters of u(s, a, b) when not structurally zero
};

// The two three-case restriction tables; alpha_zero selects L^0 vs L^{pi/2}.
std::vector<RestrictionRow> restriction_table(int p, int k, bool alpha_zero);

struct CertificateEntry {
  std::string functional;    // "L0" or "Lpi2"
  std::string distribution;  // display name of the Crofton distribution
  std::string method;        // "structural" | "u_diag3" | "u_residue" | "odd_p_total"
  std::string expect;        // "zero" | "nonzero"
  bool exact = false;
  Rat exact_value;
  double value = 0.0;
  bool pass = false;
  std::string note;
};

struct Q2Certificate {
  int p = 0, k = 0;
  Rat s0;
  std::string row;
  std::vector<CertificateEntry> entries;
  bool certified = false;
};

// Evaluates the restriction-functional entries behind the O(p,2) basis case
// table and certifies the required zero/nonzero pattern.
Q2Certificate q2_basis_certificate(int p, int k);

// JSON serializations of the report objects.
std::string to_json_string(const PairingResult& r, int precision = 12);
std::string to_json_string(const CentroaffineResult& r, int precision = 12);
std::string to_json_string(const MuCReport& r);
std::string to_json_string(const Q2Certificate& r, int precision = 12);

}  // namespace croftint

#endif
