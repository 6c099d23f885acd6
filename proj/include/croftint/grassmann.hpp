#ifndef CROFTINT_GRASSMANN_HPP
#define CROFTINT_GRASSMANN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace croftint {

// Ambient signature data (p, q, k) with q <= p, 0 <= k <= p + q.
struct SignatureTriple {
  int p = 1, q = 1, k = 1;
  SignatureTriple() = default;
  SignatureTriple(int p_, int q_, int k_);
  int n() const { return p + q; }
  int N() const { return std::min({q, k, n() - k}); }
  int Nq() const { return std::max(0, k - q); }
  int Np() const { return std::max(0, k - p); }
};

// A point of Gr_k(R^{p,q}) with its cached M_P(E) spectrum.
struct SubspaceSample {
  SignatureTriple sig;
  Eigen::MatrixXd basis;         // k x n, rows orthonormal
  std::vector<double> spectrum;  // lambda_1 >= ... >= lambda_N in [-1, 1]
};

// Haar-distributed subspace: orthonormalized Gaussian matrix with a fixed
// sign convention; bit-identical for identical (sig, seed).
SubspaceSample haar_sample(const SignatureTriple& sig, std::uint64_t seed);

// Subspace from an explicit spanning set (rows); orthonormalized, spectrum
// computed.
SubspaceSample subspace_from_rows(const SignatureTriple& sig, const Eigen::MatrixXd& rows);

// Spectrum of M_P(E) = 2 [L^T L]_N - I_N computed from the row-orthonormal
// basis; sorted descending, trivial +1/-1 eigenvalues dropped.
std::vector<double> subspace_spectrum(const SignatureTriple& sig, const Eigen::MatrixXd& basis);

// Normalized joint density of the ordered spectrum under the invariant
// measure (Jacobi-type weight, Selberg-normalized).  Throws DomainError for
// unordered or out-of-range lambda.
double angle_density(const SignatureTriple& sig, const std::vector<double>& lambda);

// CDF of lambda_1 under the invariant measure, for N <= 2; used by the
// distribution tests.  Self-normalized by quadrature.
class Lambda1Cdf {
 public:
  explicit Lambda1Cdf(const SignatureTriple& sig, int grid = 4096);
  double operator()(double t) const;

 private:
  std::vector<double> ts_, cdf_;
};

// Spectrum of the P-orthogonal complement, computed from scratch.
std::vector<double> complement_spectrum(const SubspaceSample& E);
// The complement subspace itself.
SubspaceSample complement_subspace(const SubspaceSample& E);

// Signature of Q restricted to E from the full Gram matrix eigenvalues.
struct OrbitSignature {
  int a = 0, b = 0;
  bool near_degenerate = false;
};
OrbitSignature orbit_signature(const SubspaceSample& E, double tol = 1e-10);

// Appendix-A shadow volume of the O(p) x O(q)-symmetric ellipsoid with
// half-axes (a, ..., a, b, ..., b).
double ellipsoid_projection_volume(const SubspaceSample& E, double a, double b);

// Volume of the Euclidean unit ball in R^k.
double unit_ball_volume(int k);

struct ProjectionMc {
  double volume = 0.0;
  double stderr_ = 0.0;
};
// Membership-rejection Monte Carlo estimate of the shadow volume; k <= 4.
ProjectionMc projection_mc_oracle(const SubspaceSample& E, double a, double b,
                                  long samples, std::uint64_t seed, int workers = 1);

}  // namespace croftint

#endif
