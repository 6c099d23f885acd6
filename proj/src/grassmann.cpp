#include "croftint/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "croftint/errors.hpp"
#include "croftint/matintegrals.hpp"
#include "croftint/rng.hpp"

namespace croftint {

SignatureTriple::SignatureTriple(int p_, int q_, int k_) : p(p_), q(q_), k(k_) {
  if (q < 0 || p < q) throw DomainError("SignatureTriple: need 0 <= q <= p");
  if (k < 0 || k > p + q) throw DomainError("SignatureTriple: need 0 <= k <= p+q");
}

namespace {

// Modified Gram-Schmidt with a fixed sign convention so samples are
// reproducible across platforms up to floating rounding.
bool orthonormalize_rows(Eigen::MatrixXd& B) {
  const int k = static_cast<int>(B.rows());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) B.row(i) -= B.row(i).dot(B.row(j)) * B.row(j);
    double nrm = B.row(i).norm();
    if (nrm < 1e-10) return false;
    B.row(i) /= nrm;
    for (int c = 0; c < B.cols(); ++c) {
      if (std::abs(B(i, c)) > 1e-9) {
        if (B(i, c) < 0) B.row(i) = -B.row(i);
        break;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<double> subspace_spectrum(const SignatureTriple& sig, const Eigen::MatrixXd& basis) {
  const int k = sig.k;
  Eigen::MatrixXd Bp = basis.leftCols(sig.p);
  Eigen::MatrixXd G = 2.0 * (Bp * Bp.transpose()) - Eigen::MatrixXd::Identity(k, k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(G);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  // Drop the trivial +1 (E meets V_+) and -1 (E meets V_-) eigenvalues.
  std::vector<double> out;
  for (int i = sig.Nq(); i < k - sig.Np(); ++i)
    out.push_back(std::clamp(ev[i], -1.0, 1.0));
  return out;
}

SubspaceSample subspace_from_rows(const SignatureTriple& sig, const Eigen::MatrixXd& rows) {
  if (rows.rows() != sig.k || rows.cols() != sig.n())
    throw DomainError("subspace_from_rows: shape mismatch");
  SubspaceSample s;
  s.sig = sig;
  s.basis = rows;
  if (!orthonormalize_rows(s.basis))
    throw DomainError("subspace_from_rows: rank-deficient spanning set");
  s.spectrum = subspace_spectrum(sig, s.basis);
  return s;
}

SubspaceSample haar_sample(const SignatureTriple& sig, std::uint64_t seed) {
  if (sig.k < 1) throw DomainError("haar_sample: k >= 1");
  SubspaceSample s;
  s.sig = sig;
  for (std::uint64_t attempt = 0;; ++attempt) {
    SplitMix64 rng = SplitMix64::for_sample(seed, attempt);
    Eigen::MatrixXd B(sig.k, sig.n());
    for (int i = 0; i < sig.k; ++i)
      for (int j = 0; j < sig.n(); ++j) B(i, j) = rng.next_gaussian();
    if (orthonormalize_rows(B)) {
      s.basis = std::move(B);
      break;
    }
  }
  s.spectrum = subspace_spectrum(sig, s.basis);
  return s;
}

double angle_density(const SignatureTriple& sig, const std::vector<double>& lambda) {
  const int N = sig.N();
  if (N < 1) throw DomainError("angle_density: trivial spectrum (N = 0)");
  if (static_cast<int>(lambda.size()) != N)
    throw DomainError("angle_density: spectrum length must equal N");
  for (int i = 0; i < N; ++i) {
    if (lambda[i] < -1.0 - 1e-10 || lambda[i] > 1.0 + 1e-10)
      throw DomainError("angle_density: lambda out of [-1, 1]");
    if (i > 0 && lambda[i] > lambda[i - 1])
      throw DomainError("angle_density: lambda must be weakly decreasing");
  }
  Rat aq(std::abs(sig.q - sig.k) - 1, 2);  // exponent on (1 - lambda)
  Rat ap(std::abs(sig.p - sig.k) - 1, 2);  // exponent on (1 + lambda)
  double unnorm = 1.0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) unnorm *= (lambda[i] - lambda[j]);
  for (int i = 0; i < N; ++i)
    unnorm *= std::pow(1.0 - lambda[i], aq.get_d()) * std::pow(1.0 + lambda[i], ap.get_d());
  auto sv = selberg_normalization(N, ap, aq).eval();
  double log2_scale = Rat(rat(N * (N - 1), 2) + N * (ap + aq + 1)).get_d();
  double z = std::exp2(log2_scale) * sv.value;
  for (int i = 2; i <= N; ++i) z /= i;
  return unnorm / z;
}

Lambda1Cdf::Lambda1Cdf(const SignatureTriple& sig, int grid) {
  const int N = sig.N();
  if (N < 1 || N > 2) throw DomainError("Lambda1Cdf supports N in {1, 2}");
  double aq = (std::abs(sig.q - sig.k) - 1) / 2.0;
  double ap = (std::abs(sig.p - sig.k) - 1) / 2.0;
  // theta grid with lambda = cos(theta); in half-angle form the weighted
  // volume element w(cos t) sin t = 2^{aq+ap+1} sin(t/2)^{2aq+1}
  // cos(t/2)^{2ap+1} is smooth for exponents >= -1/2, endpoints included.
  const int G = grid;
  std::vector<double> theta(G + 1), lam(G + 1), w_sin(G + 1);
  double scale = std::exp2(aq + ap + 1.0);
  for (int j = 0; j <= G; ++j) {
    theta[j] = M_PI * j / G;
    lam[j] = std::cos(theta[j]);
    double h = 0.5 * theta[j];
    w_sin[j] = scale * std::pow(std::sin(h), 2.0 * aq + 1.0) *
               std::pow(std::cos(h), 2.0 * ap + 1.0);
  }
  double h = M_PI / G;
  if (N == 1) {
    // F(lambda) accumulates from theta = pi (lambda = -1) backwards.
    std::vector<double> cum(G + 1, 0.0);
    for (int j = G; j-- > 0;)
      cum[j] = cum[j + 1] + 0.5 * h * (w_sin[j] + w_sin[j + 1]);
    ts_.resize(G + 1);
    cdf_.resize(G + 1);
    for (int j = 0; j <= G; ++j) {
      ts_[j] = lam[G - j];
      cdf_[j] = cum[G - j] / cum[0];
    }
    return;
  }
  // N = 2: moments M_k(y) = int_{-1}^{y} x^k w(x) dx on the grid.
  std::vector<double> m0(G + 1, 0.0), m1(G + 1, 0.0);
  for (int j = G; j-- > 0;) {
    m0[j] = m0[j + 1] + 0.5 * h * (w_sin[j] + w_sin[j + 1]);
    m1[j] = m1[j + 1] + 0.5 * h * (lam[j] * w_sin[j] + lam[j + 1] * w_sin[j + 1]);
  }
  // H(t) = int_{-1}^{t} w(y) (y M0(y) - M1(y)) dy, again in theta.
  std::vector<double> hker(G + 1, 0.0);
  for (int j = 0; j <= G; ++j) hker[j] = w_sin[j] * (lam[j] * m0[j] - m1[j]);
  std::vector<double> H(G + 1, 0.0);
  for (int j = G; j-- > 0;) H[j] = H[j + 1] + 0.5 * h * (hker[j] + hker[j + 1]);
  ts_.resize(G + 1);
  cdf_.resize(G + 1);
  for (int j = 0; j <= G; ++j) {
    ts_[j] = lam[G - j];
    cdf_[j] = H[G - j] / H[0];
  }
}

double Lambda1Cdf::operator()(double t) const {
  if (t <= ts_.front()) return 0.0;
  if (t >= ts_.back()) return 1.0;
  auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
  size_t hi = static_cast<size_t>(it - ts_.begin());
  size_t lo = hi - 1;
  double den = ts_[hi] - ts_[lo];
  double frac = den > 0 ? (t - ts_[lo]) / den : 0.0;
  return cdf_[lo] + frac * (cdf_[hi] - cdf_[lo]);
}

SubspaceSample complement_subspace(const SubspaceSample& E) {
  const int n = E.sig.n();
  const int k = E.sig.k;
  Eigen::MatrixXd Bt = E.basis.transpose();  // n x k
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Bt);
  Eigen::MatrixXd Q = qr.householderQ();
  Eigen::MatrixXd comp = Q.rightCols(n - k).transpose();
  SubspaceSample out;
  out.sig = SignatureTriple(E.sig.p, E.sig.q, n - k);
  out.basis = comp;
  orthonormalize_rows(out.basis);
  out.spectrum = subspace_spectrum(out.sig, out.basis);
  return out;
}

std::vector<double> complement_spectrum(const SubspaceSample& E) {
  return complement_subspace(E).spectrum;
}

OrbitSignature orbit_signature(const SubspaceSample& E, double tol) {
  const int k = E.sig.k;
  Eigen::MatrixXd Bp = E.basis.leftCols(E.sig.p);
  Eigen::MatrixXd G = 2.0 * (Bp * Bp.transpose()) - Eigen::MatrixXd::Identity(k, k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(G);
  OrbitSignature out;
  for (int i = 0; i < k; ++i) {
    double v = solver.eigenvalues()(i);
    if (std::abs(v) <= tol)
      out.near_degenerate = true;
    else if (v > 0)
      ++out.a;
    else
      ++out.b;
  }
  return out;
}

double unit_ball_volume(int k) {
  return std::pow(M_PI, k / 2.0) / std::tgamma(k / 2.0 + 1.0);
}

double ellipsoid_projection_volume(const SubspaceSample& E, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("ellipsoid: half-axes must be positive");
  double A = 0.5 * (a * a + b * b);
  double B = 0.5 * (a * a - b * b);
  double vol = unit_ball_volume(E.sig.k);
  vol *= std::pow(a, E.sig.Nq()) * std::pow(b, E.sig.Np());
  for (double lam : E.spectrum) vol *= std::sqrt(A + B * lam);
  return vol;
}

ProjectionMc projection_mc_oracle(const SubspaceSample& E, double a, double b,
                                  long samples, std::uint64_t seed, int workers) {
  const int k = E.sig.k;
  if (k > 4) throw DimensionTooLarge("projection_mc_oracle: k <= 4");
  if (samples < 1) throw DomainError("projection_mc_oracle: samples >= 1");
  // Shadow of the ellipsoid in the orthonormal coordinates of E is the
  // ellipsoid with matrix S2 = (B D)(B D)^T.
  Eigen::MatrixXd M = E.basis;
  M.leftCols(E.sig.p) *= a;
  M.rightCols(E.sig.q) *= b;
  Eigen::MatrixXd S2 = M * M.transpose();
  Eigen::MatrixXd S2inv = S2.inverse();
  Eigen::VectorXd half(k);
  double box = 1.0;
  for (int i = 0; i < k; ++i) {
    half(i) = std::sqrt(S2(i, i));
    box *= 2.0 * half(i);
  }
  workers = std::max(1, workers);
  std::vector<long> hits(workers, 0);
  std::vector<std::thread> threads;
  long chunk = (samples + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    long begin = t * chunk;
    long end = std::min(samples, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, t, begin, end]() {
      Eigen::VectorXd alpha(k);
      long local = 0;
      for (long idx = begin; idx < end; ++idx) {
        SplitMix64 rng = SplitMix64::for_sample(seed, static_cast<std::uint64_t>(idx));
        for (int i = 0; i < k; ++i) alpha(i) = half(i) * rng.next_symmetric();
        if (alpha.dot(S2inv * alpha) <= 1.0) ++local;
      }
      hits[t] = local;
    });
  }
  for (auto& th : threads) th.join();
  long total = 0;
  for (long h : hits) total += h;
  double frac = static_cast<double>(total) / samples;
  ProjectionMc out;
  out.volume = frac * box;
  out.stderr_ = box * std::sqrt(std::max(0.0, frac * (1.0 - frac)) / samples);
  return out;
}

}  // namespace croftint
