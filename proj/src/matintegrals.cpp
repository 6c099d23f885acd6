#include "croftint/matintegrals.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <atomic>
#include <thread>

#include "croftint/errors.hpp"
#include "croftint/rng.hpp"

namespace croftint {

Rat epsilon_coeff(EpsilonKind kind, int b) {
  switch (kind) {
    case EpsilonKind::Abs:
      return Rat(1);
    case EpsilonKind::Sgn:
      return Rat(b % 2 == 0 ? 1 : -1);
    case EpsilonKind::Cos:
      switch (((b % 4) + 4) % 4) {
        case 0: return Rat(1);
        case 2: return Rat(-1);
        default: return Rat(0);
      }
    case EpsilonKind::Sin:
      switch (((b % 4) + 4) % 4) {
        case 1: return Rat(1);
        case 3: return Rat(-1);
        default: return Rat(0);
      }
    case EpsilonKind::Plus:
      return Rat(b == 0 ? 1 : 0);
  }
  return Rat(0);
}

GammaProduct spectral_constant(int n) {
  if (n < 1) throw DomainError("spectral_constant: n >= 1");
  GammaProduct c;
  Rat fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  c.multiply_prefactor(fact / rat_pow(Rat(2), n));
  c.multiply_pi_power(rat(n * n, 2));
  GammaProduct gn = GammaProduct::gamma_n(n, rat(n + 2, 2));
  return c * gn.inverse();
}

std::complex<double> MatIntegralResult::eval(double s) const {
  if (identically_zero) return {0.0, 0.0};
  if (plus) {
    GammaProduct g = plus->s_part;
    // Instantiate at rational approximation of s only through eval_at when s
    // is exactly representable; otherwise use log-Gamma directly.
    double log_acc = 0.0;
    double sign = 1.0;
    for (auto& [shift, e] : g.factors()) {
      int sgn = 1;
      double lv = log_abs_gamma(s + shift.get_d(), sgn);
      log_acc += e * lv;
      if (sgn < 0 && e % 2 != 0) sign = -sign;
    }
    log_acc += std::log(M_PI) * g.pi_power().get_d();
    auto cp = plus->const_part.eval();
    return {sign * std::exp(log_acc) * g.prefactor().get_d() * cp.value, 0.0};
  }
  auto cv = constant.eval();
  return {cv.value * re.eval_double(s), cv.value * im.eval_double(s)};
}

MatIntegralResult D_closed(int n, EpsilonKind kind) {
  if (n < 1) throw DomainError("D_closed: n >= 1");
  MatIntegralResult out;
  out.kind = kind;
  out.n = n;
  out.constant = spectral_constant(n);
  switch (kind) {
    case EpsilonKind::Abs: {
      auto r = selberg_I(n, SelbergShape::Abs);
      out.re = r.re;
      out.im = RatFun::zero();
      return out;
    }
    case EpsilonKind::Sgn: {
      auto r = selberg_I(n, SelbergShape::Sgn);
      out.identically_zero = r.identically_zero;
      out.re = r.re;
      out.im = RatFun::zero();
      return out;
    }
    case EpsilonKind::Cos: {
      auto r = selberg_I(n, SelbergShape::Mixed);
      out.re = r.re;  // real part of the cos + i sin combination
      out.im = RatFun::zero();
      out.identically_zero = r.re.is_zero();
      return out;
    }
    case EpsilonKind::Sin: {
      auto r = selberg_I(n, SelbergShape::Mixed);
      out.re = r.im;  // imaginary part carries D^sin
      out.im = RatFun::zero();
      out.identically_zero = r.im.is_zero();
      return out;
    }
    case EpsilonKind::Plus: {
      MatIntegralResult::PlusForm pf;
      pf.s_part = GammaProduct::gamma_n(n, rat(n + 1, 2)) *
                  GammaProduct::gamma_n(n, Rat(n + 1)).inverse();
      pf.const_part = GammaProduct::gamma_n(n, rat(n + 1, 2));
      out.plus = std::move(pf);
      out.re = RatFun::constant(Rat(1));
      out.im = RatFun::zero();
      return out;
    }
  }
  throw DomainError("D_closed: unknown kind");
}

namespace {

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  long accepted = 0;
};

void mc_worker(int n, const std::vector<std::pair<EpsilonKind, double>>& what,
               long begin, long end, std::uint64_t seed,
               std::vector<Accumulator>& acc) {
  const int dim = n * (n + 1) / 2;
  Eigen::MatrixXd X(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(n);
  for (long idx = begin; idx < end; ++idx) {
    SplitMix64 rng = SplitMix64::for_sample(seed, static_cast<std::uint64_t>(idx));
    int pos = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double v = rng.next_symmetric();
        X(i, j) = v;
        X(j, i) = v;
        ++pos;
      }
    (void)pos;
    (void)dim;
    if (n <= 3)
      solver.computeDirect(X, Eigen::EigenvaluesOnly);
    else
      solver.compute(X, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    bool inside = true;
    for (int i = 0; i < n; ++i)
      if (std::abs(ev(i)) > 1.0) inside = false;
    double abs_det = 1.0;
    int neg = 0;
    bool near_zero = false;
    if (inside) {
      for (int i = 0; i < n; ++i) {
        double lam = ev(i);
        if (std::abs(lam) < 1e-12) near_zero = true;
        if (lam < 0) ++neg;
        abs_det *= std::abs(lam);
      }
    }
    for (size_t w = 0; w < what.size(); ++w) {
      double value = 0.0;
      if (inside && !near_zero) {
        double eps = epsilon_coeff(what[w].first, neg).get_d();
        if (eps != 0.0) value = eps * std::pow(abs_det, what[w].second);
      }
      acc[w].sum += value;
      acc[w].sum_sq += value * value;
      if (inside && !near_zero && w == 0) ++acc[w].accepted;
    }
  }
}

}  // namespace

std::vector<McEstimate> D_mc_batch(int n, const std::vector<std::pair<EpsilonKind, double>>& what,
                                   long samples, std::uint64_t seed, int workers) {
  if (n < 1 || n > 4)
    throw DimensionTooLarge("D_mc_oracle: rejection sampling is limited to n <= 4");
  if (samples < 1) throw DomainError("D_mc: samples >= 1");
  workers = std::max(1, workers);
  // Fixed-size blocks reduced in index order keep the floating-point
  // summation identical for every worker count.
  const long block_size = 8192;
  const long blocks = (samples + block_size - 1) / block_size;
  std::vector<std::vector<Accumulator>> per_block(
      blocks, std::vector<Accumulator>(what.size()));
  std::vector<std::thread> threads;
  std::atomic<long> next_block{0};
  for (int t = 0; t < std::min<long>(workers, blocks); ++t) {
    threads.emplace_back([&]() {
      for (;;) {
        long blk = next_block.fetch_add(1);
        if (blk >= blocks) return;
        long begin = blk * block_size;
        long end = std::min(samples, begin + block_size);
        mc_worker(n, what, begin, end, seed, per_block[blk]);
      }
    });
  }
  for (auto& th : threads) th.join();

  const double box_volume = std::exp2(static_cast<double>(n * (n + 1) / 2));
  std::vector<McEstimate> out(what.size());
  for (size_t w = 0; w < what.size(); ++w) {
    double sum = 0.0, sum_sq = 0.0;
    long accepted = 0;
    for (long blk = 0; blk < blocks; ++blk) {
      sum += per_block[blk][w].sum;
      sum_sq += per_block[blk][w].sum_sq;
      accepted += per_block[blk][w].accepted;
    }
    double mean = sum / samples;
    double var = std::max(0.0, sum_sq / samples - mean * mean);
    out[w].mean = box_volume * mean;
    out[w].stderr_ = box_volume * std::sqrt(var / samples);
    out[w].acceptance = static_cast<double>(accepted) / samples;
    out[w].convergence_warning = (w == 0) && out[w].acceptance < 1e-4;
  }
  // Acceptance is counted on the first slot only; copy it across.
  for (size_t w = 1; w < out.size(); ++w) {
    out[w].acceptance = out[0].acceptance;
    out[w].convergence_warning = out[0].convergence_warning;
  }
  return out;
}

McEstimate D_mc_oracle(int n, EpsilonKind kind, double s, long samples,
                       std::uint64_t seed, int workers) {
  if (s < 0.0) throw DomainError("D_mc_oracle: s must be >= 0 for convergence");
  auto v = D_mc_batch(n, {{kind, s}}, samples, seed, workers);
  return v[0];
}

GammaProduct selberg_normalization(int m, const Rat& a, const Rat& b) {
  if (m < 1) throw DomainError("selberg_normalization: m >= 1");
  if (a <= -1 || b <= -1) throw DomainError("selberg_normalization: a, b > -1");
  GammaProduct g = GammaProduct::gamma_n(m, a + rat(m + 1, 2)) *
                   GammaProduct::gamma_n(m, b + rat(m + 1, 2)) *
                   GammaProduct::gamma_n(m, rat(m + 2, 2)) *
                   GammaProduct::gamma_n(m, a + b + m + 1).inverse();
  g.multiply_pi_power(-rat(m * m, 2));
  g.multiply_prefactor(rat_pow(Rat(2), m));
  return g;
}

ConstantineRatio constantine_ratio(int N, const Rat& alpha, const Partition& kappa) {
  if (N < 1) throw DomainError("constantine_ratio: N >= 1");
  if (static_cast<long>(kappa.length()) > N)
    throw DomainError("constantine_ratio: kappa has more than N parts");
  ConstantineRatio out;
  out.numerator = GammaProduct::gamma_n_kappa(N, kappa, rat(N + 1, 2));
  out.denominator = GammaProduct::gamma_n_kappa(N, kappa, alpha + N + 1);
  out.const_part = GammaProduct::gamma_n(N, alpha + rat(N + 1, 2));
  return out;
}

}  // namespace croftint
