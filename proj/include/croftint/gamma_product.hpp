#ifndef CROFTINT_GAMMA_PRODUCT_HPP
#define CROFTINT_GAMMA_PRODUCT_HPP

#include <map>
#include <string>
#include <vector>

#include "croftint/rational.hpp"

namespace croftint {

// Weakly decreasing list of non-negative integer parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);
  const std::vector<long>& parts() const { return parts_; }
  long part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  size_t length() const { return parts_.size(); }
  long weight() const;
  std::string str() const;

 private:
  std::vector<long> parts_;
};

// Formal product  prefactor * pi^pi_power * prod_i Gamma(x + shift_i)^{e_i}
// over a common formal argument x.  Pole order queries are exact; numeric
// evaluation uses log-Gamma in double precision (~1e-14 relative), which is
// ample for the 1e-8..1e-12 gates in this project.
class GammaProduct {
 public:
  GammaProduct() = default;
  static GammaProduct one() { return GammaProduct(); }

  // Gamma_n(x + offset) = pi^{n(n-1)/4} prod_{i=0}^{n-1} Gamma(x + offset - i/2)
  static GammaProduct gamma_n(long n, const Rat& offset = Rat(0));
  // Gamma_N(x + offset, kappa): shifts offset + kappa_{i+1} - i/2.
  static GammaProduct gamma_n_kappa(long n, const Partition& kappa, const Rat& offset = Rat(0));

  GammaProduct& multiply_prefactor(const Rat& v);
  GammaProduct& multiply_pi_power(const Rat& extra);
  GammaProduct& multiply_gamma(const Rat& shift, int exponent = 1);
  GammaProduct operator*(const GammaProduct& o) const;
  GammaProduct inverse() const;
  GammaProduct operator/(const GammaProduct& o) const { return *this * o.inverse(); }

  const Rat& prefactor() const { return prefactor_; }
  const Rat& pi_power() const { return pi_power_; }
  const std::map<Rat, int>& factors() const { return factors_; }

  // Signed pole order at x0: sum over factors of exponent * [x0 + shift
  // is a nonpositive integer].  Positive = pole, negative = zero.
  int pole_order_at(const Rat& x0) const;

  // Numeric value at x0.  Returns 0 when pole_order_at < 0; +/-inf hides
  // behind `diverges` when pole_order_at > 0.
  struct Eval {
    int net_pole_order = 0;
    bool diverges = false;
    double value = 0.0;
  };
  Eval eval_at(const Rat& x0) const;
  // Convenience for products with no formal dependence.
  Eval eval() const { return eval_at(Rat(0)); }

  std::string str() const;

 private:
  Rat prefactor_ = 1;
  Rat pi_power_ = 0;
  std::map<Rat, int> factors_;
};

// Gamma(x) for real non-pole x; sign handled explicitly.
double gamma_signed(double x);
// log |Gamma(x)| and the sign of Gamma(x); x must not be a nonpositive integer.
double log_abs_gamma(double x, int& sign);

}  // namespace croftint

#endif
