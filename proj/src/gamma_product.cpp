#include "croftint/gamma_product.hpp"

#include <cmath>
#include <sstream>

#include "croftint/errors.hpp"

namespace croftint {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("Partition: parts must be weakly decreasing");
  }
}

long Partition::weight() const {
  long w = 0;
  for (long p : parts_) w += p;
  return w;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  if (parts_.empty()) os << "0";
  os << ")";
  return os.str();
}

GammaProduct GammaProduct::gamma_n(long n, const Rat& offset) {
  return gamma_n_kappa(n, Partition{}, offset);
}

GammaProduct GammaProduct::gamma_n_kappa(long n, const Partition& kappa, const Rat& offset) {
  if (n < 1) throw DomainError("gamma_n_kappa: n must be >= 1");
  if (static_cast<long>(kappa.length()) > n)
    throw DomainError("gamma_n_kappa: kappa has more than n parts");
  GammaProduct g;
  g.pi_power_ = Rat(n * (n - 1)) / 4;
  for (long i = 0; i < n; ++i)
    g.multiply_gamma(offset + kappa.part(i) - rat(i, 2), 1);
  return g;
}

GammaProduct& GammaProduct::multiply_prefactor(const Rat& v) {
  prefactor_ *= v;
  return *this;
}

GammaProduct& GammaProduct::multiply_pi_power(const Rat& extra) {
  pi_power_ += extra;
  return *this;
}

GammaProduct& GammaProduct::multiply_gamma(const Rat& shift, int exponent) {
  int& e = factors_[shift];
  e += exponent;
  if (e == 0) factors_.erase(shift);
  return *this;
}

GammaProduct GammaProduct::operator*(const GammaProduct& o) const {
  GammaProduct r = *this;
  r.prefactor_ *= o.prefactor_;
  r.pi_power_ += o.pi_power_;
  for (auto& [shift, e] : o.factors_) r.multiply_gamma(shift, e);
  return r;
}

GammaProduct GammaProduct::inverse() const {
  GammaProduct r;
  r.prefactor_ = Rat(1) / prefactor_;
  r.pi_power_ = -pi_power_;
  for (auto& [shift, e] : factors_) r.factors_[shift] = -e;
  return r;
}

int GammaProduct::pole_order_at(const Rat& x0) const {
  int order = 0;
  for (auto& [shift, e] : factors_) {
    if (is_nonpositive_integer(x0 + shift)) order += e;
  }
  return order;
}

double log_abs_gamma(double x, int& sign) {
  // lgamma computes log|Gamma|; the sign of Gamma on (-k-1, -k) alternates.
  sign = 1;
  if (x < 0.0) {
    double fl = std::floor(x);
    long k = static_cast<long>(fl);
    if (k % 2 != 0) sign = -1;
  }
  return std::lgamma(x);
}

double gamma_signed(double x) {
  int sign = 1;
  double lv = log_abs_gamma(x, sign);
  return sign * std::exp(lv);
}

GammaProduct::Eval GammaProduct::eval_at(const Rat& x0) const {
  Eval out;
  out.net_pole_order = pole_order_at(x0);
  if (out.net_pole_order > 0) {
    out.diverges = true;
    return out;
  }
  if (out.net_pole_order < 0) {
    out.value = 0.0;
    return out;
  }
  double log_acc = std::log(M_PI) * pi_power_.get_d();
  int sign = prefactor_ > 0 ? 1 : (prefactor_ < 0 ? -1 : 0);
  if (sign == 0) return out;
  log_acc += std::log(std::abs(prefactor_.get_d()));
  for (auto& [shift, e] : factors_) {
    Rat arg = x0 + shift;
    if (is_nonpositive_integer(arg)) {
      // Net pole order is 0, so the divergent eps powers cancel across the
      // product; each pole factor contributes its Laurent leading
      // coefficient Gamma(-k + eps) ~ (-1)^k / (k! eps).
      long k = -to_long(arg);
      log_acc -= e * std::lgamma(static_cast<double>(k) + 1.0);
      if ((k % 2 != 0) && (e % 2 != 0)) sign = -sign;
    } else {
      int s = 1;
      double lv = log_abs_gamma(arg.get_d(), s);
      log_acc += e * lv;
      if (s < 0 && (e % 2 != 0)) sign = -sign;
    }
  }
  out.value = sign * std::exp(log_acc);
  return out;
}

std::string GammaProduct::str() const {
  std::ostringstream os;
  os << prefactor_.get_str();
  if (pi_power_ != 0) os << "*pi^(" << pi_power_.get_str() << ")";
  for (auto& [shift, e] : factors_) {
    os << "*Gamma(x";
    if (shift > 0)
      os << "+" << shift.get_str();
    else if (shift < 0)
      os << shift.get_str();
    os << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace croftint
