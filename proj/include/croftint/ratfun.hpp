#ifndef CROFTINT_RATFUN_HPP
#define CROFTINT_RATFUN_HPP

#include <map>
#include <string>

#include "croftint/poly.hpp"

namespace croftint {

// Laurent expansion data of a rational function at a rational center.
// Negative orders are the pole part; the coefficient at -pole_order is
// nonzero whenever pole_order > 0.
struct LaurentData {
  Rat center;
  std::map<int, Rat> coeffs;
  int pole_order = 0;

  Rat coeff(int order) const {
    auto it = coeffs.find(order);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  Rat residue() const { return coeff(-1); }
};

// Rational function in one formal variable over exact rationals, kept in
// reduced form with monic denominator, so equality is coefficient-wise.
class RatFun {
 public:
  RatFun() : num_(), den_({Rat(1)}) {}
  RatFun(Poly num, Poly den);
  static RatFun constant(const Rat& v) { return RatFun(Poly::constant(v), Poly({Rat(1)})); }
  static RatFun zero() { return RatFun(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFun operator+(const RatFun& o) const { return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  RatFun operator-(const RatFun& o) const { return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  RatFun operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }
  RatFun operator*(const Rat& s) const { return RatFun(num_ * s, den_); }
  RatFun operator/(const RatFun& o) const { return RatFun(num_ * o.den_, den_ * o.num_); }

  // Exact value; throws PoleAtPoint if s0 is a pole.
  Rat eval(const Rat& s0) const;
  double eval_double(double s0) const;

  // Pole order clamped at zero (a zero of the function reports 0).
  int pole_order(const Rat& s0) const;
  // Denominator-root multiplicity minus numerator-root multiplicity;
  // negative values mean s0 is a zero of the function.
  int signed_pole_order(const Rat& s0) const;

  // Exact Laurent coefficients at s0 up to max_order inclusive.
  // Requires max_order >= -pole_order(s0).
  LaurentData laurent(const Rat& s0, int max_order) const;

  std::string str(const std::string& var = "s") const;
  // Factored display over rational roots, e.g. "4/((s+1)*(2s+3))".
  std::string str_factored(const std::string& var = "s") const;

 private:
  void reduce();
  Poly num_, den_;
};

}  // namespace croftint

#endif
