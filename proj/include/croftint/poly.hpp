#ifndef CROFTINT_POLY_HPP
#define CROFTINT_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "croftint/rational.hpp"

namespace croftint {

// Dense univariate polynomial over exact rationals.  Degrees in this
// project stay small (well under 200), so dense storage is fine.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& v) { return Poly({v}); }
  // a*x + b
  static Poly linear(const Rat& a, const Rat& b) { return Poly({b, a}); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
  }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  double eval_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;
  // Antiderivative with F(0) = 0.
  Poly integral() const;

  // Quotient and remainder with remainder degree < divisor degree.
  static void divrem(const Poly& num, const Poly& den, Poly& quot, Poly& rem);

  // Monic gcd.
  static Poly gcd(Poly a, Poly b);

  // Divide all coefficients by the leading one.
  Poly monic() const;

  // Coefficients of p(x0 + t) as a polynomial in t.
  Poly taylor_shift(const Rat& x0) const;

  // Multiplicity of x0 as a root.
  int root_multiplicity(const Rat& x0) const;

  // Remove the factor (x - x0)^m exactly; m must not exceed the multiplicity.
  Poly deflate(const Rat& x0, int m) const;

  std::string str(const std::string& var = "s") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace croftint

#endif
