#include "croftint/ratfun.hpp"

#include <cassert>
#include <sstream>

#include "croftint/errors.hpp"

namespace croftint {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("RatFun: zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly({Rat(1)});
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divrem(num_, g, q, r);
    assert(r.is_zero());
    num_ = std::move(q);
    Poly::divrem(den_, g, q, r);
    assert(r.is_zero());
    den_ = std::move(q);
  }
  Rat lead = den_.leading();
  den_ = den_ * (Rat(1) / lead);
  num_ = num_ * (Rat(1) / lead);
}

Rat RatFun::eval(const Rat& s0) const {
  Rat d = den_.eval(s0);
  if (d == 0) throw PoleAtPoint("RatFun::eval at pole s0=" + s0.get_str());
  return num_.eval(s0) / d;
}

double RatFun::eval_double(double s0) const {
  return num_.eval_double(s0) / den_.eval_double(s0);
}

int RatFun::pole_order(const Rat& s0) const {
  int v = signed_pole_order(s0);
  return v > 0 ? v : 0;
}

int RatFun::signed_pole_order(const Rat& s0) const {
  return den_.root_multiplicity(s0) - num_.root_multiplicity(s0);
}

LaurentData RatFun::laurent(const Rat& s0, int max_order) const {
  LaurentData out;
  out.center = s0;
  if (num_.is_zero()) return out;

  Poly nt = num_.taylor_shift(s0);
  Poly dt = den_.taylor_shift(s0);
  int vn = nt.root_multiplicity(Rat(0));
  int vd = dt.root_multiplicity(Rat(0));
  Poly nu = nt.deflate(Rat(0), vn);
  Poly du = dt.deflate(Rat(0), vd);
  int val = vn - vd;
  out.pole_order = val < 0 ? -val : 0;
  if (max_order < -out.pole_order)
    throw DomainError("RatFun::laurent: max_order below -pole_order");
  if (max_order < val) return out;

  // Power-series division of the unit parts.
  int terms = max_order - val + 1;
  std::vector<Rat> q(terms, Rat(0));
  Rat d0 = du.coeff(0);
  for (int k = 0; k < terms; ++k) {
    Rat acc = nu.coeff(k);
    for (int j = 0; j < k; ++j) acc -= q[j] * du.coeff(k - j);
    q[k] = acc / d0;
  }
  for (int k = 0; k < terms; ++k) {
    if (q[k] != 0) out.coeffs[val + k] = q[k];
  }
  return out;
}

std::string RatFun::str(const std::string& var) const {
  if (num_.is_zero()) return "0";
  std::ostringstream os;
  os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
  return os.str();
}

namespace {

// Extract the rational roots of p that have small numerator/denominator.
// Denominators in this project are products of (s+i) and (2s+i+j) with
// small i, j, so a bounded scan finds every factor.
std::vector<std::pair<Rat, int>> small_rational_roots(Poly& p) {
  std::vector<std::pair<Rat, int>> roots;
  for (long q = 1; q <= 16 && p.degree() > 0; ++q) {
    for (long num = 0; num <= 512 && p.degree() > 0; ++num) {
      for (int sign = 0; sign < 2; ++sign) {
        if (num == 0 && sign == 1) continue;
        Rat cand = rat(sign == 0 ? -num : num, q);
        if (cand != 0 && mpz_cmp_ui(cand.get_den_mpz_t(), (unsigned long)q) != 0) continue;
        int m = p.root_multiplicity(cand);
        if (m > 0) {
          roots.emplace_back(cand, m);
          p = p.deflate(cand, m);
        }
      }
    }
  }
  return roots;
}

// Print (a*var + b) with integer a > 0, b, gcd(a, b) = 1, returning the
// rational constant pulled out so that a*x+b = c*(x - root).
std::string linear_factor_str(const Rat& root, const std::string& var, Rat& carry) {
  // x - root = (q x - p)/q  with root = p/q.
  mpz_class p = root.get_num();
  mpz_class q = root.get_den();
  carry /= Rat(q);
  std::ostringstream os;
  os << "(";
  if (q != 1) os << q.get_str();
  os << var;
  mpz_class b = -p;
  if (b > 0)
    os << "+" << b.get_str();
  else if (b < 0)
    os << "-" << mpz_class(-b).get_str();
  os << ")";
  return os.str();
}

}  // namespace

std::string RatFun::str_factored(const std::string& var) const {
  if (num_.is_zero()) return "0";
  Poly n = num_, d = den_;
  Rat constant = n.leading() / d.leading();
  n = n.monic();
  d = d.monic();

  std::vector<std::pair<Rat, int>> nroots = small_rational_roots(n);
  std::vector<std::pair<Rat, int>> droots = small_rational_roots(d);

  std::ostringstream num_os, den_os;
  for (auto& [root, mult] : nroots)
    for (int i = 0; i < mult; ++i) {
      Rat inv_carry = 1;
      std::string f = linear_factor_str(root, var, inv_carry);
      constant *= inv_carry;
      num_os << f;
    }
  if (n.degree() > 0) num_os << "(" << n.str(var) << ")";
  for (auto& [root, mult] : droots)
    for (int i = 0; i < mult; ++i) {
      Rat inv_carry = 1;
      std::string f = linear_factor_str(root, var, inv_carry);
      constant /= inv_carry;
      den_os << f;
    }
  if (d.degree() > 0) den_os << "(" << d.str(var) << ")";

  std::string ns = num_os.str(), ds = den_os.str();
  std::ostringstream os;
  if (ns.empty()) {
    os << constant.get_str();
  } else if (constant == 1) {
    os << ns;
  } else if (constant == -1) {
    os << "-" << ns;
  } else {
    os << constant.get_str() << "*" << ns;
  }
  if (!ds.empty()) os << "/(" << ds << ")";
  return os.str();
}

}  // namespace croftint
