#include "croftint/poly.hpp"

#include <cassert>
#include <sstream>

namespace croftint {

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
  if (s == 0) return Poly();
  std::vector<Rat> r = c_;
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

Poly Poly::operator-() const { return (*this) * Rat(-1); }

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(r));
}

Poly Poly::integral() const {
  if (is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / static_cast<long>(i + 1);
  return Poly(std::move(r));
}

void Poly::divrem(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  assert(!den.is_zero());
  std::vector<Rat> r = num.c_;
  int dn = den.degree();
  Rat lead = den.leading();
  std::vector<Rat> q;
  int dr = static_cast<int>(r.size()) - 1;
  if (dr >= dn) q.assign(dr - dn + 1, Rat(0));
  while (dr >= dn) {
    Rat f = r[dr] / lead;
    q[dr - dn] = f;
    for (int i = 0; i <= dn; ++i) r[dr - dn + i] -= f * den.c_[i];
    r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && r[dr] == 0) {
      r.pop_back();
      --dr;
    }
  }
  quot = Poly(std::move(q));
  rem = Poly(std::move(r));
}

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  while (!b.is_zero()) {
    Poly q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (*this) * (Rat(1) / leading());
}

Poly Poly::taylor_shift(const Rat& x0) const {
  // Repeated synthetic division by (x - x0) peels off the Taylor
  // coefficients at x0.
  std::vector<Rat> work = c_;
  std::vector<Rat> out;
  out.reserve(c_.size());
  size_t n = work.size();
  for (size_t k = 0; k < n; ++k) {
    // One synthetic-division round: remainder is the next Taylor
    // coefficient, the quotient shifts down into work[0..d-1].
    Rat rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      Rat tmp = work[i] + rem * x0;
      work[i] = rem;
      rem = tmp;
    }
    out.push_back(rem);
    if (!work.empty()) work.pop_back();
  }
  return Poly(std::move(out));
}

int Poly::root_multiplicity(const Rat& x0) const {
  if (is_zero()) return 0;
  int m = 0;
  Poly p = *this;
  while (p.eval(x0) == 0) {
    ++m;
    Poly q, r;
    divrem(p, Poly::linear(Rat(1), -x0), q, r);
    p = std::move(q);
  }
  return m;
}

Poly Poly::deflate(const Rat& x0, int m) const {
  Poly p = *this;
  for (int i = 0; i < m; ++i) {
    Poly q, r;
    divrem(p, Poly::linear(Rat(1), -x0), q, r);
    assert(r.is_zero());
    p = std::move(q);
  }
  return p;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat v = coeff(k);
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    Rat av = v > 0 || first ? v : -v;
    if (first && v < 0) {
      os << "-";
      av = -v;
    }
    if (k == 0 || av != 1) os << av.get_str();
    if (k > 0) {
      if (av != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace croftint
