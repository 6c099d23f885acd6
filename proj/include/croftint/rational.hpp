#ifndef CROFTINT_RATIONAL_HPP
#define CROFTINT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace croftint {

// Exact rational scalar used throughout the exact layer.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// x in {0, -1, -2, ...}; the pole set of the Gamma function.
inline bool is_nonpositive_integer(const Rat& x) { return is_integer(x) && x <= 0; }

inline long to_long(const Rat& x) { return mpz_get_si(x.get_num_mpz_t()); }

inline double to_double(const Rat& x) { return x.get_d(); }

inline std::string to_string(const Rat& x) { return x.get_str(); }

// Generalized binomial coefficient C(a, k) for rational a and integer k >= 0.
inline Rat binom(const Rat& a, unsigned long k) {
  Rat result = 1;
  for (unsigned long i = 0; i < k; ++i) {
    result *= (a - static_cast<long>(i));
    result /= static_cast<long>(i + 1);
  }
  return result;
}

inline Rat rat_pow(const Rat& base, long e) {
  Rat r = 1;
  Rat b = e >= 0 ? base : Rat(1) / base;
  long n = e >= 0 ? e : -e;
  for (long i = 0; i < n; ++i) r *= b;
  return r;
}

// Exact Gaussian rational re + im*sqrt(-1); used for the half-integer
// integral family where the branch convention introduces a factor i.
struct CRat {
  Rat re = 0;
  Rat im = 0;

  CRat() = default;
  CRat(Rat r) : re(std::move(r)) {}
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
  CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
  CRat operator*(const CRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CRat operator*(const Rat& s) const { return {re * s, im * s}; }
  CRat operator/(const Rat& s) const { return {re / s, im / s}; }
  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRat& operator*=(const CRat& o) {
    *this = *this * o;
    return *this;
  }
  bool operator==(const CRat& o) const { return re == o.re && im == o.im; }

  std::string str() const {
    if (im == 0) return re.get_str();
    return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "i";
  }
};

inline CRat imaginary_unit() { return CRat(Rat(0), Rat(1)); }

}  // namespace croftint

#endif
