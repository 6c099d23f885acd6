#include "croftint/selberg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "croftint/errors.hpp"

namespace croftint {

ExponentVector::ExponentVector(std::vector<long> doubled) : doubled_(std::move(doubled)) {
  if (doubled_.empty()) throw DomainError("ExponentVector: empty");
  bool any_even = false, any_odd = false;
  for (long d : doubled_) {
    if (d < 1) throw DomainError("ExponentVector: entries must be positive");
    (d % 2 == 0 ? any_even : any_odd) = true;
  }
  if (any_even && any_odd)
    throw DomainError("ExponentVector: mixed integer/half-integer parity");
  regime_ = any_even ? Regime::Integer : Regime::HalfInteger;
}

ExponentVector ExponentVector::from_integers(const std::vector<long>& e) {
  std::vector<long> d(e.size());
  for (size_t i = 0; i < e.size(); ++i) d[i] = 2 * e[i];
  return ExponentVector(std::move(d));
}

int ExponentVector::n_plus() const {
  if (regime_ != Regime::Integer) throw DomainError("n_plus: integer regime only");
  int c = 0;
  for (long d : doubled_)
    if ((d / 2) % 2 == 0) ++c;
  return c;
}

int ExponentVector::n_minus() const {
  return static_cast<int>(n()) - n_plus();
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// Exact value of the iterated integral of prod_r y_r^{g_r} over the ordered
// chain 1 >= y_1 >= ... >= y_l >= 0.  Each antiderivative keeps a single
// monomial, so the value telescopes into suffix-sum factors.
Rat chain_value(const std::vector<Rat>& g) {
  Rat val = 1;
  Rat suffix = 0;
  for (size_t r = g.size(); r-- > 0;) {
    suffix += g[r] + 1;
    if (suffix == 0) throw PoleAtPoint("chain integral: suffix exponent sum vanishes");
    val /= suffix;
  }
  return val;
}

// Branch factor of x^{c} at negative x under the convention
// x^{(2k+1)/2} = (-1)^k |x|^{(2k+1)/2} sqrt(-1); c is given doubled.
CRat negative_branch_factor(long doubled_c) {
  if (doubled_c % 2 == 0) {
    long c = doubled_c / 2;
    return CRat(Rat(c % 2 == 0 ? 1 : -1));
  }
  long k = (doubled_c - 1) / 2;
  Rat sgn(k % 2 == 0 ? 1 : -1);
  return CRat(Rat(0), sgn);
}

CRat f_chamber(const ExponentVector& e, int a, int b) {
  const int n = static_cast<int>(e.n());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CRat total;
  do {
    int sgn = permutation_sign(perm);
    // Row i carries exponent e_{perm[i]} - 1.
    std::vector<Rat> gpos, gneg;
    gpos.reserve(a);
    gneg.reserve(b);
    CRat factor{Rat(sgn)};
    for (int i = 0; i < a; ++i) gpos.push_back(rat(e.doubled()[perm[i]] - 2, 2));
    // Negative block: substitute x = -t; chain runs t_n >= ... >= t_{a+1}.
    for (int i = n - 1; i >= a; --i) gneg.push_back(rat(e.doubled()[perm[i]] - 2, 2));
    for (int i = a; i < n; ++i) factor *= negative_branch_factor(e.doubled()[perm[i]] - 2);
    if (factor.is_zero()) continue;
    total += factor * Rat(chain_value(gpos) * chain_value(gneg));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

CRat f_oracle(const ExponentVector& e, const FDomain& domain) {
  const int n = static_cast<int>(e.n());
  if (n > 6) throw DimensionTooLarge("f_oracle: exact mode limited to n <= 6");
  if (!domain.full) {
    if (domain.a + domain.b != n || domain.a < 0 || domain.b < 0)
      throw DomainError("f_oracle: chamber (a,b) must satisfy a+b=n");
    return f_chamber(e, domain.a, domain.b);
  }
  CRat total;
  for (int a = 0; a <= n; ++a) total += f_chamber(e, a, n - a);
  return total;
}

namespace {

std::map<std::vector<long>, CRat>& f_memo() {
  static std::map<std::vector<long>, CRat> memo;
  return memo;
}
std::mutex& f_memo_mutex() {
  static std::mutex m;
  return m;
}

CRat f_rec_sorted(const std::vector<long>& d) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return CRat(Rat(1));
  {
    std::lock_guard<std::mutex> lock(f_memo_mutex());
    auto it = f_memo().find(d);
    if (it != f_memo().end()) return it->second;
  }
  Rat sum_e = 0;
  for (long v : d) sum_e += rat(v, 2);
  CRat acc;
  std::vector<long> child;
  child.reserve(d.size() - 1);
  for (int j = 1; j <= n; ++j) {
    CRat coeff;
    long dj = d[j - 1];
    if (dj % 2 == 0) {
      long e = dj / 2;
      long c1 = (j + 1) % 2 == 0 ? 1 : -1;
      long c2 = ((j + n + e - 1) % 2 == 0) ? 1 : -1;
      if (c1 + c2 == 0) continue;
      coeff = CRat(Rat(c1 + c2));
    } else {
      long m = (dj - 1) / 2;
      Rat outer(((j + 1) % 2 == 0) ? 1 : -1);
      Rat twist(((n + m) % 2 == 0) ? 1 : -1);
      coeff = CRat(outer, outer * twist);
    }
    child.clear();
    for (int i = 0; i < n; ++i)
      if (i != j - 1) child.push_back(d[i]);
    acc += coeff * f_rec_sorted(child);
  }
  CRat result = acc / sum_e;
  std::lock_guard<std::mutex> lock(f_memo_mutex());
  f_memo().emplace(d, result);
  return result;
}

// Sort ascending, returning the permutation sign; zero marker for repeats.
bool sort_with_sign(std::vector<long>& d, int& sign) {
  sign = 1;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = 0; j + 1 < d.size() - i; ++j)
      if (d[j] > d[j + 1]) {
        std::swap(d[j], d[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] == d[i + 1]) return false;
  return true;
}

}  // namespace

CRat f_recursive(const ExponentVector& e) {
  std::vector<long> d = e.doubled();
  int sign = 1;
  if (!sort_with_sign(d, sign)) return CRat();  // repeated column
  CRat v = f_rec_sorted(d);
  return sign == 1 ? v : v * Rat(-1);
}

int epsilon_sequence(int n) {
  if (n < 1) throw DomainError("epsilon_sequence: n >= 1");
  std::vector<int> eps(n + 1);
  eps[1] = 1;
  for (int m = 1; 2 * m <= n; ++m) {
    eps[2 * m] = (m % 2 == 0 ? 1 : -1) * eps[2 * m - 1];
    if (2 * m + 1 <= n) eps[2 * m + 1] = eps[2 * m];
  }
  return eps[n];
}

CRat delta_factor(int n, int m) {
  if (n % 2 == 0) {
    Rat scale = rat_pow(Rat(2), n / 2);
    if (m % 2 == 0) return CRat(scale);
    return CRat(Rat(0), scale);
  }
  Rat scale = rat_pow(Rat(2), (n - 1) / 2);
  Rat imag = (m % 2 == 0) ? scale : -scale;
  return CRat(scale, imag);
}

namespace {

// Stable split of indices into two classes; sign of the rearrangement.
struct SplitResult {
  std::vector<size_t> order;
  int sign;
};

SplitResult stable_class_split(const std::vector<int>& cls) {
  SplitResult r;
  r.sign = 1;
  int inversions = 0;
  for (size_t i = 0; i < cls.size(); ++i)
    if (cls[i] == 0) r.order.push_back(i);
  size_t first_count = r.order.size();
  for (size_t i = 0; i < cls.size(); ++i)
    if (cls[i] == 1) r.order.push_back(i);
  // Count pairs (i < j) with cls[i] = 1 and cls[j] = 0, the inversions of
  // the stable split permutation.
  int ones_seen = 0;
  for (size_t i = 0; i < cls.size(); ++i) {
    if (cls[i] == 1)
      ++ones_seen;
    else
      inversions += ones_seen;
  }
  (void)first_count;
  if (inversions % 2 != 0) r.sign = -1;
  return r;
}

}  // namespace

CRat f_closed(const ExponentVector& e) {
  const int n = static_cast<int>(e.n());
  if (e.regime() == ExponentVector::Regime::Integer) {
    int diff = e.n_minus() - e.n_plus();
    if (diff != 0 && diff != 1) return CRat();
    // Class 0 = odd entries first.
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = ((e.doubled()[i] / 2) % 2 != 0) ? 0 : 1;
    SplitResult split = stable_class_split(cls);
    int m = e.n_minus();
    std::vector<Rat> E(n);
    for (int i = 0; i < n; ++i) E[i] = e.entry(split.order[i]);
    Rat num = 1, den = 1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) num *= (E[i] - E[j]);
    for (int k = m; k < n; ++k)
      for (int l = k + 1; l < n; ++l) num *= (E[k] - E[l]);
    for (int i = 0; i < m; ++i) den *= E[i];
    for (int i = 0; i < m; ++i)
      for (int k = m; k < n; ++k) den *= (E[i] + E[k]);
    Rat val = Rat(epsilon_sequence(n)) * rat_pow(Rat(2), n) * num / den;
    return CRat(Rat(split.sign) * val);
  }
  // Half-integer regime: split by doubled entry mod 4.
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = (e.doubled()[i] % 4 == 1) ? 0 : 1;
  SplitResult split = stable_class_split(cls);
  int m = 0;
  for (int c : cls)
    if (c == 0) ++m;
  std::vector<Rat> E(n);
  for (int i = 0; i < n; ++i) E[i] = e.entry(split.order[i]);
  Rat ratio = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool same_class = (i < m && j < m) || (i >= m && j >= m);
      if (!same_class) continue;
      ratio *= (E[i] - E[j]);
      ratio /= (E[i] + E[j]);
    }
  Rat prod_e = 1;
  for (int i = 0; i < n; ++i) prod_e *= E[i];
  CRat val = delta_factor(n, m) * (ratio / prod_e);
  return split.sign == 1 ? val : val * Rat(-1);
}

SelbergIResult selberg_I(int n, SelbergShape shape) {
  if (n < 1) throw DomainError("selberg_I: n >= 1");
  SelbergIResult out;
  Rat same_parity_product = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((j - i) % 2 == 0) same_parity_product *= (j - i);
  Poly cross(std::vector<Rat>{Rat(1)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((j - i) % 2 != 0) cross = cross * Poly::linear(Rat(2), Rat(i + j));

  switch (shape) {
    case SelbergShape::Abs: {
      Poly den = cross;
      for (int i = 1; i <= n; i += 2) den = den * Poly::linear(Rat(1), Rat(i));
      Rat num = rat_pow(Rat(2), n) * same_parity_product;
      out.re = RatFun(Poly::constant(num), den);
      out.im = RatFun::zero();
      return out;
    }
    case SelbergShape::Sgn: {
      if (n % 2 != 0) {
        out.identically_zero = true;
        out.re = RatFun::zero();
        out.im = RatFun::zero();
        return out;
      }
      int m = n / 2;
      Poly den = cross;
      for (int i = 1; i <= m; ++i) den = den * Poly::linear(Rat(1), Rat(2 * i));
      Rat num = Rat(m % 2 == 0 ? 1 : -1) * rat_pow(Rat(2), n) * same_parity_product;
      out.re = RatFun(Poly::constant(num), den);
      out.im = RatFun::zero();
      return out;
    }
    case SelbergShape::Mixed: {
      // Here the (2s+i+j) factors pair same-parity indices, matching the
      // congruence classes of the half-integer exponents.
      int m = n / 2;
      Poly den(std::vector<Rat>{Rat(1)});
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if ((j - i) % 2 == 0) den = den * Poly::linear(Rat(2), Rat(i + j));
      for (int j = 1; j <= n; ++j) den = den * Poly::linear(Rat(1), Rat(j));
      long c2 = static_cast<long>(n - m) * (n - m - 1) / 2;
      Rat sign(c2 % 2 == 0 ? 1 : -1);
      CRat constant = delta_factor(n, m) * (sign * same_parity_product);
      out.re = RatFun(Poly::constant(constant.re), den);
      out.im = RatFun(Poly::constant(constant.im), den);
      return out;
    }
  }
  throw DomainError("selberg_I: unknown shape");
}

std::pair<Rat, Rat> residue_identity_check(const std::vector<Rat>& a, int which) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw DomainError("residue_identity_check: empty vector");
  Rat total = 0;
  for (const Rat& v : a) total += v;
  if (which == 1) {
    Rat lhs = 0;
    for (int j = 0; j < n; ++j) {
      Rat term = a[j];
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        Rat diff = a[i] - a[j];
        if (diff == 0) throw DegenerateInput("identity 1: repeated entries");
        term *= (a[i] + a[j]);
        term /= diff;
      }
      lhs += term;
    }
    Rat rhs = (n % 2 != 0) ? total : -total;
    return {lhs, rhs};
  }
  if (which == 2) {
    if (n % 2 != 0) throw DomainError("identity 2 requires even length");
    int m = n / 2;
    Rat lhs = 0;
    for (int j = m; j < n; ++j) {
      Rat num = 1, den = 1;
      for (int i = 0; i < m; ++i) num *= (a[j] + a[i]);
      for (int k = m; k < n; ++k) {
        if (k == j) continue;
        Rat diff = a[j] - a[k];
        if (diff == 0) throw DegenerateInput("identity 2: repeated second-half entries");
        den *= diff;
      }
      lhs += num / den;
    }
    return {lhs, total};
  }
  if (which == 3) {
    if (n % 2 == 0) throw DomainError("identity 3 requires odd length");
    int m = (n + 1) / 2;
    Rat lhs = 0;
    for (int j = 0; j < m; ++j) {
      Rat num = a[j], den = 1;
      for (int k = m; k < n; ++k) num *= (a[j] + a[k]);
      for (int i = 0; i < m; ++i) {
        if (i == j) continue;
        Rat diff = a[j] - a[i];
        if (diff == 0) throw DegenerateInput("identity 3: repeated first-half entries");
        den *= diff;
      }
      lhs += num / den;
    }
    return {lhs, total};
  }
  throw DomainError("residue_identity_check: which must be 1, 2 or 3");
}

Rat dipippo_howe(const ExponentVector& e) {
  Rat value = 1;
  const size_t n = e.n();
  for (size_t j = 0; j < n; ++j) value /= e.entry(j);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      value *= (e.entry(i) - e.entry(j));
      value /= (e.entry(i) + e.entry(j));
    }
  return value;
}

namespace {

// Iterated dense-polynomial integration of prod_r t_r^{g_r} over the chain
// 1 >= y_1 >= ... >= y_l >= 0, innermost variable last in g.
Rat dense_chain(const std::vector<long>& g) {
  Poly G = Poly::constant(Rat(1));
  for (size_t r = g.size(); r-- > 0;) {
    // G <- int_0^y t^{g_r} G(t) dt
    std::vector<Rat> shifted(g[r] + G.degree() + 1, Rat(0));
    for (int k = 0; k <= G.degree(); ++k) shifted[k + g[r]] = G.coeff(k);
    G = Poly(std::move(shifted)).integral();
  }
  return G.eval(Rat(1));
}

}  // namespace

Rat oracle_vandermonde_abs(int n, long s) {
  if (s < 0) throw DomainError("oracle_vandermonde_abs: s >= 0");
  if (n > 6) throw DimensionTooLarge("oracle_vandermonde_abs: n <= 6");
  std::vector<int> perm(n);
  Rat total = 0;
  for (int a = 0; a <= n; ++a) {
    int b = n - a;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sgn = permutation_sign(perm);
      // Vandermonde monomial: row i has power n - 1 - perm[i].
      long neg_power_sum = 0;
      std::vector<long> gpos, gneg;
      for (int i = 0; i < a; ++i) gpos.push_back(s + (n - 1 - perm[i]));
      for (int i = n - 1; i >= a; --i) gneg.push_back(s + (n - 1 - perm[i]));
      for (int i = a; i < n; ++i) neg_power_sum += (n - 1 - perm[i]);
      // sign = sgn * (-1)^{neg_power_sum}
      Rat term = dense_chain(gpos) * dense_chain(gneg);
      if ((sgn < 0) != (neg_power_sum % 2 != 0)) term = -term;
      total += term;
      (void)b;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return total;
}

CRat continued_vandermonde(int n, const Rat& s, int kind) {
  if (n > 6) throw DimensionTooLarge("continued_vandermonde: n <= 6");
  std::vector<int> perm(n);
  CRat total;
  for (int a = 0; a <= n; ++a) {
    int b = n - a;
    CRat weight(Rat(1));
    if (kind == 1) weight = CRat(Rat(b % 2 == 0 ? 1 : -1));
    if (kind == 2) {
      // i^b
      switch (b % 4) {
        case 0: weight = CRat(Rat(1)); break;
        case 1: weight = CRat(Rat(0), Rat(1)); break;
        case 2: weight = CRat(Rat(-1)); break;
        case 3: weight = CRat(Rat(0), Rat(-1)); break;
      }
    }
    std::iota(perm.begin(), perm.end(), 0);
    CRat chamber;
    do {
      int sgn = permutation_sign(perm);
      long neg_power_sum = 0;
      std::vector<Rat> gpos, gneg;
      for (int i = 0; i < a; ++i) gpos.push_back(s + (n - 1 - perm[i]));
      for (int i = n - 1; i >= a; --i) gneg.push_back(s + (n - 1 - perm[i]));
      for (int i = a; i < n; ++i) neg_power_sum += (n - 1 - perm[i]);
      Rat term = chain_value(gpos) * chain_value(gneg);
      int total_sign = sgn * (neg_power_sum % 2 == 0 ? 1 : -1);
      chamber += CRat(Rat(total_sign) * term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += weight * chamber;
  }
  return total;
}

}  // namespace croftint
