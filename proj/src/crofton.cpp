#include "croftint/crofton.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>

#include "croftint/errors.hpp"
#include "croftint/hyper_u.hpp"
#include "croftint/matintegrals.hpp"
#include "croftint/selberg.hpp"

namespace croftint {

namespace {

double constant_value(int n) {
  auto ev = spectral_constant(n).eval();
  return ev.value;
}

}  // namespace

PairingResult universal_pairing(const UniversalCase& c) {
  PairingResult out;
  switch (c.tag) {
    case UniversalTag::Abs2m: {
      int m = c.parameter;
      if (m < 1 || m > 6) throw DomainError("universal_pairing abs_2m: 1 <= m <= 6");
      out.case_name = "abs_2m";
      out.p = 2 * m;
      out.q = 2 * m - 1;
      out.k = 2 * m - 1;
      out.s0 = Rat(-2 * m);
      auto I = selberg_I(2 * m - 1, SelbergShape::Abs);
      out.exact_value = I.re.eval(out.s0);
      out.numeric_value = constant_value(2 * m - 1) * out.exact_value.get_d();
      out.nonzero = out.exact_value != 0;
      return out;
    }
    case UniversalTag::Sgn2m1: {
      int m = c.parameter;
      if (m < 1 || m > 6) throw DomainError("universal_pairing sgn_2m1: 1 <= m <= 6");
      out.case_name = "sgn_2m1";
      out.p = 2 * m + 1;
      out.q = 2 * m;
      out.k = 2 * m;
      out.s0 = Rat(-(2 * m + 1));
      auto I = selberg_I(2 * m, SelbergShape::Sgn);
      out.exact_value = I.re.eval(out.s0);
      out.numeric_value = constant_value(2 * m) * out.exact_value.get_d();
      out.nonzero = out.exact_value != 0;
      return out;
    }
    case UniversalTag::CosPP:
    case UniversalTag::SinPP: {
      int p = c.parameter;
      bool is_cos = (c.tag == UniversalTag::CosPP);
      if (p < 2) throw DomainError("universal_pairing cos/sin: p >= 2 (k = p-1 >= 1)");
      if (p > 8) throw DomainError("universal_pairing cos/sin: desk scale p <= 8");
      if (is_cos && p % 4 == 3)
        throw InadmissibleCase("cos pairing requires p != 3 mod 4");
      if (!is_cos && p % 4 == 1)
        throw InadmissibleCase("sin pairing requires p != 1 mod 4");
      out.case_name = is_cos ? "cos_pp" : "sin_pp";
      out.p = p;
      out.q = p;
      out.k = p - 1;
      out.s0 = rat(-(2 * p + 1), 2);
      auto I = selberg_I(p - 1, SelbergShape::Mixed);
      const RatFun& part = is_cos ? I.re : I.im;
      out.exact_value = part.is_zero() ? Rat(0) : part.eval(out.s0);
      out.numeric_value = constant_value(p - 1) * out.exact_value.get_d();
      out.nonzero = out.exact_value != 0;
      return out;
    }
  }
  throw DomainError("universal_pairing: unknown case");
}

CentroaffineResult centroaffine_pairing(int p) {
  if (p < 2) throw DomainError("centroaffine_pairing: p >= 2");
  if (p % 4 == 3) throw InadmissibleCase("centroaffine pairing requires p != 3 mod 4");
  CentroaffineResult out;
  out.p = p;
  out.s0 = rat(-(2 * p + 1), 2);
  auto I = selberg_I(p - 1, SelbergShape::Mixed);
  out.cos_part = I.re.is_zero() ? Rat(0) : I.re.eval(out.s0);
  out.sin_part = I.im.is_zero() ? Rat(0) : I.im.eval(out.s0);
  double c = constant_value(p - 1);
  out.cos_value = c * out.cos_part.get_d();
  out.sin_value = c * out.sin_part.get_d();
  if (p % 4 == 1) {
    // mu_p = mu_sin^{p-1}(s0); the certifying ball pairing is the cos one,
    // via the Fourier relation; structurally sin_part = 0 for n = 0 mod 4.
    out.sin_coefficient = 0;
    out.certified = (out.cos_part != 0) && (out.sin_part == 0);
  } else {
    out.sin_coefficient = (p / 2) % 2 == 0 ? 1 : -1;
    out.certified = (out.cos_part != 0) && (out.sin_part != 0);
  }
  return out;
}

MuCReport mu_c_vanishing(int m) {
  if (m < 2 || m > 5) throw DomainError("mu_c_vanishing: 2 <= m <= 5");
  MuCReport out;
  out.m = m;
  out.N = 2 * m - 1;
  out.s0 = Rat(-2 * m);
  out.alpha = rat(-1, 2);
  out.required_order = m;  // floor((N + [s0 integer]) / 2) = m
  auto add_kappa = [&](const Partition& kappa) {
    ConstantineRatio cr = constantine_ratio(out.N, out.alpha, kappa);
    MuCRow row;
    row.kappa = kappa;
    row.num_order = cr.numerator_pole_order(out.s0);
    row.den_order = cr.denominator_pole_order(out.s0);
    row.net = row.num_order - row.den_order;
    out.rows.push_back(std::move(row));
  };
  add_kappa(Partition{});
  // Lambda^2_N: kappa = (t, 1^j); pole orders depend on t only through
  // [t <= m], so t is enumerated through m+2 and stationarity checked.
  for (long t = 1; t <= m + 2; ++t)
    for (int j = 0; j < out.N; ++j) {
      std::vector<long> parts;
      parts.push_back(t);
      for (int i = 0; i < j; ++i) parts.push_back(1);
      add_kappa(Partition(std::move(parts)));
    }
  out.certified = true;
  for (const auto& row : out.rows)
    if (row.net > 1) out.certified = false;
  // Stationarity of the t-tail: rows for t = m+1 and t = m+2 coincide.
  out.tail_stationary = true;
  size_t per_t = static_cast<size_t>(out.N);
  size_t base = 1 + per_t * static_cast<size_t>(m);  // rows before t = m+1
  for (size_t j = 0; j < per_t; ++j) {
    const auto& r1 = out.rows[base + j];
    const auto& r2 = out.rows[base + per_t + j];
    if (r1.num_order != r2.num_order || r1.den_order != r2.den_order)
      out.tail_stationary = false;
  }
  if (!out.tail_stationary) out.certified = false;
  return out;
}

std::vector<RestrictionRow> restriction_table(int p, int k, bool alpha_zero) {
  if (k < 2 || k > p) throw DomainError("restriction_table: 2 <= k <= p");
  std::vector<RestrictionRow> rows(3);
  for (int b = 0; b <= 2; ++b) rows[b].b = b;
  if (alpha_zero) {
    rows[0].structurally_zero = true;
    rows[1].u_a = rat(p - k, 2);
    rows[1].u_b = rat(k - 3, 2);
    rows[2].u_a = rat(k - 3, 2);
    rows[2].u_b = rat(p - k, 2);
  } else {
    rows[2].structurally_zero = true;
    rows[0].u_a = rat(p - k - 1, 2);
    rows[0].u_b = rat(k - 2, 2);
    rows[1].u_a = rat(k - 2, 2);
    rows[1].u_b = rat(p - k - 1, 2);
  }
  return rows;
}

namespace {

CertificateEntry structural_entry(const std::string& functional, const std::string& dist,
                                  const std::string& note) {
  CertificateEntry e;
  e.functional = functional;
  e.distribution = dist;
  e.method = "structural";
  e.expect = "zero";
  e.exact = true;
  e.exact_value = 0;
  e.value = 0.0;
  e.pass = true;
  e.note = note;
  return e;
}

CertificateEntry diag3_entry(const std::string& functional, const std::string& dist,
                             const Rat& a, long b, int sign) {
  CertificateEntry e;
  e.functional = functional;
  e.distribution = dist;
  e.method = "u_diag3";
  e.expect = "nonzero";
  Rat r = u_diag3_rational_part(a, b);
  e.exact = true;
  e.exact_value = Rat(sign) * r;
  e.value = sign * u_diag3(a, Rat(b));
  e.pass = e.exact_value != 0;
  return e;
}

CertificateEntry residue_entry(const std::string& functional, const std::string& dist,
                               long m0, const Rat& a, const Rat& b, bool expect_nonzero) {
  CertificateEntry e;
  e.functional = functional;
  e.distribution = dist;
  e.method = "u_residue";
  e.expect = expect_nonzero ? "nonzero" : "zero";
  Rat r = u_residue(m0, a, b);
  e.exact = true;
  e.exact_value = r;
  e.value = r.get_d();
  e.pass = expect_nonzero ? (r != 0) : (r == 0);
  if (!expect_nonzero)
    e.note = "degenerate at this k: residue parameters coincide; "
             "non-triviality follows from the restriction argument";
  return e;
}

CertificateEntry total_entry(const std::string& functional, const std::string& dist,
                             const Rat& A, const Rat& B) {
  CertificateEntry e;
  e.functional = functional;
  e.distribution = dist;
  e.method = "odd_p_total";
  e.expect = "nonzero";
  Rat a = A < B ? A : B;
  long m = std::labs(to_long(A - B));
  OddPTotal t = odd_p_total(a, m);
  e.exact = t.exact;
  e.exact_value = t.exact_value;
  e.value = t.value;
  if (t.divergent) {
    e.pass = true;
    e.note = "divergent limit (nonzero in the extended sense)";
  } else if (t.exact) {
    e.pass = t.exact_value != 0;
  } else {
    e.pass = std::abs(t.value) >= 1e-8;
    if (!e.pass && t.value != 0.0)
      throw NumericallyAmbiguous("q2 certificate entry below the 1e-8 gate");
  }
  if (m == 0 && e.note.empty())
    e.note = "m = 0: symmetric-sum convention for the two-term limit";
  return e;
}

}  // namespace

Q2Certificate q2_basis_certificate(int p, int k) {
  if (k < 2 || k > p) throw DomainError("q2_basis_certificate: 2 <= k <= p");
  Q2Certificate out;
  out.p = p;
  out.k = k;
  out.s0 = rat(-(p + 3), 2);

  if (p % 2 == 0) {
    // Even p rows: span{ mu_cos(s0) or mu_sin(s0), mu_c }.
    if (k % 2 == 0) {
      out.row = "p=0 k=0 mod 2: span{|s|_{k,0}-|s|_{k-2,2}, mu_c}";
      out.entries.push_back(structural_entry(
          "L0", "mu_c", "supp mu_c is the nonnegative closure, disjoint from L0"));
      // int_{L0} mu_cos = -u(s0, (k-3)/2, (p-k)/2); s0 = -a-b-3.
      out.entries.push_back(
          diag3_entry("L0", "|s|_{k,0}-|s|_{k-2,2}", rat(k - 3, 2), (p - k) / 2, -1));
    } else {
      out.row = "p=0 k=1 mod 2: span{|s|_{k-1,1}, mu_c}";
      out.entries.push_back(structural_entry(
          "L0", "mu_c", "supp mu_c is the nonnegative closure, disjoint from L0"));
      out.entries.push_back(
          diag3_entry("L0", "|s|_{k-1,1}", rat(p - k, 2), (k - 3) / 2, 1));
    }
    out.certified = true;
    for (const auto& e : out.entries) out.certified = out.certified && e.pass;
    return out;
  }

  // Odd p: s0 is an integer; m0 = (p+3)/2 indexes the residue.
  long m0 = (p + 3) / 2;
  bool p1mod4 = (p % 4 == 1);
  std::string mu1 = p1mod4 ? "|s|^{s0}" : "sgn(s)|s|^{s0}";
  if (k % 2 == 0) {
    out.row = p1mod4 ? "p=1 mod 4, k even: span{|s|^{s0}, mu_{k-2,1}}"
                     : "p=3 mod 4, k even: span{sgn|s|^{s0}, mu_{k-2,1}}";
    out.entries.push_back(structural_entry(
        "Lpi2", "mu_{k-2,1}", "support meets only rank <= k-1 subspaces off L^{pi/2}"));
    bool regular = (2 * k != p + 3);
    out.entries.push_back(residue_entry("L0", "mu_{k-2,1}", m0, rat(k - 3, 2),
                                        rat(p - k, 2), regular));
    out.entries.push_back(
        total_entry("Lpi2", mu1, rat(p - k - 1, 2), rat(k - 2, 2)));
  } else {
    out.row = p1mod4 ? "p=1 mod 4, k odd: span{|s|^{s0}, mu_{k-1,0}}"
                     : "p=3 mod 4, k odd: span{sgn|s|^{s0}, mu_{k-1,0}}";
    out.entries.push_back(structural_entry(
        "L0", "mu_{k-1,0}", "supp mu_{k-1,0} is the nonnegative closure, disjoint from L0"));
    bool regular = (2 * k != p + 1);
    out.entries.push_back(residue_entry("Lpi2", "mu_{k-1,0}", m0, rat(p - k - 1, 2),
                                        rat(k - 2, 2), regular));
    out.entries.push_back(total_entry("L0", mu1, rat(p - k, 2), rat(k - 3, 2)));
  }
  out.certified = true;
  for (const auto& e : out.entries) out.certified = out.certified && e.pass;
  return out;
}

namespace {

std::string format_double(double v, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

}  // namespace

std::string to_json_string(const PairingResult& r, int precision) {
  nlohmann::json j;
  j["case"] = r.case_name;
  j["inputs"] = {{"p", r.p}, {"q", r.q}, {"k", r.k}, {"s0", r.s0.get_str()}};
  j["exact_value"] = r.exact_value.get_str();
  j["numeric_value"] = format_double(r.numeric_value, precision);
  j["certified"] = r.nonzero;
  return j.dump();
}

std::string to_json_string(const CentroaffineResult& r, int precision) {
  nlohmann::json j;
  j["case"] = "centroaffine";
  j["inputs"] = {{"p", r.p}, {"s0", r.s0.get_str()}};
  j["exact_value"] = {{"cos", r.cos_part.get_str()}, {"sin", r.sin_part.get_str()}};
  j["numeric_value"] = {{"cos", format_double(r.cos_value, precision)},
                        {"sin", format_double(r.sin_value, precision)}};
  j["sin_coefficient"] = r.sin_coefficient;
  j["certified"] = r.certified;
  return j.dump();
}

std::string to_json_string(const MuCReport& r) {
  nlohmann::json j;
  j["case"] = "mu_c_vanishing";
  j["inputs"] = {{"m", r.m}, {"N", r.N}, {"alpha", r.alpha.get_str()}, {"s0", r.s0.get_str()}};
  j["required_order"] = r.required_order;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"kappa", row.kappa.str()},
                    {"num_order", row.num_order},
                    {"den_order", row.den_order},
                    {"net", row.net}});
  }
  j["pole_orders"] = rows;
  j["tail_stationary"] = r.tail_stationary;
  j["certified"] = r.certified;
  return j.dump();
}

std::string to_json_string(const Q2Certificate& r, int precision) {
  nlohmann::json j;
  j["case"] = "q2_basis_certificate";
  j["inputs"] = {{"p", r.p}, {"k", r.k}, {"s0", r.s0.get_str()}};
  j["row"] = r.row;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json je = {{"functional", e.functional},
                         {"distribution", e.distribution},
                         {"method", e.method},
                         {"expect", e.expect},
                         {"value", format_double(e.value, precision)},
                         {"pass", e.pass}};
    if (e.exact) je["exact_value"] = e.exact_value.get_str();
    if (!e.note.empty()) je["note"] = e.note;
    entries.push_back(je);
  }
  j["entries"] = entries;
  j["certified"] = r.certified;
  return j.dump();
}

}  // namespace croftint
