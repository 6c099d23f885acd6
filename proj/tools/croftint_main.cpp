#include <CLI11.hpp>
#include <json.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "croftint/crofton.hpp"
#include "croftint/errors.hpp"
#include "croftint/grassmann.hpp"
#include "croftint/hyper_u.hpp"
#include "croftint/matintegrals.hpp"
#include "croftint/selberg.hpp"

using nlohmann::json;
using namespace croftint;

namespace {

constexpr int kSchemaVersion = 1;

Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) throw DomainError("cannot parse rational: " + text);
  r.canonicalize();
  return r;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

std::vector<Rat> parse_rats(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::string fmt(double v, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

EpsilonKind parse_kind(const std::string& k) {
  if (k == "abs") return EpsilonKind::Abs;
  if (k == "sgn") return EpsilonKind::Sgn;
  if (k == "cos") return EpsilonKind::Cos;
  if (k == "sin") return EpsilonKind::Sin;
  if (k == "plus") return EpsilonKind::Plus;
  throw DomainError("unknown kind: " + k);
}

struct Output {
  std::string command;
  json config = json::object();
  json result = json::object();
  int exit_code = 0;

  void emit(const std::string& format) const {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["config"] = config;
    doc["result"] = result;
    if (format == "json") {
      std::cout << doc.dump(2) << "\n";
      return;
    }
    // CSV: flattened key,value rows in sorted key order; columns fixed.
    std::cout << "key,value\n";
    json flat = doc.flatten();
    for (auto it = flat.begin(); it != flat.end(); ++it) {
      std::string v = it.value().is_string() ? it.value().get<std::string>()
                                             : it.value().dump();
      if (v.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : v) {
          if (c == '"') quoted += '"';
          quoted += c;
        }
        quoted += '"';
        v = quoted;
      }
      std::cout << it.key() << "," << v << "\n";
    }
  }
};

json spectrum_json(const std::vector<double>& spec, int precision) {
  json arr = json::array();
  for (double v : spec) arr.push_back(fmt(v, precision));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"croftint: exact and Monte Carlo evaluation of signed Selberg-type "
               "matrix integrals, Grassmannian angle densities and Crofton pairings"};
  app.require_subcommand(1);

  std::string format = "json";
  int precision = 12;
  if (const char* env = std::getenv("CROFTINT_PRECISION")) precision = std::atoi(env);
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", precision, "float display digits");

  Output out;

  // selberg-I
  auto* cmd_si = app.add_subcommand("selberg-I", "spectral rational function I_n(s)");
  int si_n = 1;
  std::string si_shape = "abs";
  cmd_si->add_option("--n", si_n)->required();
  cmd_si->add_option("--shape", si_shape)->check(CLI::IsMember({"abs", "sgn", "mixed"}));
  cmd_si->callback([&]() {
    out.command = "selberg-I";
    out.config = {{"n", si_n}, {"shape", si_shape}};
    SelbergShape shape = si_shape == "abs"   ? SelbergShape::Abs
                         : si_shape == "sgn" ? SelbergShape::Sgn
                                             : SelbergShape::Mixed;
    auto r = selberg_I(si_n, shape);
    if (r.identically_zero) {
      out.result["identically_zero"] = true;
    } else {
      out.result["ratfun"] = r.re.str_factored();
      if (!r.im.is_zero()) out.result["ratfun_im"] = r.im.str_factored();
    }
  });

  // f-eval
  auto* cmd_fe = app.add_subcommand("f-eval", "closed form / recursion for f_n(e)");
  std::string fe_e, fe_doubled, fe_method = "closed";
  cmd_fe->add_option("--e", fe_e, "integer exponents, comma separated");
  cmd_fe->add_option("--doubled", fe_doubled, "doubled exponents (2e_j)");
  cmd_fe->add_option("--method", fe_method)->check(CLI::IsMember({"closed", "recursive"}));
  cmd_fe->callback([&]() {
    out.command = "f-eval";
    out.config = {{"e", fe_e}, {"doubled", fe_doubled}, {"method", fe_method}};
    if (fe_e.empty() == fe_doubled.empty())
      throw CLI::ValidationError("f-eval", "provide exactly one of --e / --doubled");
    ExponentVector ev = fe_e.empty() ? ExponentVector(parse_longs(fe_doubled))
                                     : ExponentVector::from_integers(parse_longs(fe_e));
    CRat v = fe_method == "closed" ? f_closed(ev) : f_recursive(ev);
    out.result["doubled_exponents"] = ev.doubled();
    out.result["re"] = v.re.get_str();
    out.result["im"] = v.im.get_str();
    out.result["value"] = v.str();
  });

  // f-oracle
  auto* cmd_fo = app.add_subcommand("f-oracle", "exact iterated-integration oracle");
  std::string fo_e, fo_doubled, fo_domain = "full";
  cmd_fo->add_option("--e", fo_e);
  cmd_fo->add_option("--doubled", fo_doubled);
  cmd_fo->add_option("--domain", fo_domain, "full or a,b");
  cmd_fo->callback([&]() {
    out.command = "f-oracle";
    out.config = {{"e", fo_e}, {"doubled", fo_doubled}, {"domain", fo_domain}};
    if (fo_e.empty() == fo_doubled.empty())
      throw CLI::ValidationError("f-oracle", "provide exactly one of --e / --doubled");
    ExponentVector ev = fo_e.empty() ? ExponentVector(parse_longs(fo_doubled))
                                     : ExponentVector::from_integers(parse_longs(fo_e));
    FDomain dom = FDomain::whole();
    if (fo_domain != "full") {
      auto ab = parse_longs(fo_domain);
      if (ab.size() != 2) throw CLI::ValidationError("f-oracle", "--domain full or a,b");
      dom = FDomain::chamber(static_cast<int>(ab[0]), static_cast<int>(ab[1]));
    }
    CRat v = f_oracle(ev, dom);
    out.result["doubled_exponents"] = ev.doubled();
    out.result["re"] = v.re.get_str();
    out.result["im"] = v.im.get_str();
    out.result["value"] = v.str();
  });

  // residue-check
  auto* cmd_rc = app.add_subcommand("residue-check", "the three residue identities");
  int rc_which = 1;
  std::string rc_a;
  cmd_rc->add_option("--which", rc_which)->required()->check(CLI::Range(1, 3));
  cmd_rc->add_option("--a", rc_a, "rational entries, comma separated")->required();
  cmd_rc->callback([&]() {
    out.command = "residue-check";
    out.config = {{"which", rc_which}, {"a", rc_a}};
    auto [lhs, rhs] = residue_identity_check(parse_rats(rc_a), rc_which);
    out.result["lhs"] = lhs.get_str();
    out.result["rhs"] = rhs.get_str();
    out.result["equal"] = (lhs == rhs);
    if (lhs != rhs) out.exit_code = 2;
  });

  // D
  auto* cmd_d = app.add_subcommand("D", "closed form of D_n^eps(s)");
  int d_n = 1;
  std::string d_kind = "abs";
  cmd_d->add_option("--n", d_n)->required();
  cmd_d->add_option("--kind", d_kind)
      ->check(CLI::IsMember({"abs", "sgn", "cos", "sin", "plus"}));
  cmd_d->callback([&]() {
    out.command = "D";
    out.config = {{"n", d_n}, {"kind", d_kind}};
    auto r = D_closed(d_n, parse_kind(d_kind));
    if (r.identically_zero) {
      out.result["identically_zero"] = true;
      return;
    }
    if (r.plus) {
      out.result["gamma_form"] =
          r.plus->s_part.str() + " * " + r.plus->const_part.str();
      return;
    }
    out.result["constant"] = r.constant.str();
    out.result["constant_value"] = fmt(r.constant.eval().value, precision);
    out.result["ratfun"] = r.re.str_factored();
  });

  // D-mc
  auto* cmd_dm = app.add_subcommand("D-mc", "Monte Carlo oracle for D_n^eps(s)");
  int dm_n = 1, dm_workers = 1;
  std::string dm_kind = "abs";
  double dm_s = 0.0;
  long dm_samples = 100000;
  std::uint64_t dm_seed = 0;
  cmd_dm->add_option("--n", dm_n)->required();
  cmd_dm->add_option("--kind", dm_kind)->check(CLI::IsMember({"abs", "sgn", "cos", "sin"}));
  cmd_dm->add_option("--s", dm_s)->required();
  cmd_dm->add_option("--samples", dm_samples)->required();
  cmd_dm->add_option("--seed", dm_seed)->required();
  cmd_dm->add_option("--workers", dm_workers);
  cmd_dm->callback([&]() {
    out.command = "D-mc";
    out.config = {{"n", dm_n}, {"kind", dm_kind}, {"s", dm_s},
                  {"samples", dm_samples}, {"seed", dm_seed}, {"workers", dm_workers}};
    auto est = D_mc_oracle(dm_n, parse_kind(dm_kind), dm_s, dm_samples, dm_seed, dm_workers);
    out.result["mean"] = fmt(est.mean, precision);
    out.result["stderr"] = fmt(est.stderr_, precision);
    out.result["acceptance"] = fmt(est.acceptance, precision);
    if (est.convergence_warning) out.result["convergence_warning"] = true;
  });

  // gamma-kappa
  auto* cmd_gk = app.add_subcommand("gamma-kappa", "Gamma_N(x, kappa) with pole queries");
  int gk_n = 1;
  std::string gk_kappa, gk_x0;
  cmd_gk->add_option("--n", gk_n)->required();
  cmd_gk->add_option("--kappa", gk_kappa, "partition parts, comma separated");
  cmd_gk->add_option("--x0", gk_x0, "rational query point");
  cmd_gk->callback([&]() {
    out.command = "gamma-kappa";
    out.config = {{"n", gk_n}, {"kappa", gk_kappa}, {"x0", gk_x0}};
    Partition kappa(gk_kappa.empty() ? std::vector<long>{} : parse_longs(gk_kappa));
    auto g = GammaProduct::gamma_n_kappa(gk_n, kappa);
    out.result["gamma_product"] = g.str();
    if (!gk_x0.empty()) {
      Rat x0 = parse_rat(gk_x0);
      out.result["pole_order"] = g.pole_order_at(x0);
      auto ev = g.eval_at(x0);
      if (ev.net_pole_order == 0) out.result["value"] = fmt(ev.value, precision);
    }
  });

  // constantine
  auto* cmd_ct = app.add_subcommand("constantine", "Constantine Beta-Jacobi ratio poles");
  int ct_n = 1;
  std::string ct_alpha = "0", ct_kappa, ct_s0;
  cmd_ct->add_option("--N", ct_n)->required();
  cmd_ct->add_option("--alpha", ct_alpha);
  cmd_ct->add_option("--kappa", ct_kappa);
  cmd_ct->add_option("--s0", ct_s0)->required();
  cmd_ct->callback([&]() {
    out.command = "constantine";
    out.config = {{"N", ct_n}, {"alpha", ct_alpha}, {"kappa", ct_kappa}, {"s0", ct_s0}};
    Partition kappa(ct_kappa.empty() ? std::vector<long>{} : parse_longs(ct_kappa));
    auto cr = constantine_ratio(ct_n, parse_rat(ct_alpha), kappa);
    Rat s0 = parse_rat(ct_s0);
    out.result["numerator_pole_order"] = cr.numerator_pole_order(s0);
    out.result["denominator_pole_order"] = cr.denominator_pole_order(s0);
    out.result["net_pole_order"] = cr.net_pole_order(s0);
  });

  // sample-grassmann
  auto* cmd_sg = app.add_subcommand("sample-grassmann", "Haar subspace with spectrum");
  int sg_p = 1, sg_q = 1, sg_k = 1;
  std::uint64_t sg_seed = 0;
  cmd_sg->add_option("--p", sg_p)->required();
  cmd_sg->add_option("--q", sg_q)->required();
  cmd_sg->add_option("--k", sg_k)->required();
  cmd_sg->add_option("--seed", sg_seed)->required();
  cmd_sg->callback([&]() {
    out.command = "sample-grassmann";
    out.config = {{"p", sg_p}, {"q", sg_q}, {"k", sg_k}, {"seed", sg_seed}};
    auto s = haar_sample(SignatureTriple(sg_p, sg_q, sg_k), sg_seed);
    out.result["spectrum"] = spectrum_json(s.spectrum, precision);
    json basis = json::array();
    for (int i = 0; i < s.basis.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < s.basis.cols(); ++j) row.push_back(fmt(s.basis(i, j), precision));
      basis.push_back(row);
    }
    out.result["basis"] = basis;
    auto sig = orbit_signature(s);
    out.result["orbit_signature"] = {{"a", sig.a}, {"b", sig.b},
                                     {"near_degenerate", sig.near_degenerate}};
  });

  // angle-density
  auto* cmd_ad = app.add_subcommand("angle-density", "invariant spectral density");
  int ad_p = 1, ad_q = 1, ad_k = 1;
  std::string ad_lambda;
  cmd_ad->add_option("--p", ad_p)->required();
  cmd_ad->add_option("--q", ad_q)->required();
  cmd_ad->add_option("--k", ad_k)->required();
  cmd_ad->add_option("--lambda", ad_lambda)->required();
  cmd_ad->callback([&]() {
    out.command = "angle-density";
    out.config = {{"p", ad_p}, {"q", ad_q}, {"k", ad_k}, {"lambda", ad_lambda}};
    double d = angle_density(SignatureTriple(ad_p, ad_q, ad_k), parse_doubles(ad_lambda));
    out.result["density"] = fmt(d, precision);
  });

  // project-ellipsoid
  auto* cmd_pe = app.add_subcommand("project-ellipsoid", "closed-form shadow volume");
  int pe_p = 1, pe_q = 1, pe_k = 1;
  std::uint64_t pe_seed = 0;
  double pe_a = 1.0, pe_b = 1.0;
  cmd_pe->add_option("--p", pe_p)->required();
  cmd_pe->add_option("--q", pe_q)->required();
  cmd_pe->add_option("--k", pe_k)->required();
  cmd_pe->add_option("--seed", pe_seed)->required();
  cmd_pe->add_option("--a", pe_a)->required();
  cmd_pe->add_option("--b", pe_b)->required();
  cmd_pe->callback([&]() {
    out.command = "project-ellipsoid";
    out.config = {{"p", pe_p}, {"q", pe_q}, {"k", pe_k}, {"seed", pe_seed},
                  {"a", pe_a}, {"b", pe_b}};
    auto s = haar_sample(SignatureTriple(pe_p, pe_q, pe_k), pe_seed);
    out.result["volume"] = fmt(ellipsoid_projection_volume(s, pe_a, pe_b), precision);
    out.result["spectrum"] = spectrum_json(s.spectrum, precision);
  });

  // project-mc
  auto* cmd_pm = app.add_subcommand("project-mc", "Monte Carlo shadow volume");
  int pm_p = 1, pm_q = 1, pm_k = 1, pm_workers = 1;
  std::uint64_t pm_seed = 0;
  double pm_a = 1.0, pm_b = 1.0;
  long pm_samples = 100000;
  cmd_pm->add_option("--p", pm_p)->required();
  cmd_pm->add_option("--q", pm_q)->required();
  cmd_pm->add_option("--k", pm_k)->required();
  cmd_pm->add_option("--seed", pm_seed)->required();
  cmd_pm->add_option("--a", pm_a)->required();
  cmd_pm->add_option("--b", pm_b)->required();
  cmd_pm->add_option("--samples", pm_samples)->required();
  cmd_pm->add_option("--workers", pm_workers);
  cmd_pm->callback([&]() {
    out.command = "project-mc";
    out.config = {{"p", pm_p}, {"q", pm_q}, {"k", pm_k}, {"seed", pm_seed},
                  {"a", pm_a}, {"b", pm_b}, {"samples", pm_samples},
                  {"workers", pm_workers}};
    auto s = haar_sample(SignatureTriple(pm_p, pm_q, pm_k), pm_seed);
    auto est = projection_mc_oracle(s, pm_a, pm_b, pm_samples, pm_seed, pm_workers);
    out.result["volume"] = fmt(est.volume, precision);
    out.result["stderr"] = fmt(est.stderr_, precision);
    out.result["closed_form"] = fmt(ellipsoid_projection_volume(s, pm_a, pm_b), precision);
  });

  // universal-pairing
  auto* cmd_up = app.add_subcommand("universal-pairing", "universal-family Crofton pairings");
  std::string up_case;
  int up_m = 1, up_p = 2;
  cmd_up->add_option("--case", up_case)
      ->required()
      ->check(CLI::IsMember({"abs_2m", "sgn_2m1", "cos_pp", "sin_pp"}));
  cmd_up->add_option("--m", up_m);
  cmd_up->add_option("--p", up_p);
  cmd_up->callback([&]() {
    out.command = "universal-pairing";
    out.config = {{"case", up_case}, {"m", up_m}, {"p", up_p}};
    UniversalCase uc;
    if (up_case == "abs_2m") uc = {UniversalTag::Abs2m, up_m};
    else if (up_case == "sgn_2m1") uc = {UniversalTag::Sgn2m1, up_m};
    else if (up_case == "cos_pp") uc = {UniversalTag::CosPP, up_p};
    else uc = {UniversalTag::SinPP, up_p};
    auto r = universal_pairing(uc);
    out.result = json::parse(to_json_string(r, precision));
    if (!r.nonzero) out.exit_code = 2;
  });

  // centroaffine
  auto* cmd_ca = app.add_subcommand("centroaffine", "centro-affine pairing values");
  int ca_p = 2;
  cmd_ca->add_option("--p", ca_p)->required();
  cmd_ca->callback([&]() {
    out.command = "centroaffine";
    out.config = {{"p", ca_p}};
    auto r = centroaffine_pairing(ca_p);
    out.result = json::parse(to_json_string(r, precision));
    if (!r.certified) out.exit_code = 2;
  });

  // mu-c-vanishing
  auto* cmd_mc = app.add_subcommand("mu-c-vanishing", "closed-orbit pole-order pipeline");
  int mc_m = 2;
  cmd_mc->add_option("--m", mc_m)->required();
  cmd_mc->callback([&]() {
    out.command = "mu-c-vanishing";
    out.config = {{"m", mc_m}};
    auto r = mu_c_vanishing(mc_m);
    out.result = json::parse(to_json_string(r));
    if (!r.certified) out.exit_code = 2;
  });

  // q2-certificate
  auto* cmd_q2 = app.add_subcommand("q2-certificate", "O(p,2) basis certificate");
  int q2_p = 2, q2_k = 2;
  cmd_q2->add_option("--p", q2_p)->required();
  cmd_q2->add_option("--k", q2_k)->required();
  cmd_q2->callback([&]() {
    out.command = "q2-certificate";
    out.config = {{"p", q2_p}, {"k", q2_k}};
    auto r = q2_basis_certificate(q2_p, q2_k);
    out.result = json::parse(to_json_string(r, precision));
    if (!r.certified) out.exit_code = 2;
  });

  // u-eval
  auto* cmd_ue = app.add_subcommand("u-eval", "u(s, a, b) with continuation");
  std::string ue_s, ue_a = "0", ue_b = "0";
  cmd_ue->add_option("--s", ue_s)->required();
  cmd_ue->add_option("--a", ue_a);
  cmd_ue->add_option("--b", ue_b);
  cmd_ue->callback([&]() {
    out.command = "u-eval";
    out.config = {{"s", ue_s}, {"a", ue_a}, {"b", ue_b}};
    double v = u_eval(parse_rat(ue_s), parse_rat(ue_a), parse_rat(ue_b));
    out.result["value"] = fmt(v, precision);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  out.emit(format);
  return out.exit_code;
}
