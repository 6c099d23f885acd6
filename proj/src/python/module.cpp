#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "croftint/crofton.hpp"
#include "croftint/errors.hpp"
#include "croftint/grassmann.hpp"
#include "croftint/hyper_u.hpp"
#include "croftint/matintegrals.hpp"
#include "croftint/ratfun.hpp"
#include "croftint/selberg.hpp"

namespace py = pybind11;
using namespace croftint;

namespace {

ExponentVector make_exponents(const std::vector<long>& doubled) {
  return ExponentVector(doubled);
}

std::pair<std::string, std::string> crat_pair(const CRat& v) {
  return {v.re.get_str(), v.im.get_str()};
}

SelbergShape shape_from(const std::string& s) {
  if (s == "abs") return SelbergShape::Abs;
  if (s == "sgn") return SelbergShape::Sgn;
  if (s == "mixed") return SelbergShape::Mixed;
  throw DomainError("unknown shape: " + s);
}

EpsilonKind kind_from(const std::string& s) {
  if (s == "abs") return EpsilonKind::Abs;
  if (s == "sgn") return EpsilonKind::Sgn;
  if (s == "cos") return EpsilonKind::Cos;
  if (s == "sin") return EpsilonKind::Sin;
  if (s == "plus") return EpsilonKind::Plus;
  throw DomainError("unknown kind: " + s);
}

Rat rat_from_str(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw DomainError("cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and Monte Carlo evaluation of signed Selberg-type matrix "
            "integrals, Grassmannian angle densities and Crofton pairings";

  py::register_exception<PoleAtPoint>(m, "PoleAtPoint");
  py::register_exception<DimensionTooLarge>(m, "DimensionTooLarge");
  py::register_exception<NotReducible>(m, "NotReducible");
  py::register_exception<BetaPole>(m, "BetaPole");
  py::register_exception<DegenerateInput>(m, "DegenerateInput");
  py::register_exception<DomainError>(m, "DomainErrorCroftint");
  py::register_exception<InadmissibleCase>(m, "InadmissibleCase");

  m.def("f_oracle",
        [](const std::vector<long>& doubled) { return crat_pair(f_oracle(make_exponents(doubled))); },
        py::arg("doubled"),
        "Exact oracle value of f_n(e) as (re, im) rational strings; e given doubled.");
  m.def("f_recursive",
        [](const std::vector<long>& doubled) { return crat_pair(f_recursive(make_exponents(doubled))); },
        py::arg("doubled"));
  m.def("f_closed",
        [](const std::vector<long>& doubled) { return crat_pair(f_closed(make_exponents(doubled))); },
        py::arg("doubled"));

  m.def("selberg_I",
        [](int n, const std::string& shape) {
          auto r = selberg_I(n, shape_from(shape));
          py::dict d;
          d["identically_zero"] = r.identically_zero;
          d["re"] = r.re.str_factored();
          d["im"] = r.im.str_factored();
          return d;
        },
        py::arg("n"), py::arg("shape") = "abs");
  m.def("selberg_I_eval",
        [](int n, const std::string& shape, const std::string& s0) {
          auto r = selberg_I(n, shape_from(shape));
          Rat s = rat_from_str(s0);
          std::string re = r.re.is_zero() ? "0" : r.re.eval(s).get_str();
          std::string im = r.im.is_zero() ? "0" : r.im.eval(s).get_str();
          return std::make_pair(re, im);
        },
        py::arg("n"), py::arg("shape"), py::arg("s0"));

  m.def("residue_identity_check",
        [](const std::vector<std::string>& a, int which) {
          std::vector<Rat> v;
          for (auto& s : a) v.push_back(rat_from_str(s));
          auto [lhs, rhs] = residue_identity_check(v, which);
          return std::make_pair(lhs.get_str(), rhs.get_str());
        },
        py::arg("a"), py::arg("which"));

  m.def("u_eval",
        [](const std::string& s, const std::string& a, const std::string& b) {
          return u_eval(rat_from_str(s), rat_from_str(a), rat_from_str(b));
        },
        py::arg("s"), py::arg("a"), py::arg("b"));
  m.def("u_residue",
        [](long mm, const std::string& a, const std::string& b) {
          return u_residue(mm, rat_from_str(a), rat_from_str(b)).get_str();
        },
        py::arg("m"), py::arg("a"), py::arg("b"));

  m.def("D_eval",
        [](int n, const std::string& kind, double s) {
          auto r = D_closed(n, kind_from(kind));
          auto v = r.eval(s);
          return std::make_pair(v.real(), v.imag());
        },
        py::arg("n"), py::arg("kind"), py::arg("s"),
        "Numeric value of D_n^kind at s (real part; imag always 0).");
  m.def("D_mc",
        [](int n, const std::string& kind, double s, long samples, std::uint64_t seed,
           int workers) {
          auto e = D_mc_oracle(n, kind_from(kind), s, samples, seed, workers);
          py::dict d;
          d["mean"] = e.mean;
          d["stderr"] = e.stderr_;
          d["acceptance"] = e.acceptance;
          return d;
        },
        py::arg("n"), py::arg("kind"), py::arg("s"), py::arg("samples"), py::arg("seed"),
        py::arg("workers") = 1);

  m.def("gamma_pole_order",
        [](int n, const std::vector<long>& kappa, const std::string& x0) {
          return GammaProduct::gamma_n_kappa(n, Partition(kappa)).pole_order_at(rat_from_str(x0));
        },
        py::arg("n"), py::arg("kappa"), py::arg("x0"));

  m.def("constantine_pole_orders",
        [](int N, const std::string& alpha, const std::vector<long>& kappa,
           const std::string& s0) {
          auto cr = constantine_ratio(N, rat_from_str(alpha), Partition(kappa));
          Rat s = rat_from_str(s0);
          return py::make_tuple(cr.numerator_pole_order(s), cr.denominator_pole_order(s),
                                cr.net_pole_order(s));
        },
        py::arg("N"), py::arg("alpha"), py::arg("kappa"), py::arg("s0"));

  m.def("haar_spectrum",
        [](int p, int q, int k, std::uint64_t seed) {
          return haar_sample(SignatureTriple(p, q, k), seed).spectrum;
        },
        py::arg("p"), py::arg("q"), py::arg("k"), py::arg("seed"));
  m.def("angle_density",
        [](int p, int q, int k, const std::vector<double>& lambda) {
          return angle_density(SignatureTriple(p, q, k), lambda);
        },
        py::arg("p"), py::arg("q"), py::arg("k"), py::arg("lambda"));
  m.def("complement_spectrum",
        [](int p, int q, int k, std::uint64_t seed) {
          auto s = haar_sample(SignatureTriple(p, q, k), seed);
          return complement_spectrum(s);
        },
        py::arg("p"), py::arg("q"), py::arg("k"), py::arg("seed"));
  m.def("ellipsoid_projection_volume",
        [](int p, int q, int k, std::uint64_t seed, double a, double b) {
          auto s = haar_sample(SignatureTriple(p, q, k), seed);
          return ellipsoid_projection_volume(s, a, b);
        },
        py::arg("p"), py::arg("q"), py::arg("k"), py::arg("seed"), py::arg("a"), py::arg("b"));
  m.def("projection_mc",
        [](int p, int q, int k, std::uint64_t seed, double a, double b, long samples) {
          auto s = haar_sample(SignatureTriple(p, q, k), seed);
          auto e = projection_mc_oracle(s, a, b, samples, seed);
          return std::make_pair(e.volume, e.stderr_);
        },
        py::arg("p"), py::arg("q"), py::arg("k"), py::arg("seed"), py::arg("a"), py::arg("b"),
        py::arg("samples"));

  m.def("universal_pairing",
        [](const std::string& name, int parameter) {
          UniversalCase c;
          if (name == "abs_2m") c = {UniversalTag::Abs2m, parameter};
          else if (name == "sgn_2m1") c = {UniversalTag::Sgn2m1, parameter};
          else if (name == "cos_pp") c = {UniversalTag::CosPP, parameter};
          else if (name == "sin_pp") c = {UniversalTag::SinPP, parameter};
          else throw DomainError("unknown case: " + name);
          return to_json_string(universal_pairing(c));
        },
        py::arg("case_name"), py::arg("parameter"));
  m.def("centroaffine_pairing",
        [](int p) { return to_json_string(centroaffine_pairing(p)); }, py::arg("p"));
  m.def("mu_c_vanishing", [](int mm) { return to_json_string(mu_c_vanishing(mm)); },
        py::arg("m"));
  m.def("q2_basis_certificate",
        [](int p, int k) { return to_json_string(q2_basis_certificate(p, k)); },
        py::arg("p"), py::arg("k"));
}
