// JSON in, JSON out: the Python side parses with the standard json module.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anosov/cli/report.hpp"
#include "anosov/construct/constructions.hpp"
#include "anosov/exact/numtheory.hpp"

namespace py = pybind11;
using namespace anosov;

namespace {

// A document starts with '{'; anything else is a catalog expression.
LieAlgebra load(const std::string& src) {
  if (!src.empty() && src.front() == '{') return algebra_from_json(Json::parse(src));
  return catalog(src);
}

std::string construction(const Construction& c) {
  AnosovCertificate cert = verify_anosov(c.algebra, c.automorphism);
  return Json{{"schema", kSchema},
              {"kind", "construction"},
              {"note", c.note},
              {"algebra", to_json(c.algebra)},
              {"automorphism", to_json(c.automorphism)},
              {"certificate", to_json(cert)}}
      .dump();
}

std::string construct(const std::string& family, long k, long n) {
  if (family == "hk") return construction(hk_automorphism(k));
  if (family == "h1") return construction(h1_base_automorphism(n));
  if (family == "nk") return construction(nk_automorphism(k));
  if (family == "f3") return construction(f3_automorphism());
  if (family == "g") return construction(g_automorphism());
  if (family == "abelian") return construction(abelian_automorphism(static_cast<std::size_t>(n)));
  if (family == "lk") {
    LkOutcome o = lk_automorphism(k);
    if (!o.construction) return Json{{"schema", kSchema}, {"kind", "not-anosov"}, {"reason", o.reason}}.dump();
    return construction(*o.construction);
  }
  throw py::value_error("unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact certification of Anosov automorphisms of rational nilpotent Lie algebras";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("catalog", [](const std::string& src) { return to_json(load(src)).dump(); }, py::arg("algebra"));
  m.def("type_of", [](const std::string& src) { return type_of(load(src)); }, py::arg("algebra"));
  m.def(
      "pfaffian",
      [](const std::string& src) {
        AbelianFactor ab = max_abelian_factor(load(src));
        return pfaffian_form(ab.reduced).str();
      },
      py::arg("algebra"));
  m.def(
      "verify",
      [](const std::string& src, const std::string& matrix) {
        LieAlgebra l = load(src);
        RationalMatrix a = matrix_from_json(Json::parse(matrix));
        if (!a.is_square() || a.rows() != l.dim()) throw InputError("matrix size does not match the algebra");
        return to_json(verify_anosov(l, a)).dump();
      },
      py::arg("algebra"), py::arg("matrix"));
  m.def("dual", [](const std::string& src) { return to_json(canonical_order(scheuneman_dual(load(src)))).dump(); },
        py::arg("algebra"));
  m.def("region", [](const std::string& src, long bound) { return to_json(region_obstructions(load(src), bound)).dump(); },
        py::arg("algebra"), py::arg("bound") = 10000);
  m.def(
      "pell",
      [](long k) {
        auto [a, b] = pell_fundamental(BigInt(k));
        return std::pair{a.get_str(), b.get_str()};
      },
      py::arg("k"));
  m.def("gate", [](const TypeTuple& t) { return to_json(type_gate(t)).dump(); }, py::arg("type"));
  m.def("construct", &construct, py::arg("family"), py::arg("k") = 2, py::arg("n") = 2);
  m.def("report", [] { return to_json(build_report()).dump(); });
  m.attr("SCHEMA") = kSchema;
}
