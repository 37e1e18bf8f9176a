#include "anosov/io/json.hpp"

#include <fstream>
#include <sstream>

namespace anosov {

namespace {

Rational parse_rational(const Json& v) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long long>(v.get<long long>()));
  } catch (const std::exception& e) {
    throw InputError(std::string("bad rational: ") + e.what());
  }
  throw InputError("expected a rational as \"p/q\" string or integer, got " + v.dump());
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

void check_schema(const Json& doc) {
  if (doc.contains("schema") && doc.at("schema") != kSchema)
    throw InputError("unsupported schema " + doc.at("schema").dump());
}

std::size_t index(const Json& v, std::size_t dim) {
  if (!v.is_number_integer()) throw InputError("basis index must be an integer");
  long long i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim) throw InputError("basis index " + std::to_string(i) + " out of range");
  return static_cast<std::size_t>(i - 1);
}

}  // namespace

Json to_json(const LieAlgebra& l) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "algebra";
  j["name"] = l.label();
  j["dim"] = l.dim();
  j["names"] = l.names();
  Json brackets = Json::array();
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = a + 1; b < l.dim(); ++b) {
      RationalVector v = l.bracket(a, b);
      Json terms = Json::array();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) terms.push_back(Json{{"k", k + 1}, {"coeff", v[k].str()}});
      if (!terms.empty()) brackets.push_back(Json{{"i", a + 1}, {"j", b + 1}, {"terms", terms}});
    }
  j["brackets"] = brackets;
  return j;
}

LieAlgebra algebra_from_json(const Json& doc) {
  check_schema(doc);
  if (doc.contains("kind") && doc.at("kind") != "algebra") throw InputError("document is not an algebra");
  const Json& names_j = field(doc, "names");
  if (!names_j.is_array()) throw InputError("'names' must be an array");
  std::vector<std::string> names;
  for (const auto& n : names_j) {
    if (!n.is_string()) throw InputError("basis names must be strings");
    names.push_back(n.get<std::string>());
  }
  if (doc.contains("dim") && (!doc.at("dim").is_number_integer() || doc.at("dim").get<std::size_t>() != names.size()))
    throw InputError("'dim' does not match the number of names");
  LieAlgebra l(names, doc.value("name", std::string()));
  const std::size_t n = names.size();
  for (const auto& br : field(doc, "brackets")) {
    std::size_t i = index(field(br, "i"), n);
    std::size_t j = index(field(br, "j"), n);
    if (i >= j) throw InputError("brackets must have i < j");
    for (const auto& t : field(br, "terms")) l.add_bracket(i, j, index(field(t, "k"), n), parse_rational(field(t, "coeff")));
  }
  if (auto bad = validate(l)) {
    throw InputError("Jacobi identity fails on (" + names[bad->i] + ", " + names[bad->j] + ", " + names[bad->k] + ")");
  }
  try {
    type_of(l);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return l;
}

Json to_json(const RationalMatrix& m) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "matrix";
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

RationalMatrix matrix_from_json(const Json& doc) {
  const Json* rows = &doc;
  if (doc.is_object()) {
    check_schema(doc);
    if (doc.contains("kind") && doc.at("kind") != "matrix") throw InputError("document is not a matrix");
    rows = &field(doc, "entries");
  }
  if (!rows->is_array() || rows->empty()) throw InputError("matrix entries must be a non-empty array of rows");
  std::vector<RationalVector> out;
  for (const auto& row : *rows) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    RationalVector v;
    for (const auto& e : row) v.push_back(parse_rational(e));
    if (!out.empty() && v.size() != out.front().size()) throw InputError("ragged matrix");
    out.push_back(std::move(v));
  }
  RationalMatrix m = RationalMatrix::from_rows(out);
  if (doc.is_object() && ((doc.contains("rows") && doc.at("rows") != m.rows()) ||
                          (doc.contains("cols") && doc.at("cols") != m.cols())))
    throw InputError("declared matrix shape does not match entries");
  return m;
}

Json to_json(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return Json{{"text", p.str()}, {"coefficients", coeffs}};
}

Json to_json(const HomogeneousForm& f) {
  Json j;
  j["variables"] = f.poly().variables();
  j["degree"] = f.degree();
  Json terms = Json::array();
  for (const auto& [e, c] : f.poly().terms()) terms.push_back(Json{{"exponents", e}, {"coefficient", c.str()}});
  j["terms"] = terms;
  j["text"] = f.str();
  return j;
}

Json to_json(const AnosovCertificate& c) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "certificate";
  j["algebra"] = c.algebra;
  j["verdict"] = to_string(c.verdict());
  j["failures"] = c.failures;
  j["is_automorphism"] = c.is_automorphism;
  j["unimodular"] = Json{{"ok", c.unimodular.ok},
                         {"integer_coefficients", c.unimodular.integer_coefficients},
                         {"constant_term", c.unimodular.constant_term.str()},
                         {"charpoly", to_json(c.unimodular.charpoly)}};
  j["hyperbolic"] = Json{{"ok", c.hyperbolic.ok},
                         {"value_at_1", c.hyperbolic.value_at_1.str()},
                         {"value_at_minus_1", c.hyperbolic.value_at_minus_1.str()},
                         {"reversal_gcd_degree", c.hyperbolic.reversal_gcd_degree},
                         {"chebyshev_factor", to_json(c.hyperbolic.chebyshev_factor)},
                         {"circle_roots", c.hyperbolic.circle_roots}};
  j["semisimple"] = c.semisimple;
  if (c.signature)
    j["signature"] = Json::array({c.signature->first, c.signature->second});
  else
    j["signature"] = nullptr;
  Json blocks = Json::array();
  for (const auto& b : c.blocks) {
    Json factors = Json::array();
    for (const auto& f : b.factors)
      factors.push_back(Json{{"poly", f.poly.str()}, {"multiplicity", f.multiplicity}, {"unit", f.unit}});
    blocks.push_back(Json{{"offset", b.offset},
                          {"size", b.size},
                          {"charpoly", b.charpoly.str()},
                          {"factors", factors},
                          {"all_units", b.all_units},
                          {"degrees_above_one", b.degrees_above_one}});
  }
  j["blocks"] = blocks;
  j["automorphism"] = to_json(c.automorphism)["entries"];
  return j;
}

Json to_json(const ObstructionReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "obstruction";
  j["criterion"] = r.criterion;
  j["verdict"] = to_string(r.verdict);
  j["detail"] = r.detail;
  j["k"] = r.k ? Json(r.k->get_str()) : Json(nullptr);
  j["abelian_factor"] = r.abelian_factor;
  if (r.pell_solution) j["pell_solution"] = Json{{"a", r.pell_solution->first.get_str()}, {"b", r.pell_solution->second.get_str()}};
  Json en = Json::array();
  for (const auto& e : r.enumerations) {
    Json sols = Json::array();
    for (const auto& s : e.solutions) sols.push_back(Json::array({s.x.get_str(), s.y.get_str()}));
    en.push_back(Json{{"k", e.k.get_str()}, {"value", e.value.get_str()}, {"bound", e.bound}, {"solutions", sols}});
  }
  j["enumerations"] = en;
  return j;
}

Json to_json(const GateResult& g) {
  return Json{{"schema", kSchema},         {"kind", "gate"},         {"admissible", g.admissible},
              {"clause", g.clause},        {"reason", g.reason},     {"dimension", g.dimension},
              {"min_dimension", g.min_dimension}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace anosov
