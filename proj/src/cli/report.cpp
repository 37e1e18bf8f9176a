#include "anosov/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include "anosov/construct/constructions.hpp"
#include "anosov/exact/numtheory.hpp"

namespace anosov {

namespace {

const long kParams[] = {2, 3, 5, 6, 7, 10};
const char* kTheoremTag = "expected by theorem, not mechanized";

std::string pf_text(const LieAlgebra& l) {
  if (!is_two_step(l)) return "";
  return pfaffian_form(l).str();
}

ReportRow base_row(const LieAlgebra& l, std::string name, std::string real, bool anosov) {
  ReportRow r;
  r.name = std::move(name);
  r.real_completion = std::move(real);
  r.dim = l.dim();
  r.type = type_string(type_of(l));
  r.pfaffian = pf_text(l);
  r.expected_anosov = anosov;
  return r;
}

ReportRow certified(const Construction& c, std::string name, std::string real,
                    std::optional<std::pair<int, int>> expected_sig, std::string note = "") {
  ReportRow r = base_row(c.algebra, std::move(name), std::move(real), true);
  r.method = RowMethod::Certificate;
  AnosovCertificate cert = verify_anosov(c.algebra, c.automorphism);
  r.verdict = to_string(cert.verdict());
  r.signature = cert.signature;
  r.expected_signature = expected_sig;
  r.agrees = cert.pass() && (!expected_sig || (cert.signature && *cert.signature == *expected_sig));
  r.note = note.empty() ? c.note : c.note + "; " + note;
  r.evidence = to_json(cert);
  return r;
}

ReportRow obstructed(const LieAlgebra& l, std::string name, std::string real, const ObstructionReport& rep,
                     std::string note = "") {
  ReportRow r = base_row(l, std::move(name), std::move(real), false);
  r.method = RowMethod::Obstruction;
  r.verdict = to_string(rep.verdict);
  r.agrees = rep.verdict == Verdict::Obstructed;
  r.note = note.empty() ? rep.detail : note + "; " + rep.detail;
  r.evidence = to_json(rep);
  return r;
}

ReportRow theorem_row(std::string name, std::string type, std::size_t dim, std::string note) {
  ReportRow r;
  r.name = std::move(name);
  r.type = std::move(type);
  r.dim = dim;
  r.method = RowMethod::Theorem;
  r.verdict = kTheoremTag;
  r.agrees = true;
  r.note = std::move(note);
  return r;
}

}  // namespace

bool ReportBundle::all_agree() const {
  for (const auto& r : rows)
    if (!r.agrees) return false;
  return true;
}

ReportBundle build_report() {
  ReportBundle out;
  const std::pair<int, int> s33{3, 3}, s44{4, 4};

  for (std::size_t n = 2; n <= 8; ++n)
    out.rows.push_back(certified(abelian_automorphism(n), "Q^" + std::to_string(n), "R^" + std::to_string(n), std::nullopt));

  for (long k : kParams)
    out.rows.push_back(certified(nk_automorphism(k), "n_" + std::to_string(k), "h3+h3", s33));
  {
    LieAlgebra n1 = n_k(1);
    out.rows.push_back(obstructed(n1, "n_1", "h3+h3", region_obstructions(n1)));
  }

  out.rows.push_back(certified(f3_automorphism(), "f3", "f3", s33));

  for (long k : kParams)
    out.rows.push_back(certified(with_abelian_plane(nk_automorphism(k)), "n_" + std::to_string(k) + "+Q^2",
                                 "h3+h3+R^2", s44));
  {
    LieAlgebra n1q = catalog("n_k(1)+abelian(2)");
    out.rows.push_back(obstructed(n1q, "n_1+Q^2", "h3+h3+R^2", region_obstructions(n1q),
                                  "abelian factor of dimension 2 reduced first"));
  }

  out.rows.push_back(certified(with_abelian_plane(f3_automorphism()), "f3+Q^2", "f3+R^2", s44));
  out.rows.push_back(certified(g_automorphism(), "g", "g", s44));

  {
    Construction h1 = h1_base_automorphism(2);
    HomogeneousForm f = pfaffian_form(h1.algebra);
    MultiPoly hess = hessian(f);
    Rational h = hess.constant_term();
    BigInt cls = square_free_class(h / Rational(4));
    std::string note = "Hessian " + h.str() + " = 4 * " + (h / Rational(4)).str() + ", square-free class " +
                       cls.get_str() + "; rational forms of h are the h_k with Hessian class k";
    ReportRow row = certified(h1, "h_1", "h", s44, note);
    row.agrees = row.agrees && cls == 1;
    out.rows.push_back(row);
  }
  for (long k : kParams) {
    auto [a, b] = pell_fundamental(BigInt(k));
    BigInt nmin = hk_minimal_n(k, a, b);
    BigInt nbal = hk_balanced_n(k, a, b);
    auto minimal = verify_anosov(h_k(k), hk_automorphism(k, a, b, nmin).automorphism);
    std::string note = "minimal n = " + nmin.get_str() + " also certifies, with signature {" +
                       std::to_string(minimal.signature->first) + "," + std::to_string(minimal.signature->second) + "}";
    out.rows.push_back(certified(hk_automorphism(k, a, b, nbal), "h_" + std::to_string(k), "h", s44, note));
  }

  for (long k : kParams) {
    LkOutcome o = lk_automorphism(k);
    out.rows.push_back(certified(*o.construction, "l_" + std::to_string(k), "l4+l4", s44));
  }
  {
    LkOutcome o = lk_automorphism(1);
    LieAlgebra l1 = l_k(1);
    ReportRow r = base_row(l1, "l_1", "l4+l4", false);
    r.method = RowMethod::Obstruction;
    r.verdict = o.anosov ? "PASS" : "OBSTRUCTED";
    r.agrees = !o.anosov;
    r.note = o.reason;
    r.evidence = Json{{"kind", "quotient-obstruction"}, {"reason", o.reason}};
    out.rows.push_back(r);
  }

  out.rows.push_back(theorem_row("h3h5", "(6,2)", 8, "Pfaffian x*y^2; non-Anosov by the case analysis of type (6,2)"));
  out.rows.push_back(theorem_row("type (5,2)", "(5,2)", 7, "no Anosov algebra of this type; case analysis"));
  out.rows.push_back(theorem_row("type (4,3)", "(4,3)", 7, "no Anosov algebra of this type; case analysis"));
  out.rows.push_back(theorem_row("type (5,3), no abelian factor", "(5,3)", 8, "only f3+Q^2 survives; case analysis"));
  {
    ReportRow r = theorem_row("type (3,3,2)", "(3,3,2)", 8, "");
    GateResult g = type_gate({3, 3, 2});
    r.note = std::string("type gate: ") + (g.admissible ? "admissible" : "rejected") + "; eliminated by case analysis";
    r.evidence = to_json(g);
    out.rows.push_back(r);
  }

  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    std::ostringstream key;
    key << std::setw(2) << std::setfill('0') << i + 1 << "-" << out.rows[i].name;
    out.rows[i].key = key.str();
  }
  return out;
}

namespace {

Json sig_json(const std::optional<std::pair<int, int>>& s) {
  if (!s) return nullptr;
  return Json::array({s->first, s->second});
}

std::string sig_text(const std::optional<std::pair<int, int>>& s) {
  if (!s) return "-";
  return "{" + std::to_string(s->first) + "," + std::to_string(s->second) + "}";
}

const char* method_name(RowMethod m) {
  switch (m) {
    case RowMethod::Certificate: return "certificate";
    case RowMethod::Obstruction: return "obstruction";
    case RowMethod::Theorem: return "theorem";
  }
  return "";
}

}  // namespace

Json to_json(const ReportBundle& r) {
  Json rows = Json::array();
  std::size_t pass = 0, obst = 0, cited = 0, disagree = 0;
  for (const auto& row : r.rows) {
    if (row.verdict == "PASS") ++pass;
    if (row.verdict == "OBSTRUCTED") ++obst;
    if (row.method == RowMethod::Theorem) ++cited;
    if (!row.agrees) ++disagree;
    rows.push_back(Json{{"key", row.key},
                        {"algebra", row.name},
                        {"real_completion", row.real_completion},
                        {"dim", row.dim},
                        {"type", row.type},
                        {"pfaffian", row.pfaffian},
                        {"expected", row.method == RowMethod::Theorem ? "not Anosov"
                                     : row.expected_anosov           ? "Anosov"
                                                                     : "not Anosov"},
                        {"method", method_name(row.method)},
                        {"verdict", row.verdict},
                        {"signature", sig_json(row.signature)},
                        {"expected_signature", sig_json(row.expected_signature)},
                        {"agrees", row.agrees},
                        {"note", row.note},
                        {"evidence", row.evidence}});
  }
  return Json{{"schema", kSchema},
              {"kind", "report"},
              {"rows", rows},
              {"summary", Json{{"rows", r.rows.size()},
                               {"pass", pass},
                               {"obstructed", obst},
                               {"theorem", cited},
                               {"disagreements", disagree}}}};
}

std::string render_table(const ReportBundle& r) {
  std::ostringstream os;
  os << std::left << std::setw(22) << "row" << std::setw(12) << "real" << std::setw(10) << "type" << std::setw(38)
     << "verdict" << std::setw(10) << "signature" << "agrees\n";
  for (const auto& row : r.rows)
    os << std::setw(22) << row.key << std::setw(12) << row.real_completion << std::setw(10) << row.type
       << std::setw(38) << row.verdict << std::setw(10) << sig_text(row.signature) << (row.agrees ? "yes" : "NO")
       << "\n";
  return os.str();
}

}  // namespace anosov
