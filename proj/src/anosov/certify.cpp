#include "anosov/anosov/certify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "anosov/exact/numtheory.hpp"
#include "anosov/exact/roots.hpp"
#include "anosov/forms/forms.hpp"

namespace anosov {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Obstructed: return "OBSTRUCTED";
    case Verdict::Inapplicable: return "INAPPLICABLE";
    case Verdict::Deferred: return "DEFERRED";
  }
  return "?";
}

bool is_automorphism(const LieAlgebra& l, const RationalMatrix& a) {
  if (a.rows() != l.dim() || a.cols() != l.dim())
    throw std::invalid_argument("automorphism size " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " does not match algebra dimension " + std::to_string(l.dim()));
  return preserves_bracket(l, l, a) && !a.determinant().is_zero();
}

UnimodularEvidence is_unimodular(const RationalMatrix& a) {
  UnimodularEvidence ev;
  ev.charpoly = charpoly(a);
  ev.integer_coefficients = ev.charpoly.has_integer_coeffs();
  ev.constant_term = ev.charpoly.coeff(0);
  ev.ok = ev.integer_coefficients && ev.constant_term.abs() == Rational(1);
  return ev;
}

HyperbolicityEvidence hyperbolicity_of(const UniPoly& p) {
  HyperbolicityEvidence ev;
  ev.charpoly = p;
  ev.value_at_1 = p(Rational(1));
  ev.value_at_minus_1 = p(Rational(-1));
  if (ev.value_at_1.is_zero() || ev.value_at_minus_1.is_zero()) return ev;
  UniPoly g = gcd(p, p.reversal());
  ev.reversal_gcd_degree = g.degree();
  if (g.degree() < 1) {
    ev.ok = true;
    return ev;
  }
  // Roots of g are closed under inversion and avoid +-1, so its square-free
  // part h is palindromic of even degree 2m: h(x) = x^m q(x + 1/x).
  UniPoly h = square_free_part(g);
  const int deg = h.degree();
  if (deg % 2 != 0 || !(h.reversal() == h)) throw std::logic_error("self-reciprocal part is not palindromic");
  const int m = deg / 2;
  UniPoly t = UniPoly::x();
  UniPoly d_prev = UniPoly{2};
  UniPoly d_cur = t;
  UniPoly q = UniPoly::constant(h.coeff(m));
  for (int j = 1; j <= m; ++j) {
    q += d_cur.scaled(h.coeff(m + j));
    UniPoly next = t * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(next);
  }
  ev.chebyshev_factor = q;
  ev.circle_roots = sturm_closed_count(q, Rational(-2), Rational(2));
  ev.ok = ev.circle_roots == 0;
  return ev;
}

HyperbolicityEvidence is_hyperbolic(const RationalMatrix& a) { return hyperbolicity_of(charpoly(a)); }

bool is_semisimple(const RationalMatrix& a) { return evaluate(square_free_part(charpoly(a)), a).is_zero(); }

std::pair<int, int> signature(const RationalMatrix& a, const HyperbolicityEvidence& evidence) {
  if (!evidence.ok) throw std::invalid_argument("signature requires certified hyperbolicity");
  if (!(evidence.charpoly == charpoly(a))) throw std::invalid_argument("hyperbolicity evidence is for another matrix");
  int inside = schur_cohn_inside_unit_disk(evidence.charpoly);
  return {static_cast<int>(a.rows()) - inside, inside};
}

std::vector<BlockReport> eigenvalue_unit_report(const RationalMatrix& a, const std::vector<std::size_t>& blocks) {
  std::size_t total = 0;
  for (auto s : blocks) total += s;
  if (!a.is_square() || total != a.rows()) throw std::invalid_argument("block sizes do not add up to the matrix size");
  std::vector<std::size_t> owner(total);
  std::size_t off = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < blocks[b]; ++i) owner[off + i] = b;
    off += blocks[b];
  }
  // Trailing blocks span the flag C^i; invariance means no entry above the diagonal blocks.
  for (std::size_t r = 0; r < total; ++r)
    for (std::size_t c = 0; c < total; ++c)
      if (owner[r] < owner[c] && !a(r, c).is_zero())
        throw std::invalid_argument("block split is not an A-invariant flag");
  std::vector<BlockReport> out;
  off = 0;
  for (auto s : blocks) {
    BlockReport rep;
    rep.offset = off;
    rep.size = s;
    rep.charpoly = charpoly(a.block(off, off, s, s));
    rep.all_units = rep.charpoly.has_integer_coeffs();
    rep.degrees_above_one = rep.all_units;
    if (rep.charpoly.has_integer_coeffs()) {
      auto f = factor_over_Z(rep.charpoly);
      for (const auto& fac : f.factors) {
        FactorInfo info{fac.poly, fac.multiplicity,
                        fac.poly.leading() == Rational(1) && fac.poly.coeff(0).abs() == Rational(1)};
        rep.all_units = rep.all_units && info.unit;
        rep.degrees_above_one = rep.degrees_above_one && fac.poly.degree() > 1;
        rep.factors.push_back(std::move(info));
      }
    }
    out.push_back(std::move(rep));
    off += s;
  }
  return out;
}

std::optional<std::vector<std::size_t>> coordinate_layers(const LieAlgebra& l) {
  auto series = central_series(l);
  const std::size_t n = l.dim();
  std::vector<std::size_t> layers;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    std::size_t d = series[i + 1].dim();
    if (!(series[i + 1] == Subspace::coordinate(n, n - d, d))) return std::nullopt;
    layers.push_back(series[i].dim() - d);
  }
  return layers;
}

AnosovCertificate verify_anosov(const LieAlgebra& l, const RationalMatrix& a) {
  AnosovCertificate cert;
  cert.algebra = l.label();
  cert.automorphism = a;
  cert.is_automorphism = is_automorphism(l, a);
  cert.unimodular = is_unimodular(a);
  cert.hyperbolic = hyperbolicity_of(cert.unimodular.charpoly);
  cert.semisimple = is_semisimple(a);
  if (!cert.is_automorphism) cert.failures.emplace_back("automorphism");
  if (!cert.unimodular.ok) cert.failures.emplace_back("unimodular");
  if (!cert.hyperbolic.ok) cert.failures.emplace_back("hyperbolic");
  if (cert.hyperbolic.ok) cert.signature = signature(a, cert.hyperbolic);
  if (cert.is_automorphism && cert.unimodular.ok) {
    if (auto layers = coordinate_layers(l)) cert.blocks = eigenvalue_unit_report(a, *layers);
  }
  return cert;
}

GateResult type_gate(const TypeTuple& t) {
  GateResult g;
  for (auto x : t) g.dimension += x;
  const std::size_t r = t.size();
  if (r == 0) {
    g.reason = "empty type";
    return g;
  }
  if (r == 1) {
    g.min_dimension = 2;
    g.admissible = t[0] >= 2;
    g.clause = g.admissible ? "abelian" : "";
    g.reason = g.admissible ? "abelian of dimension >= 2" : "abelian of dimension 1 has no hyperbolic unimodular map";
    return g;
  }
  g.min_dimension = 2 * r + 2;
  auto tail_ok = [&](std::size_t from) {
    for (std::size_t i = from; i < r; ++i)
      if (t[i] < 2) return false;
    return true;
  };
  if (t[0] >= 4 && tail_ok(1)) {
    g.admissible = true;
    g.clause = "(i)";
    g.reason = "n1 >= 4 and n_i >= 2 for i >= 2";
  } else if (t[0] == 3 && t[1] == 3 && tail_ok(2)) {
    g.admissible = true;
    g.clause = "(ii)";
    g.reason = "n1 = n2 = 3 and n_i >= 2 for i >= 3";
  } else if (t[0] < 3) {
    g.reason = "n1 = " + std::to_string(t[0]) + " < 3";
  } else if (t[0] == 3) {
    g.reason = "n1 = 3 forces n2 = 3 and n_i >= 2 for i >= 3";
  } else {
    g.reason = "some n_i < 2 for i >= 2";
  }
  return g;
}

PellEnumeration enumerate_solutions(const BigInt& k, const BigInt& p, long bound) {
  PellEnumeration e{k, p, bound, {}};
  const BigInt b2 = BigInt(bound) * bound;
  for (long y = -bound; y <= bound; ++y) {
    BigInt rhs = p + k * y * y;
    if (rhs < 0 || rhs > b2) continue;
    if (mpz_perfect_square_p(rhs.get_mpz_t()) == 0) continue;
    BigInt x = sqrt(rhs);
    e.solutions.push_back({-x, BigInt(y)});
    if (x != 0) e.solutions.push_back({x, BigInt(y)});
  }
  std::sort(e.solutions.begin(), e.solutions.end(), [](const Solution& a, const Solution& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return e;
}

ObstructionReport region_obstructions(const LieAlgebra& l, long bound) {
  ObstructionReport rep;
  rep.criterion = "region";
  AbelianFactor af = max_abelian_factor(l);
  rep.abelian_factor = af.m;
  const LieAlgebra& core = af.m > 0 ? af.reduced : l;
  if (!is_two_step(core)) {
    rep.detail = "criterion needs a 2-step algebra with coordinate split";
    return rep;
  }
  HomogeneousForm f = pfaffian_form(core);
  if (f.is_zero() || f.nvars() != 2 || f.degree() != 2) {
    rep.detail = "Pfaffian form " + f.str() + " is not a nonzero binary quadratic";
    return rep;
  }
  auto cls = binary_quadratic_class(f);
  rep.k = cls.k;
  const BigInt k = cls.k;
  if (k == 0) {
    rep.detail = "degenerate binary quadratic form";
    return rep;
  }
  rep.enumerations.push_back(enumerate_solutions(k, 1, bound));
  if (k < 0) {
    rep.criterion = "region-unbounded";
    rep.verdict = Verdict::Obstructed;
    rep.detail = "f ~ x^2 - (" + k.get_str() + ") y^2 is definite, so every region R_c is bounded";
    return rep;
  }
  if (k == 1) {
    rep.criterion = "region-integer-solutions";
    // Further right-hand sides: values of |f| on the box |x|,|y| <= 8.
    std::set<BigInt> values;
    for (long x = -8; x <= 8; ++x)
      for (long y = -8; y <= 8; ++y) {
        Rational v = f.poly().evaluate({Rational(x), Rational(y)}).abs();
        if (!v.is_zero() && v.is_integer() && v != Rational(1)) values.insert(v.num());
      }
    for (const auto& v : values) rep.enumerations.push_back(enumerate_solutions(k, v, 200));
    rep.verdict = Verdict::Obstructed;
    rep.detail = "x^2 - y^2 = 1 factors as (x-y)(x+y) = 1, so its integer solution set is {(+-1,0)}: nonempty and finite";
    return rep;
  }
  rep.criterion = "region-integer-solutions";
  rep.pell_solution = pell_fundamental(k);
  rep.verdict = Verdict::Deferred;
  rep.detail = "k > 1: x^2 - k y^2 = 1 has infinitely many solutions generated by (" +
               rep.pell_solution->first.get_str() + ", " + rep.pell_solution->second.get_str() +
               "); criterion gives no obstruction";
  return rep;
}

AbfactorResult abfactor_reduce(const LieAlgebra& l) {
  AbelianFactor af = max_abelian_factor(l);
  AbfactorResult out{af.reduced, af.m, Verdict::Deferred, ""};
  if (af.m == 0) {
    out.detail = "no abelian factor; no reduction";
  } else if (af.m == 1) {
    out.verdict = Verdict::Obstructed;
    out.detail = "abelian factor of dimension 1 < 2";
  } else if (af.reduced.dim() == 0) {
    out.verdict = Verdict::Pass;
    out.detail = "abelian Q^" + std::to_string(af.m) + " with m >= 2";
  } else {
    out.detail = "Anosov iff the reduced algebra is Anosov (m = " + std::to_string(af.m) + " >= 2)";
  }
  return out;
}

}  // namespace anosov
