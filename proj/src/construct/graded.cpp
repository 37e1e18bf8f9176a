#include <stdexcept>

#include "anosov/anosov/certify.hpp"
#include "anosov/construct/constructions.hpp"
#include "anosov/exact/roots.hpp"

namespace anosov {

namespace {

std::string power_name(const std::string& base, std::size_t t) {
  if (t == 0) return base;
  if (t == 1) return base + ".x";
  return base + ".x^" + std::to_string(t);
}

}  // namespace

Construction graded_sum(const LieAlgebra& l, const Gradation& d, const RationalMatrix& b) {
  if (!b.is_square() || b.rows() < 2) throw std::invalid_argument("graded_sum needs a square B of size >= 2");
  if (!b.is_integer()) throw std::invalid_argument("graded_sum needs an integer matrix B");
  Rational det = b.determinant();
  if (det != Rational(1) && det != Rational(-1)) throw std::invalid_argument("B must have determinant +-1");
  UniPoly f = charpoly(b);
  UniPoly sf = square_free_part(f);
  if (sturm_real_root_count(sf, std::nullopt, std::nullopt) != sf.degree())
    throw std::invalid_argument("B must have real eigenvalues");
  if (!is_hyperbolic(b).ok) throw std::invalid_argument("B must be hyperbolic");
  if (!is_gradation(l, d)) throw std::invalid_argument("d is not a gradation of " + l.label());
  if (!l.has_integer_constants()) throw std::invalid_argument("graded_sum needs integer structure constants");

  const std::size_t s = b.rows();
  const std::size_t n = l.dim();
  std::vector<UniPoly> reduced;
  for (std::size_t e = 0; e + 1 < 2 * s; ++e) reduced.push_back(UniPoly::monomial(Rational(1), static_cast<int>(e)) % f);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < s; ++t) names.push_back(power_name(l.names()[i], t));
  LieAlgebra out(names, "graded_sum(" + l.label() + ", s=" + std::to_string(s) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational c = l.c(i, j, k);
        if (c.is_zero()) continue;
        for (std::size_t t = 0; t < s; ++t)
          for (std::size_t u = 0; u < s; ++u) {
            const UniPoly& p = reduced[t + u];
            for (std::size_t r = 0; r < s; ++r) {
              Rational coef = p.coeff(static_cast<int>(r));
              if (!coef.is_zero()) out.add_bracket(i * s + t, j * s + u, k * s + r, c * coef);
            }
          }
      }
  require_valid(out);

  RationalMatrix comp = RationalMatrix::companion(f);
  std::vector<RationalMatrix> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(pow(comp, static_cast<unsigned>(d[i])));
  return {out, RationalMatrix::block_diagonal(blocks),
          "companion(" + f.str() + ")^d_i on each block"};
}

LieAlgebra scheuneman_dual(const LieAlgebra& l) {
  TwoStepSplit sp = two_step_split(l);
  const std::size_t n1 = sp.n1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j) pairs.emplace_back(i, j);
  RationalMatrix c(sp.n2, pairs.size());
  for (std::size_t z = 0; z < sp.n2; ++z)
    for (std::size_t p = 0; p < pairs.size(); ++p) c(z, p) = -l.c(pairs[p].first, pairs[p].second, n1 + z);
  if (c.rank() != sp.n2) throw std::invalid_argument("Z -> J_Z is not injective");
  auto w = c.kernel();
  if (w.empty()) throw std::invalid_argument("the dual of " + l.label() + " is abelian");

  std::vector<std::string> names(l.names().begin(), l.names().begin() + static_cast<long>(n1));
  for (std::size_t z = 1; z <= w.size(); ++z) names.push_back("Z" + std::to_string(z));
  LieAlgebra out(names, "dual(" + l.label() + ")");
  for (std::size_t z = 0; z < w.size(); ++z)
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (!w[z][p].is_zero()) out.add_bracket(pairs[p].first, pairs[p].second, n1 + z, w[z][p]);
  return out;
}

}  // namespace anosov
