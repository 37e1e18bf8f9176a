#include <stdexcept>

#include "anosov/construct/constructions.hpp"

namespace anosov {

namespace {

using QuadMatrix = std::vector<QuadVector>;  // row-major

QuadMatrix invert(QuadMatrix m, long k) {
  const std::size_t n = m.size();
  QuadMatrix inv(n, QuadVector(n, QuadFieldElement(k, Rational(0))));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = QuadFieldElement(k, Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::invalid_argument("witness basis is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    QuadFieldElement s = m[col][col].inverse();
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] *= s;
      inv[col][c] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      QuadFieldElement f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

LieAlgebra rational_form_from_basis(const LieAlgebra& real, long k, const std::vector<QuadVector>& basis,
                                    const std::string& label) {
  const std::size_t n = real.dim();
  if (basis.size() != n) throw std::invalid_argument("witness basis has the wrong size");
  const QuadFieldElement zero(k, Rational(0));
  QuadMatrix m(n, QuadVector(n, zero));
  for (std::size_t c = 0; c < n; ++c) {
    if (basis[c].size() != n) throw std::invalid_argument("witness vector has the wrong length");
    for (std::size_t r = 0; r < n; ++r) m[r][c] = basis[c][r];
  }
  QuadMatrix inv = invert(m, k);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(real.names()[i]);
  LieAlgebra out(names, label);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QuadVector br(n, zero);
      for (std::size_t a = 0; a < n; ++a) {
        if (basis[i][a].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (basis[j][b].is_zero() || a == b) continue;
          QuadFieldElement w = basis[i][a] * basis[j][b];
          RationalVector e = real.bracket(a, b);
          for (std::size_t t = 0; t < n; ++t)
            if (!e[t].is_zero()) br[t] += w * QuadFieldElement(k, e[t]);
        }
      }
      for (std::size_t r = 0; r < n; ++r) {
        QuadFieldElement coord = zero;
        for (std::size_t t = 0; t < n; ++t)
          if (!br[t].is_zero()) coord += inv[r][t] * br[t];
        if (coord.is_zero()) continue;
        if (!coord.is_rational())
          throw std::invalid_argument("structure constant " + coord.str() + " is not rational");
        out.add_bracket(i, j, r, coord.a());
      }
    }
  return out;
}

namespace {

LieAlgebra h3_plus_h3() {
  LieAlgebra l({"X1", "X2", "X3", "X4", "Z1", "Z2"}, "h3+h3");
  l.add_bracket("X1", "X2", "Z1");
  l.add_bracket("X3", "X4", "Z2");
  return l;
}

LieAlgebra l4_plus_l4() {
  LieAlgebra l({"X1", "X2", "X3", "X4", "Z1", "Z2", "Z3", "Z4"}, "l4+l4");
  l.add_bracket("X1", "X3", "Z1");
  l.add_bracket("X2", "X4", "Z2");
  l.add_bracket("X1", "Z1", "Z3");
  l.add_bracket("X2", "Z2", "Z4");
  return l;
}

// Sparse description: list of (coordinate, rational part, sqrt part).
struct Term {
  std::size_t coord;
  long a;
  long b;
};

QuadVector vec(std::size_t n, long k, std::initializer_list<Term> terms) {
  QuadVector v(n, QuadFieldElement(k, Rational(0)));
  for (const auto& t : terms) v[t.coord] += QuadFieldElement(k, Rational(t.a), Rational(t.b));
  return v;
}

}  // namespace

SqrtFormWitness sqrt_form_witness(const std::string& family, long k) {
  SqrtFormWitness w;
  if (family == "h3h3" || family == "n_k") {
    w.real = h3_plus_h3();
    w.target = n_k(k);
    const std::size_t n = 6;
    w.basis = {vec(n, k, {{0, 1, 0}, {2, 1, 0}}), vec(n, k, {{0, 0, 1}, {2, 0, -1}}),
               vec(n, k, {{1, 0, 1}, {3, 0, 1}}), vec(n, k, {{1, 1, 0}, {3, -1, 0}}),
               vec(n, k, {{4, 0, 1}, {5, 0, 1}}), vec(n, k, {{4, 1, 0}, {5, -1, 0}})};
  } else if (family == "h" || family == "h_k") {
    w.real = h_algebra();
    w.target = h_k(k);
    const std::size_t n = 8;
    w.basis = {vec(n, k, {{0, 0, 1}, {2, 0, -1}}), vec(n, k, {{0, 1, 0}, {2, 1, 0}}),
               vec(n, k, {{1, 1, 0}, {3, 1, 0}}),  vec(n, k, {{1, 0, 1}, {3, 0, -1}}),
               vec(n, k, {{4, 0, 2}}),             vec(n, k, {{5, 0, 1}, {6, 0, 1}}),
               vec(n, k, {{6, 1, 0}, {5, -1, 0}}), vec(n, k, {{7, 0, -2}})};
  } else if (family == "l4l4" || family == "l_k") {
    w.real = l4_plus_l4();
    w.target = l_k(k);
    const std::size_t n = 8;
    for (std::size_t p = 0; p < 4; ++p) {
      w.basis.push_back(vec(n, k, {{2 * p, 1, 0}, {2 * p + 1, 1, 0}}));
      w.basis.push_back(vec(n, k, {{2 * p, 0, 1}, {2 * p + 1, 0, -1}}));
    }
  } else {
    throw std::invalid_argument("no sqrt-k witness for family '" + family + "'");
  }
  w.rational_form = rational_form_from_basis(w.real, k, w.basis, w.target.label() + " via " + w.real.label());
  return w;
}

}  // namespace anosov
