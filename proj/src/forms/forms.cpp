#include "anosov/forms/forms.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "anosov/exact/numtheory.hpp"

namespace anosov {

HomogeneousForm::HomogeneousForm(MultiPoly poly, int degree) : poly_(std::move(poly)), degree_(degree) {
  for (const auto& [e, c] : poly_.terms())
    if (std::accumulate(e.begin(), e.end(), 0) != degree_)
      throw std::invalid_argument("form term " + poly_.str() + " is not of degree " + std::to_string(degree));
}

HomogeneousForm::HomogeneousForm(MultiPoly poly)
    : HomogeneousForm(poly, poly.is_zero() ? 0 : poly.degree()) {}

namespace {

template <class T, class Mul, class Zero>
T pfaffian_memo(std::size_t n, unsigned mask, std::unordered_map<unsigned, T>& memo,
                const std::function<const T&(std::size_t, std::size_t)>& entry, Mul mul, Zero zero) {
  if (mask == 0) return zero(true);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::size_t i = 0;
  while (((mask >> i) & 1U) == 0) ++i;
  T acc = zero(false);
  int pos = 0;
  for (std::size_t j = i + 1; j < n; ++j) {
    if (((mask >> j) & 1U) == 0) continue;
    ++pos;
    const T& a = entry(i, j);
    if (a == zero(false)) continue;
    T sub = pfaffian_memo<T>(n, mask & ~(1U << i) & ~(1U << j), memo, entry, mul, zero);
    T term = mul(a, sub);
    if (pos % 2 == 0) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  memo.emplace(mask, acc);
  return acc;
}

bool normalization_negative(std::size_t n) {
  std::size_t m = n / 2;
  return (m * (m - 1) / 2) % 2 == 1;
}

}  // namespace

MultiPoly pfaffian(const PolyMatrix& m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw std::invalid_argument("pfaffian of non-square matrix");
    for (std::size_t c = 0; c < n; ++c)
      if (!(m[r][c] == -m[c][r])) throw std::invalid_argument("pfaffian of non-skew matrix");
  }
  if (n % 2 == 1) return MultiPoly(vars);
  if (n > 30) throw std::invalid_argument("pfaffian size too large");
  std::unordered_map<unsigned, MultiPoly> memo;
  std::function<const MultiPoly&(std::size_t, std::size_t)> entry = [&](std::size_t r, std::size_t c) -> const MultiPoly& {
    return m[r][c];
  };
  MultiPoly zero(vars);
  MultiPoly one = MultiPoly::constant(vars, Rational(1));
  MultiPoly pf = pfaffian_memo<MultiPoly>(
      n, n == 0 ? 0U : (1U << n) - 1, memo, entry,
      [](const MultiPoly& a, const MultiPoly& b) { return a * b; },
      [&](bool unit) { return unit ? one : zero; });
  return normalization_negative(n) ? -pf : pf;
}

Rational pfaffian(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("pfaffian of non-square matrix");
  if (!m.is_skew_symmetric()) throw std::invalid_argument("pfaffian of non-skew matrix");
  const std::size_t n = m.rows();
  if (n % 2 == 1) return Rational(0);
  std::unordered_map<unsigned, Rational> memo;
  std::function<const Rational&(std::size_t, std::size_t)> entry = [&](std::size_t r, std::size_t c) -> const Rational& {
    return m(r, c);
  };
  Rational pf = pfaffian_memo<Rational>(
      n, n == 0 ? 0U : (1U << n) - 1, memo, entry, [](const Rational& a, const Rational& b) { return a * b; },
      [](bool unit) { return unit ? Rational(1) : Rational(0); });
  return normalization_negative(n) ? -pf : pf;
}

PolyMatrix symbolic_jz(const LieAlgebra& l, const std::vector<std::string>& vars) {
  auto [n1, n2] = two_step_split(l);
  if (vars.size() != n2) throw std::invalid_argument("one variable per derived basis vector required");
  PolyMatrix j(n1, std::vector<MultiPoly>(n1, MultiPoly(vars)));
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n1; ++c)
      for (std::size_t k = 0; k < n2; ++k) {
        Rational coeff = l.c(c, r, n1 + k);
        if (coeff.is_zero()) continue;
        Exponents e(n2, 0);
        e[k] = 1;
        j[r][c].add_term(e, coeff);
      }
  return j;
}

HomogeneousForm pfaffian_form(const LieAlgebra& l) {
  auto [n1, n2] = two_step_split(l);
  auto vars = MultiPoly::default_names(n2);
  int degree = static_cast<int>(n1 / 2);
  if (n1 % 2 == 1) return HomogeneousForm(MultiPoly(vars), degree);
  return HomogeneousForm(pfaffian(symbolic_jz(l, vars), vars), degree);
}

MultiPoly hessian(const MultiPoly& f) {
  const std::size_t k = f.nvars();
  PolyMatrix h(k, std::vector<MultiPoly>(k));
  for (std::size_t i = 0; i < k; ++i) {
    MultiPoly di = f.derivative(i);
    for (std::size_t j = 0; j < k; ++j) h[i][j] = di.derivative(j);
  }
  return determinant(h, f.variables());
}

HomogeneousForm substitute_and_scale(const HomogeneousForm& f, const RationalMatrix& a, const Rational& c) {
  if (a.rows() != f.nvars() || a.cols() != f.nvars())
    throw std::invalid_argument("substitution matrix size does not match variable count");
  if (a.determinant().is_zero()) throw std::invalid_argument("substitution matrix is singular");
  if (c.is_zero()) throw std::invalid_argument("scale factor must be nonzero");
  return HomogeneousForm(f.poly().linear_substitute(a).scaled(c), f.degree());
}

BinaryQuadraticClass binary_quadratic_class(const HomogeneousForm& f) {
  if (f.nvars() != 2 || (f.degree() != 2 && !f.is_zero()))
    throw std::invalid_argument("binary quadratic form expected");
  BinaryQuadraticClass out;
  if (f.is_zero()) {
    out.degenerate = true;
    return out;
  }
  Rational a = f.poly().coeff({2, 0});
  Rational b = f.poly().coeff({1, 1});
  Rational c = f.poly().coeff({0, 2});
  out.discriminant = b * b - Rational(4) * a * c;
  // x^2 - k y^2 has discriminant 4k; projective equivalence preserves it modulo squares.
  out.k = square_free_class(out.discriminant);
  return out;
}

HomogeneousForm binary_form(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("binary form needs coefficients");
  const int d = static_cast<int>(coeffs.size()) - 1;
  MultiPoly p(MultiPoly::default_names(2));
  for (int i = 0; i <= d; ++i) p.add_term({d - i, i}, coeffs[static_cast<std::size_t>(i)]);
  return HomogeneousForm(p, d);
}

CubicWitness binary_cubic_xyy_test(const HomogeneousForm& f) {
  if (f.nvars() != 2 || f.degree() != 3) throw std::invalid_argument("binary cubic form expected");
  const auto& p = f.poly();
  Rational q = p.coeff({3, 0});
  Rational r = p.coeff({2, 1});
  Rational s = p.coeff({1, 2});
  Rational t = p.coeff({0, 3});
  CubicWitness out;
  RationalMatrix b(2, 2);
  if (q.is_zero() && r.is_zero()) {
    if (s.is_zero()) {
      out.diagnostic = "f is a multiple of y^3";
      return out;
    }
    b = RationalMatrix::from_rows({{s, t}, {Rational(0), Rational(1)}});
  } else if (s.is_zero() && t.is_zero()) {
    // mirror of the case above: d = 0, f = x^2 (q x + r y)
    if (r.is_zero()) {
      out.diagnostic = "f is a multiple of x^3";
      return out;
    }
    b = RationalMatrix::from_rows({{q, r}, {Rational(1), Rational(0)}});
  } else {
    Rational num = Rational(9) * q * s * t + r * s * s - Rational(6) * r * r * t;
    Rational den = Rational(6) * q * s * s - r * r * s - Rational(9) * q * r * t;
    if (den.is_zero()) {
      // equals 2c^2 d (ad - bc)^3 on the orbit of xy^2, and c, d != 0 here
      out.diagnostic = "denominator 6qs^2 - r^2 s - 9qrt vanishes, so f is not in the orbit of xy^2";
      return out;
    }
    Rational u = num / den;
    if (u.is_zero()) {
      out.diagnostic = "d/c = 0, no witness";
      return out;
    }
    b = RationalMatrix::from_rows({{q, t / (u * u)}, {Rational(1), u}});
  }
  if (b.determinant().is_zero()) {
    out.diagnostic = "candidate B is singular";
    return out;
  }
  MultiPoly xyy(p.variables());
  xyy.add_term({1, 2}, Rational(1));
  if (!(xyy.linear_substitute(b) == p)) {
    out.diagnostic = "candidate B fails the exact check f = xy^2 o B";
    return out;
  }
  out.b = b;
  out.diagnostic = "ok";
  return out;
}

}  // namespace anosov
