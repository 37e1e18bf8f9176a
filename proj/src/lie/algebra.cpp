#include "anosov/lie/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace anosov {

LieAlgebra::LieAlgebra(std::vector<std::string> names, std::string label)
    : names_(std::move(names)), label_(std::move(label)) {
  const std::size_t n = names_.size();
  table_.assign(n * (n - (n > 0 ? 1 : 0)) / 2, RationalVector(n));
}

LieAlgebra LieAlgebra::abelian(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
  return LieAlgebra(std::move(names), "abelian(" + std::to_string(n) + ")");
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // i < j; row-major over the strict upper triangle.
  const std::size_t n = dim();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) {
  const std::size_t n = dim();
  if (i >= n || j >= n || k >= n) throw std::out_of_range("bracket index out of range");
  if (i == j) throw std::invalid_argument("bracket [e_i, e_i] is always zero");
  if (i < j) {
    table_[pair_index(i, j)][k] += coeff;
  } else {
    table_[pair_index(j, i)][k] -= coeff;
  }
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const RationalVector& value) {
  if (value.size() != dim()) throw std::invalid_argument("bracket value length mismatch");
  if (i == j) throw std::invalid_argument("bracket [e_i, e_i] is always zero");
  if (i < j) {
    table_[pair_index(i, j)] = value;
  } else {
    RationalVector neg = value;
    for (auto& x : neg) x = -x;
    table_[pair_index(j, i)] = std::move(neg);
  }
}

void LieAlgebra::add_bracket(const std::string& x, const std::string& y, const std::string& z,
                             const Rational& coeff) {
  add_bracket(index_of(x), index_of(y), index_of(z), coeff);
}

std::size_t LieAlgebra::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown basis vector " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

RationalVector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i == j) return RationalVector(dim());
  if (i < j) return table_[pair_index(i, j)];
  RationalVector v = table_[pair_index(j, i)];
  for (auto& x : v) x = -x;
  return v;
}

Rational LieAlgebra::c(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Rational(0);
  if (i < j) return table_[pair_index(i, j)][k];
  return -table_[pair_index(j, i)][k];
}

RationalVector LieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket argument length mismatch");
  RationalVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational w = x[i] * y[j] - x[j] * y[i];
      if (w.is_zero()) continue;
      const auto& t = table_[pair_index(i, j)];
      for (std::size_t k = 0; k < n; ++k)
        if (!t[k].is_zero()) out[k] += w * t[k];
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    for (const auto& x : v)
      if (!x.is_zero()) return false;
  return true;
}

bool LieAlgebra::has_integer_constants() const {
  for (const auto& v : table_)
    for (const auto& x : v)
      if (!x.is_integer()) return false;
  return true;
}

namespace {

RationalVector unit(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v[i] = Rational(1);
  return v;
}

bool all_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::string join_names(const LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k) {
  return l.names()[i] + ", " + l.names()[j] + ", " + l.names()[k];
}

}  // namespace

std::optional<JacobiViolation> validate(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalVector ij = l.bracket(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        RationalVector jac = l.bracket(ij, unit(n, k));
        RationalVector a = l.bracket(l.bracket(j, k), unit(n, i));
        RationalVector b = l.bracket(l.bracket(k, i), unit(n, j));
        for (std::size_t t = 0; t < n; ++t) jac[t] += a[t] + b[t];
        if (!all_zero(jac)) return JacobiViolation{i, j, k, jac};
      }
    }
  }
  return std::nullopt;
}

void require_valid(const LieAlgebra& l) {
  if (auto v = validate(l)) {
    std::string msg = "Jacobi identity fails for (" + join_names(l, v->i, v->j, v->k) + "): jacobiator";
    for (std::size_t t = 0; t < v->jacobiator.size(); ++t)
      if (!v->jacobiator[t].is_zero()) msg += " " + l.names()[t] + ":" + v->jacobiator[t].str();
    throw std::invalid_argument(msg);
  }
}

std::vector<Subspace> central_series(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Subspace> series{Subspace::full(n)};
  while (series.back().dim() > 0) {
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : series.back().basis()) gens.push_back(l.bracket(unit(n, i), v));
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == series.back().dim()) throw std::domain_error("Lie algebra is not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

TypeTuple type_of(const LieAlgebra& l) {
  auto series = central_series(l);
  TypeTuple t;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) t.push_back(series[i].dim() - series[i + 1].dim());
  return t;
}

std::string type_string(const TypeTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // x is central iff sum_i x_i c_ij^k = 0 for all j, k.
  RationalMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector b = l.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = b[k];
    }
  return Subspace::span(n, m.kernel());
}

Subspace derived(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(l.bracket(i, j));
  return Subspace::span(n, gens);
}

CharacteristicSubspaces characteristic_subspaces(const LieAlgebra& l) {
  Subspace z = center(l);
  Subspace d = derived(l);
  Subspace zd = z.intersect(d);
  return {z, d, zd, central_series(l)};
}

namespace {

std::size_t leading_index(const RationalVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

}  // namespace

AbelianFactor max_abelian_factor(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  auto cs = characteristic_subspaces(l);
  // a: greedy complement of z cap [n,n] inside z.
  Subspace acc = cs.center_cap_derived;
  std::vector<RationalVector> a_basis;
  for (const auto& v : cs.center.basis()) {
    if (acc.contains(v)) continue;
    a_basis.push_back(v);
    acc = acc + Subspace::span(n, {v});
  }
  // W: [n,n] extended by coordinate vectors to a complement of a.
  std::vector<RationalVector> w_basis = cs.derived.basis();
  Subspace span_w = cs.derived + Subspace::span(n, a_basis);
  for (std::size_t i = 0; i < n && span_w.dim() < n; ++i) {
    RationalVector e = unit(n, i);
    if (span_w.contains(e)) continue;
    w_basis.push_back(e);
    span_w = span_w + Subspace::span(n, {e});
  }
  std::stable_sort(w_basis.begin(), w_basis.end(), [](const RationalVector& x, const RationalVector& y) {
    return leading_index(x) < leading_index(y);
  });
  std::vector<RationalVector> cols = w_basis;
  cols.insert(cols.end(), a_basis.begin(), a_basis.end());
  RationalMatrix p = RationalMatrix::from_columns(cols, n);
  LieAlgebra moved = change_basis(l, p);
  const std::size_t nw = w_basis.size();
  std::vector<std::string> names;
  for (const auto& v : w_basis) names.push_back(l.names()[leading_index(v)]);
  LieAlgebra reduced(names, l.label().empty() ? "" : l.label() + "~");
  for (std::size_t i = 0; i < nw; ++i)
    for (std::size_t j = i + 1; j < nw; ++j) {
      RationalVector b = moved.bracket(i, j);
      b.resize(nw);
      reduced.set_bracket(i, j, b);
    }
  return {reduced, a_basis.size(), Subspace::span(n, a_basis), p};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names = a.names();
  for (const auto& nm : b.names()) {
    std::string candidate = nm;
    while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += "_2";
    names.push_back(candidate);
  }
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
  LieAlgebra s(names, label);
  const std::size_t na = a.dim();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k)
        if (!a.c(i, j, k).is_zero()) s.add_bracket(i, j, k, a.c(i, j, k));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        if (!b.c(i, j, k).is_zero()) s.add_bracket(na + i, na + j, na + k, b.c(i, j, k));
  return s;
}

LieAlgebra change_basis(const LieAlgebra& l, const RationalMatrix& p) {
  const std::size_t n = l.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("change_basis: matrix size mismatch");
  auto inv = p.inverse();
  if (!inv) throw std::invalid_argument("change_basis: singular matrix");
  LieAlgebra out(l.names(), l.label());
  std::vector<RationalVector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(p.column(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.set_bracket(i, j, inv->apply(l.bracket(cols[i], cols[j])));
  return out;
}

LieAlgebra permute(const LieAlgebra& l, const std::vector<std::size_t>& perm) {
  const std::size_t n = l.dim();
  if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
  std::vector<std::size_t> inv(n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv[perm[i]] = i;
    names[i] = l.names()[perm[i]];
  }
  LieAlgebra out(names, l.label());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalVector b = l.bracket(perm[i], perm[j]);
      RationalVector nb(n);
      for (std::size_t k = 0; k < n; ++k) nb[inv[k]] = b[k];
      out.set_bracket(i, j, nb);
    }
  return out;
}

LieAlgebra canonical_order(const LieAlgebra& l, std::vector<std::size_t>* perm) {
  const std::size_t n = l.dim();
  auto series = central_series(l);
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < series.size(); ++s)
      if (series[s].contains(unit(n, i))) depth[i] = s;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
  if (perm != nullptr) *perm = order;
  return permute(l, order);
}

TwoStepSplit two_step_split(const LieAlgebra& l) {
  auto series = central_series(l);
  if (series.size() != 3) throw std::invalid_argument("Lie algebra is not 2-step nilpotent");
  const std::size_t n = l.dim();
  const std::size_t n2 = series[1].dim();
  if (!(series[1] == Subspace::coordinate(n, n - n2, n2)))
    throw std::invalid_argument("derived algebra is not spanned by the last basis vectors");
  return {n - n2, n2};
}

bool is_two_step(const LieAlgebra& l) {
  try {
    two_step_split(l);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

RationalMatrix jz_matrix(const LieAlgebra& l, const RationalVector& z) {
  auto [n1, n2] = two_step_split(l);
  if (z.size() != n2) throw std::invalid_argument("jz_matrix: z must have one coordinate per derived basis vector");
  RationalMatrix j(n1, n1);
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n1; ++c) {
      if (r == c) continue;
      Rational acc(0);
      for (std::size_t k = 0; k < n2; ++k)
        if (!z[k].is_zero()) acc += l.c(c, r, n1 + k) * z[k];
      j(r, c) = acc;
    }
  return j;
}

bool preserves_bracket(const LieAlgebra& l1, const LieAlgebra& l2, const RationalMatrix& a) {
  if (a.rows() != l2.dim() || a.cols() != l1.dim())
    throw std::invalid_argument("map size does not match the algebras");
  const std::size_t n = l1.dim();
  std::vector<RationalVector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(a.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.apply(l1.bracket(i, j)) != l2.bracket(img[i], img[j])) return false;
  return true;
}

bool preserves_bracket_via_j(const LieAlgebra& l1, const LieAlgebra& l2, const RationalMatrix& a) {
  auto [n1, n2] = two_step_split(l1);
  auto [m1, m2] = two_step_split(l2);
  const std::size_t n = l1.dim();
  if (a.rows() != l2.dim() || a.cols() != n) throw std::invalid_argument("map size does not match the algebras");
  auto embed = [n](const RationalMatrix& j) {
    RationalMatrix e(n, n);
    for (std::size_t r = 0; r < j.rows(); ++r)
      for (std::size_t c = 0; c < j.cols(); ++c) e(r, c) = j(r, c);
    return e;
  };
  std::vector<RationalMatrix> j1;
  for (std::size_t k = 0; k < n2; ++k) {
    RationalVector z(n2);
    z[k] = Rational(1);
    j1.push_back(embed(jz_matrix(l1, z)));
  }
  RationalMatrix top = a.block(0, 0, m1, n);
  // Row b of A against the J-combination: [X,Y] has coordinate Y^T J_k X on Z_k.
  for (std::size_t b = 0; b < l2.dim(); ++b) {
    RationalMatrix lhs(n, n);
    for (std::size_t k = 0; k < n2; ++k)
      if (!a(b, n1 + k).is_zero()) lhs += j1[k] * a(b, n1 + k);
    RationalMatrix rhs(n, n);
    if (b >= m1) {
      RationalVector z(m2);
      z[b - m1] = Rational(1);
      rhs = top.transpose() * jz_matrix(l2, z) * top;
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool is_isomorphism(const LieAlgebra& l1, const LieAlgebra& l2, const RationalMatrix& a) {
  if (l1.dim() != l2.dim() || a.rows() != l1.dim() || a.cols() != l1.dim())
    throw std::invalid_argument("isomorphism check: dimension mismatch");
  if (a.determinant().is_zero()) throw std::invalid_argument("isomorphism check: singular map");
  return preserves_bracket(l1, l2, a);
}

}  // namespace anosov
