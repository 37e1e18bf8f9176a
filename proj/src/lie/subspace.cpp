#include "anosov/lie/subspace.hpp"

#include <stdexcept>

namespace anosov {

Subspace Subspace::span(std::size_t ambient, const std::vector<RationalVector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  for (const auto& v : vectors)
    if (v.size() != ambient) throw std::invalid_argument("subspace vector length mismatch");
  std::vector<std::size_t> piv;
  RationalMatrix red = RationalMatrix::from_rows(vectors).rref(&piv);
  for (std::size_t i = 0; i < piv.size(); ++i) s.basis_.push_back(red.row(i));
  s.pivots_ = std::move(piv);
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return coordinate(ambient, 0, ambient); }

Subspace Subspace::coordinate(std::size_t ambient, std::size_t first, std::size_t count) {
  std::vector<RationalVector> vs;
  for (std::size_t i = first; i < first + count; ++i) {
    RationalVector v(ambient);
    v[i] = Rational(1);
    vs.push_back(std::move(v));
  }
  return span(ambient, vs);
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace membership length mismatch");
  // Reduce against the echelon basis.
  RationalVector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c) r[c] -= f * basis_[i][c];
  }
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& s) const {
  for (const auto& v : s.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
  std::vector<RationalVector> vs = basis_;
  vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
  return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
  // Solve sum a_i u_i = sum b_j v_j.
  std::vector<RationalVector> cols = basis_;
  for (const auto& v : o.basis_) {
    RationalVector neg = v;
    for (auto& x : neg) x = -x;
    cols.push_back(std::move(neg));
  }
  RationalMatrix m = RationalMatrix::from_columns(cols, ambient_);
  std::vector<RationalVector> out;
  for (const auto& k : m.kernel()) {
    RationalVector w(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t c = 0; c < ambient_; ++c) w[c] += k[i] * basis_[i][c];
    out.push_back(std::move(w));
  }
  return span(ambient_, out);
}

}  // namespace anosov
