#include "anosov/exact/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace anosov {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols,
                                            std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::companion(const UniPoly& p) {
  if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("companion needs a monic polynomial");
  auto n = static_cast<std::size_t>(p.degree());
  RationalMatrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = Rational(1);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(static_cast<int>(i));
  return m;
}

RationalMatrix RationalMatrix::block_diagonal(const std::vector<RationalMatrix>& blocks) {
  std::size_t nr = 0;
  std::size_t nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  RationalMatrix m(nr, nc);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  RationalMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool RationalMatrix::is_integer() const {
  for (const auto& v : a_)
    if (!v.is_integer()) return false;
  return true;
}

bool RationalMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
  RationalMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t p = lead_row;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(p, k), m(lead_row, k));
    Rational inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < cols_; ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(lead_row, k);
    }
    piv.push_back(c);
    ++lead_row;
  }
  if (pivots != nullptr) *pivots = std::move(piv);
  return m;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix m = *this;
  Rational det(1);
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Rational f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = Rational(1);
  }
  std::vector<std::size_t> piv;
  RationalMatrix red = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return red.block(0, n, n, n);
}

std::vector<RationalVector> RationalMatrix::kernel() const {
  std::vector<std::size_t> piv;
  RationalMatrix red = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols_);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> RationalMatrix::solve(const RationalVector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: right-hand side length mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  std::vector<std::size_t> piv;
  RationalMatrix red = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  RationalVector x(cols_);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, cols_);
  return x;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: vector length mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& v : a_) v *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  RationalMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
    }
  }
  return m;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < cols_; ++c) os << (c == 0 ? "" : ", ") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

RationalMatrix pow(const RationalMatrix& m, unsigned e) {
  RationalMatrix result = RationalMatrix::identity(m.rows());
  RationalMatrix b = m;
  while (e > 0) {
    if (e & 1U) result = result * b;
    b = b * b;
    e >>= 1U;
  }
  return result;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return m;
}

UniPoly charpoly(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(piv, k), h(col + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, piv), h(k, col + 1));
    }
    Rational inv = h(col + 1, col).inverse();
    for (std::size_t r = col + 2; r < n; ++r) {
      if (h(r, col).is_zero()) continue;
      Rational u = h(r, col) * inv;
      for (std::size_t k = 0; k < n; ++k) h(r, k) -= u * h(col + 1, k);
      for (std::size_t k = 0; k < n; ++k) h(k, col + 1) += u * h(k, r);
    }
  }
  // p_j = (x - h_jj) p_{j-1} - sum_i h_ij (prod_{l=i+1..j} h_{l,l-1}) p_{i-1}
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly::constant(Rational(1));
  const UniPoly x = UniPoly::x();
  for (std::size_t j = 1; j <= n; ++j) {
    UniPoly acc = (x - UniPoly::constant(h(j - 1, j - 1))) * p[j - 1];
    Rational t(1);
    for (std::size_t i = j - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (t.is_zero()) break;
      acc -= p[i - 1].scaled(t * h(i - 1, j - 1));
    }
    p[j] = std::move(acc);
  }
  return p[n];
}

RationalMatrix evaluate(const UniPoly& p, const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("evaluate: non-square matrix");
  RationalMatrix acc(m.rows(), m.cols());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

}  // namespace anosov
