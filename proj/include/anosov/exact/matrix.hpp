#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "anosov/exact/rational.hpp"
#include "anosov/exact/unipoly.hpp"

namespace anosov {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const RationalVector& d);
  /// Companion matrix of a monic polynomial: ones on the subdiagonal, -a_i in the last column.
  static RationalMatrix companion(const UniPoly& monic);
  /// Block-diagonal assembly.
  static RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalMatrix transpose() const;
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool is_integer() const;
  bool is_skew_symmetric() const;

  Rational determinant() const;
  std::size_t rank() const;
  std::optional<RationalMatrix> inverse() const;
  /// Reduced row echelon form; pivot columns returned through `pivots` when non-null.
  RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Basis of the right null space, one vector per free column, in canonical form.
  std::vector<RationalVector> kernel() const;
  /// Solves M x = b; nullopt when inconsistent. Free variables are set to zero.
  std::optional<RationalVector> solve(const RationalVector& b) const;

  RationalVector apply(const RationalVector& v) const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix pow(const RationalMatrix& m, unsigned e);
/// Kronecker product a ⊗ b.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// det(xI - M), monic of degree n.
UniPoly charpoly(const RationalMatrix& m);
/// p(M) for a square matrix.
RationalMatrix evaluate(const UniPoly& p, const RationalMatrix& m);

}  // namespace anosov
