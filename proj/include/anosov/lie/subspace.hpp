#pragma once

#include <vector>

#include "anosov/exact/matrix.hpp"

namespace anosov {

/// Subspace of Q^n stored as the nonzero rows of a reduced row-echelon
/// basis, so equal subspaces have identical storage.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<RationalVector>& vectors);
  static Subspace full(std::size_t ambient);
  /// span(e_first, ..., e_{first+count-1})
  static Subspace coordinate(std::size_t ambient, std::size_t first, std::size_t count);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& s) const;
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace anosov
