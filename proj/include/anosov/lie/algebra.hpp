#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anosov/exact/matrix.hpp"
#include "anosov/lie/subspace.hpp"

namespace anosov {

/// Nilpotent Lie algebra over Q given by structure constants on a named
/// basis. Brackets are stored for i<j only; [e_j,e_i] = -[e_i,e_j].
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> names, std::string label = "");
  static LieAlgebra abelian(std::size_t n, const std::string& prefix = "A");

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Adds coeff * e_k to [e_i, e_j]; i == j is rejected.
  void add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff);
  void set_bracket(std::size_t i, std::size_t j, const RationalVector& value);
  /// Convenience for catalog literals: [names[i], names[j]] += coeff * names[k].
  void add_bracket(const std::string& x, const std::string& y, const std::string& z,
                   const Rational& coeff = Rational(1));

  RationalVector bracket(std::size_t i, std::size_t j) const;
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
  Rational c(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_abelian() const;
  bool has_integer_constants() const;
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_.size() == b.names_.size() && a.table_ == b.table_;
  }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::vector<std::string> names_;
  std::string label_;
  std::vector<RationalVector> table_;  // one entry per pair i<j
};

using TypeTuple = std::vector<std::size_t>;

struct JacobiViolation {
  std::size_t i, j, k;
  RationalVector jacobiator;
};

/// Returns the first basis triple violating the Jacobi identity, if any.
std::optional<JacobiViolation> validate(const LieAlgebra& l);
/// Throws std::invalid_argument describing the violation.
void require_valid(const LieAlgebra& l);

/// C^0 = L, C^i = [L, C^(i-1)], ending with the zero subspace.
std::vector<Subspace> central_series(const LieAlgebra& l);
/// Throws std::domain_error for non-nilpotent input.
TypeTuple type_of(const LieAlgebra& l);
std::string type_string(const TypeTuple& t);
Subspace center(const LieAlgebra& l);
Subspace derived(const LieAlgebra& l);

struct CharacteristicSubspaces {
  Subspace center;
  Subspace derived;
  Subspace center_cap_derived;
  std::vector<Subspace> series;
};
CharacteristicSubspaces characteristic_subspaces(const LieAlgebra& l);

struct AbelianFactor {
  LieAlgebra reduced;  // the algebra n~ without abelian factor
  std::size_t m = 0;
  Subspace complement;  // a, with z = (z cap [n,n]) + a
  /// Columns: basis of n~ then basis of a, in L's coordinates;
  /// change_basis(L, basis_change) == direct_sum(reduced, abelian(m)).
  RationalMatrix basis_change;
};
AbelianFactor max_abelian_factor(const LieAlgebra& l);

/// Raw concatenation; clashing names from b get a "_2" suffix.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
/// New basis f_j = column j of p. Throws on singular p.
LieAlgebra change_basis(const LieAlgebra& l, const RationalMatrix& p);
/// Reorders the basis by depth in the central series (stable). perm[new] = old.
LieAlgebra canonical_order(const LieAlgebra& l, std::vector<std::size_t>* perm = nullptr);
LieAlgebra permute(const LieAlgebra& l, const std::vector<std::size_t>& perm);

/// Restriction of a 2-step algebra's bracket: V = first n1 coordinates, derived = last n2.
struct TwoStepSplit {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};
/// Throws std::invalid_argument unless L is 2-step with the coordinate split.
TwoStepSplit two_step_split(const LieAlgebra& l);
bool is_two_step(const LieAlgebra& l);

/// J_Z on V, entries J(r,c) = sum_k c_{c r}^k z_k so that <J_Z X, Y> = <[X,Y], Z>.
RationalMatrix jz_matrix(const LieAlgebra& l, const RationalVector& z);

/// A[X,Y] = [AX,AY] on all basis pairs (A: l1 -> l2). No invertibility requirement.
bool preserves_bracket(const LieAlgebra& l1, const LieAlgebra& l2, const RationalMatrix& a);
/// The same predicate evaluated through J-maps; both algebras must be 2-step.
bool preserves_bracket_via_j(const LieAlgebra& l1, const LieAlgebra& l2, const RationalMatrix& a);
/// Bracket preservation plus invertibility; throws on singular or mis-sized A.
bool is_isomorphism(const LieAlgebra& l1, const LieAlgebra& l2, const RationalMatrix& a);

}  // namespace anosov
