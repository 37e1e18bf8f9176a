#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anosov/lie/algebra.hpp"

namespace anosov {

/// Weight d_i per basis vector.
using Gradation = std::vector<int>;

/// Whenever c_ij^k != 0, d_i + d_j = d_k.
bool is_gradation(const LieAlgebra& l, const Gradation& d);
/// Weights from the central series layers (layer index + 1); throws if that is not a gradation.
Gradation default_gradation(const LieAlgebra& l);

LieAlgebra heisenberg(std::size_t dim);
LieAlgebra f3();
LieAlgebra g_algebra();
/// The algebra h of type (4,4), dual of h3+h3.
LieAlgebra h_algebra();
LieAlgebra l4();
LieAlgebra h3h5();
/// Rational forms; k must be square-free (n_k also accepts 0 and negatives).
LieAlgebra n_k(long k);
LieAlgebra h_k(long k);
LieAlgebra l_k(long k);
/// l_k brackets for any nonzero integer k (no square-free check).
LieAlgebra l_k_raw(const BigInt& k);

/// Parses "name", "name(param)" and "a+b+..." expressions, e.g. "n_k(2)+abelian(2)".
/// A bare parametrized family takes `k` from the second argument.
LieAlgebra catalog(const std::string& expr, std::optional<long> k = std::nullopt);

struct CatalogEntry {
  std::string name;
  std::string parameter_domain;
  std::string type;
  std::string expected_status;
};
std::vector<CatalogEntry> catalog_index();

}  // namespace anosov
