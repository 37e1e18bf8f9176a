#pragma once

#include <stdexcept>
#include <vector>

#include "anosov/exact/unipoly.hpp"

namespace anosov {

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Factor {
  UniPoly poly;  // primitive, positive leading coefficient, irreducible over Q
  int multiplicity = 1;
};

struct Factorization {
  Rational content;  // p = content * prod(poly^multiplicity)
  std::vector<Factor> factors;
};

/// Default 12; ANOSOV_MAX_FACTOR_DEGREE overrides.
int max_factor_degree();

/// Irreducible factorization over Z of an integer polynomial. Factors are
/// sorted by (degree, coefficients). Throws UnsupportedError above the degree bound.
Factorization factor_over_Z(const UniPoly& p);

/// Product content * prod(f^m), for reconstruction checks.
UniPoly expand(const Factorization& f);

}  // namespace anosov
