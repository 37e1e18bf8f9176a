#pragma once

#include <optional>
#include <stdexcept>

#include "anosov/exact/unipoly.hpp"

namespace anosov {

/// Raised when a root of modulus exactly 1 makes a disk count undefined.
class RootOnCircleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Number of distinct real roots of p in the open interval (lo, hi);
/// nullopt endpoints stand for -inf / +inf.
int sturm_real_root_count(const UniPoly& p, const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi);
/// Distinct real roots in the closed interval [lo, hi].
int sturm_closed_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Roots of p (with multiplicity) of modulus < 1. Throws RootOnCircleError
/// when p has a root on the unit circle.
int schur_cohn_inside_unit_disk(const UniPoly& p);

}  // namespace anosov
