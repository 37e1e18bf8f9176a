#pragma once

#include <utility>
#include <vector>

#include "anosov/exact/rational.hpp"

namespace anosov {

/// n = q^2 * k with k square-free, sign(k) = sign(n); 0 maps to (0, 1).
/// Trial division up to 10^6; larger cofactors are resolved only when they
/// are provably prime, a prime square, or below 10^18. Otherwise throws.
std::pair<BigInt, BigInt> square_free_part(const BigInt& n);
/// Square-free class of a rational modulo squares: r = (p/q)^2 * k.
BigInt square_free_class(const Rational& r);
bool is_square_free(const BigInt& n);

/// Minimal positive (a, b) with a^2 - k b^2 = 1, via the continued fraction of sqrt(k).
std::pair<BigInt, BigInt> pell_fundamental(const BigInt& k);

/// Positive divisors of |n| (n != 0), ascending.
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace anosov
