#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anosov/construct/catalog.hpp"
#include "anosov/exact/quadfield.hpp"

namespace anosov {

/// An algebra together with a candidate Anosov automorphism (columns = images of basis vectors).
struct Construction {
  LieAlgebra algebra;
  RationalMatrix automorphism;
  std::string note;
};

/// L (x) Q[x]/(f), f = charpoly(B), with the automorphism acting by companion(f)^{d_i} on
/// the block of basis vector i. Basis ordered (i, t), t = 0..s-1.
/// Requires s >= 2, B in GL(s, Z) hyperbolic with real spectrum, d a gradation and
/// integer structure constants.
Construction graded_sum(const LieAlgebra& l, const Gradation& d, const RationalMatrix& b);

/// Dual of a 2-step algebra: the annihilator of span{J_Z} in Lambda^2 V*.
/// Throws unless L is 2-step and Z -> J_Z is injective.
LieAlgebra scheuneman_dual(const LieAlgebra& l);

using QuadVector = std::vector<QuadFieldElement>;

/// Structure constants of `real` in the basis given by `basis` (coordinates in Q(sqrt k)).
/// Throws if the basis is singular or some constant is irrational.
LieAlgebra rational_form_from_basis(const LieAlgebra& real, long k, const std::vector<QuadVector>& basis,
                                    const std::string& label = "");

struct SqrtFormWitness {
  LieAlgebra real;
  std::vector<QuadVector> basis;
  LieAlgebra rational_form;
  LieAlgebra target;  // catalog algebra the witness must reproduce
};
/// family in {"h3h3", "h", "l4l4"} (aliases "n_k", "h_k", "l_k"); targets n_k, h_k, l_k.
SqrtFormWitness sqrt_form_witness(const std::string& family, long k);

/// Two 4x4 blocks on h_k. Requires a^2 - k b^2 = 1 and n^2 > a + b sqrt(k).
Construction hk_automorphism(long k, const BigInt& a, const BigInt& b, const BigInt& n);
/// Fundamental Pell solution and the smallest admissible n.
Construction hk_automorphism(long k);
/// Smallest n >= 1 with n^2 > a + b sqrt(k).
BigInt hk_minimal_n(long k, const BigInt& a, const BigInt& b);
/// Smallest n with 2n - 1 > a + b sqrt(k); from there on the signature is {4,4}, below it {5,3}.
BigInt hk_balanced_n(long k, const BigInt& a, const BigInt& b);

/// The rational form of h spanned by the base basis for m = a^2 - 1, with diag(B, B^2, B^3, B).
Construction h1_base_automorphism(long a);

struct LkOutcome {
  bool anosov = false;
  std::optional<Construction> construction;
  std::string reason;
};
/// k >= 2: block-B construction moved to l_k by a diagonal rescaling. k = 1: not Anosov.
LkOutcome lk_automorphism(long k);

/// diag(A1, Lambda^2 A1) on f3 for A1 in GL(3, Z).
Construction f3_automorphism(const RationalMatrix& a1);
/// A1 = companion(x^3 - x - 1).
Construction f3_automorphism();

/// Multiplication by units of Z[sqrt k] on n_k, k >= 2.
Construction nk_automorphism(long k);
Construction g_automorphism();
/// [[2,1],[1,1]] blocks plus companion(x^3 - x - 1) when n is odd; n >= 2.
Construction abelian_automorphism(std::size_t n);
/// c (+) Q^2 in canonical order.
Construction with_abelian_plane(const Construction& c);

/// Lambda^2 of a 3x3 matrix on e1^e2, e1^e3, e2^e3.
RationalMatrix exterior_square(const RationalMatrix& a);

}  // namespace anosov
