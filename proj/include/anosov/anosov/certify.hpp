#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anosov/exact/factor.hpp"
#include "anosov/exact/matrix.hpp"
#include "anosov/lie/algebra.hpp"

namespace anosov {

enum class Verdict { Pass, Fail, Obstructed, Inapplicable, Deferred };
std::string to_string(Verdict v);

struct UnimodularEvidence {
  UniPoly charpoly;
  bool integer_coefficients = false;
  Rational constant_term;
  bool ok = false;
};

struct HyperbolicityEvidence {
  UniPoly charpoly;
  Rational value_at_1;
  Rational value_at_minus_1;
  int reversal_gcd_degree = 0;
  /// q with h(x) = x^m q(x + 1/x), h the square-free self-reciprocal part.
  UniPoly chebyshev_factor;
  /// Real roots of the Chebyshev factor in [-2, 2].
  int circle_roots = 0;
  bool ok = false;
};

struct FactorInfo {
  UniPoly poly;
  int multiplicity = 1;
  bool unit = false;
};

struct BlockReport {
  std::size_t offset = 0;
  std::size_t size = 0;
  UniPoly charpoly;
  std::vector<FactorInfo> factors;
  bool all_units = false;
  bool degrees_above_one = false;
};

struct AnosovCertificate {
  std::string algebra;
  RationalMatrix automorphism;
  bool is_automorphism = false;
  UnimodularEvidence unimodular;
  HyperbolicityEvidence hyperbolic;
  bool semisimple = false;
  std::optional<std::pair<int, int>> signature;  // {expanding, contracting}
  std::vector<BlockReport> blocks;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  Verdict verdict() const { return pass() ? Verdict::Pass : Verdict::Fail; }
};

/// A[X_i,X_j] = [AX_i,AX_j] for all i<j; throws on dimension mismatch.
bool is_automorphism(const LieAlgebra& l, const RationalMatrix& a);
UnimodularEvidence is_unimodular(const RationalMatrix& a);
HyperbolicityEvidence is_hyperbolic(const RationalMatrix& a);
HyperbolicityEvidence hyperbolicity_of(const UniPoly& charpoly);
/// Minimal polynomial square-free, tested as sqfree(charpoly)(A) == 0.
bool is_semisimple(const RationalMatrix& a);
/// {p, q}: p eigenvalues of modulus > 1, q of modulus < 1. Throws unless evidence.ok.
std::pair<int, int> signature(const RationalMatrix& a, const HyperbolicityEvidence& evidence);

/// Factor tables of the diagonal blocks of A for the given consecutive block sizes.
/// Throws std::invalid_argument unless the flag of trailing blocks is A-invariant.
std::vector<BlockReport> eigenvalue_unit_report(const RationalMatrix& a, const std::vector<std::size_t>& blocks);

/// Layer sizes of the central series when its subspaces are coordinate subspaces.
std::optional<std::vector<std::size_t>> coordinate_layers(const LieAlgebra& l);

AnosovCertificate verify_anosov(const LieAlgebra& l, const RationalMatrix& a);

struct GateResult {
  bool admissible = false;
  std::string clause;  // "abelian", "(i)", "(ii)" or empty
  std::string reason;
  std::size_t dimension = 0;
  std::size_t min_dimension = 0;  // 2r + 2 for non-abelian admissible types
};
GateResult type_gate(const TypeTuple& t);

struct Solution {
  BigInt x, y;
};

struct PellEnumeration {
  BigInt k;
  BigInt value;  // right-hand side p in x^2 - k y^2 = p
  long bound = 0;
  std::vector<Solution> solutions;
};

struct ObstructionReport {
  std::string criterion;  // region-unbounded | region-integer-solutions | type-gate | abelian-factor
  Verdict verdict = Verdict::Inapplicable;
  std::string detail;
  std::optional<BigInt> k;
  std::size_t abelian_factor = 0;
  std::vector<PellEnumeration> enumerations;
  std::optional<std::pair<BigInt, BigInt>> pell_solution;
};

/// Integer solutions of x^2 - k y^2 = p with |x|, |y| <= bound.
PellEnumeration enumerate_solutions(const BigInt& k, const BigInt& p, long bound);
ObstructionReport region_obstructions(const LieAlgebra& l, long bound = 10000);

struct AbfactorResult {
  LieAlgebra reduced;
  std::size_t m = 0;
  Verdict verdict = Verdict::Deferred;
  std::string detail;
};
AbfactorResult abfactor_reduce(const LieAlgebra& l);

}  // namespace anosov
