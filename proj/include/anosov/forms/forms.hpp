#pragma once

#include <optional>
#include <string>

#include "anosov/exact/matrix.hpp"
#include "anosov/exact/multipoly.hpp"
#include "anosov/lie/algebra.hpp"

namespace anosov {

/// Homogeneous polynomial of fixed degree; the zero form keeps its nominal degree.
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  HomogeneousForm(MultiPoly poly, int degree);
  explicit HomogeneousForm(MultiPoly poly);

  const MultiPoly& poly() const { return poly_; }
  int degree() const { return degree_; }
  std::size_t nvars() const { return poly_.nvars(); }
  bool is_zero() const { return poly_.is_zero(); }
  std::string str() const { return poly_.str(); }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  MultiPoly poly_;
  int degree_ = 0;
};

/// Pfaffian normalized so that Pf([[0, I], [-I, 0]]) = 1. Odd size gives 0.
MultiPoly pfaffian(const PolyMatrix& m, const std::vector<std::string>& vars);
Rational pfaffian(const RationalMatrix& m);

/// f(Z) = Pf(J_Z) on V, in the derived-algebra coordinates.
HomogeneousForm pfaffian_form(const LieAlgebra& l);
/// J_Z with linear polynomial entries in the derived coordinates.
PolyMatrix symbolic_jz(const LieAlgebra& l, const std::vector<std::string>& vars);

MultiPoly hessian(const MultiPoly& f);
inline MultiPoly hessian(const HomogeneousForm& f) { return hessian(f.poly()); }

/// c * f(A x).
HomogeneousForm substitute_and_scale(const HomogeneousForm& f, const RationalMatrix& a, const Rational& c);

struct BinaryQuadraticClass {
  bool degenerate = false;  // zero form
  BigInt k;                 // f ~ x^2 - k y^2
  Rational discriminant;
};
BinaryQuadraticClass binary_quadratic_class(const HomogeneousForm& f);

struct CubicWitness {
  std::optional<RationalMatrix> b;  // f(v) = (x y^2)(B v)
  std::string diagnostic;
};
CubicWitness binary_cubic_xyy_test(const HomogeneousForm& f);

/// Builds a binary form from coefficients of x^d, x^(d-1) y, ..., y^d.
HomogeneousForm binary_form(const std::vector<Rational>& coeffs);

}  // namespace anosov
