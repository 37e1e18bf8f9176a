#pragma once

#include <map>
#include <string>
#include <vector>

#include "anosov/exact/matrix.hpp"
#include "anosov/exact/rational.hpp"

namespace anosov {

using Exponents = std::vector<int>;

/// Graded-lexicographic order, largest monomial first (x^2, x*y, y^2, x, y, 1).
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q in a fixed, named variable list.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t i);
  /// Default variable names: x, y, z, w for up to four, else z1..zn.
  static std::vector<std::string> default_names(std::size_t n);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree of the leading term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly derivative(std::size_t var) const;
  Rational evaluate(const RationalVector& at) const;
  /// f(M x): variable i is replaced by sum_j M(i,j) x_j.
  MultiPoly linear_substitute(const RationalMatrix& m) const;
  MultiPoly scaled(const Rational& s) const;
  MultiPoly with_variables(std::vector<std::string> vars) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(Rational(-1)); }
  /// Equality of term maps (variable names are not compared).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void check_compatible(const MultiPoly& o);
  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

/// Square matrix with polynomial entries.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant by Laplace expansion with memoized minors.
MultiPoly determinant(const PolyMatrix& m, const std::vector<std::string>& vars);

}  // namespace anosov
