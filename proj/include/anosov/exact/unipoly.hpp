#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anosov/exact/rational.hpp"

namespace anosov {

/// Dense univariate polynomial over Q, coefficients stored low-to-high.
/// The zero polynomial has an empty coefficient list and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;
  bool is_monic() const { return !is_zero() && leading() == Rational(1); }
  bool has_integer_coeffs() const;

  Rational operator()(const Rational& at) const;
  int sign_at(const Rational& at) const { return (*this)(at).sign(); }
  /// Sign of p(t) as t -> +inf (positive == true) or -inf.
  int sign_at_infinity(bool positive) const;

  UniPoly derivative() const;
  /// x^deg * p(1/x).
  UniPoly reversal() const;
  UniPoly monic() const;
  /// p(q(x)).
  UniPoly compose(const UniPoly& q) const;
  /// p(-x).
  UniPoly negate_variable() const;
  UniPoly scaled(const Rational& s) const;

  /// Positive integer polynomial proportional to p with coprime coefficients and positive
  /// leading coefficient. Returns the rational factor c with p = c * primitive.
  std::pair<Rational, UniPoly> primitive_part() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator-(const UniPoly& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Human-readable form in the variable `var`, highest degree first.
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0,0) == 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned e);
/// p / gcd(p, p'), made monic.
UniPoly square_free_part(const UniPoly& p);

/// Companion matrix coefficients helper: the monic polynomial x^n + c_{n-1}x^{n-1} + ...
UniPoly from_monic_tail(const std::vector<Rational>& tail);

}  // namespace anosov
