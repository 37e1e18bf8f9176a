#pragma once

#include <string>

#include "anosov/exact/rational.hpp"

namespace anosov {

/// a + b*sqrt(k) in Q(sqrt k). k = 1 is accepted and folds b into a, which
/// lets the sqrt-k witnesses treat the split case uniformly.
class QuadFieldElement {
 public:
  QuadFieldElement() = default;
  QuadFieldElement(long k, Rational a, Rational b = Rational(0));
  static QuadFieldElement sqrt(long k) { return {k, Rational(0), Rational(1)}; }

  long k() const { return k_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadFieldElement conjugate() const { return {k_, a_, -b_}; }
  Rational norm() const { return a_ * a_ - Rational(k_) * b_ * b_; }
  /// Exact sign of the real number a + b*sqrt(k); requires k > 0.
  int sign() const;
  QuadFieldElement inverse() const;

  QuadFieldElement& operator+=(const QuadFieldElement& o);
  QuadFieldElement& operator-=(const QuadFieldElement& o);
  QuadFieldElement& operator*=(const QuadFieldElement& o);
  QuadFieldElement& operator/=(const QuadFieldElement& o) { return *this *= o.inverse(); }
  friend QuadFieldElement operator+(QuadFieldElement x, const QuadFieldElement& y) { return x += y; }
  friend QuadFieldElement operator-(QuadFieldElement x, const QuadFieldElement& y) { return x -= y; }
  friend QuadFieldElement operator*(QuadFieldElement x, const QuadFieldElement& y) { return x *= y; }
  friend QuadFieldElement operator/(QuadFieldElement x, const QuadFieldElement& y) { return x /= y; }
  friend QuadFieldElement operator-(const QuadFieldElement& x) { return {x.k_, -x.a_, -x.b_}; }
  friend bool operator==(const QuadFieldElement& x, const QuadFieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.k_ == y.k_);
  }

  std::string str() const;

 private:
  void check(const QuadFieldElement& o) const;
  long k_ = 2;
  Rational a_;
  Rational b_;
};

}  // namespace anosov
