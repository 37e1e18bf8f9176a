#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace anosov {

using BigInt = mpz_class;

std::string to_string(const BigInt& v);
BigInt parse_bigint(std::string_view text);

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Serialized as "p/q", or "p" when q == 1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}                    // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}                   // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(BigInt(std::to_string(v))) {}  // NOLINT
  Rational(const BigInt& v) : v_(v) {}          // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(::abs(v_)); }
  Rational inverse() const;

  /// Floor of the rational as an integer.
  BigInt floor() const;

  std::string str() const;
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);

}  // namespace anosov

template <>
struct std::hash<anosov::Rational> {
  std::size_t operator()(const anosov::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
