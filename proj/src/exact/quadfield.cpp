#include "anosov/exact/quadfield.hpp"

#include <stdexcept>

#include "anosov/exact/numtheory.hpp"

namespace anosov {

QuadFieldElement::QuadFieldElement(long k, Rational a, Rational b)
    : k_(k), a_(std::move(a)), b_(std::move(b)) {
  if (k == 0) throw std::invalid_argument("Q(sqrt 0) is not a field");
  if (k != 1 && square_free_part(BigInt(k)).first != k)
    throw std::invalid_argument("quadratic field parameter must be square-free");
  if (k == 1) {
    a_ += b_;
    b_ = Rational(0);
  }
}

void QuadFieldElement::check(const QuadFieldElement& o) const {
  if (k_ != o.k_ && !b_.is_zero() && !o.b_.is_zero())
    throw std::invalid_argument("mixing elements of different quadratic fields");
}

int QuadFieldElement::sign() const {
  if (k_ < 0 && !b_.is_zero()) throw std::domain_error("sign of a non-real quadratic number");
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b*sqrt(k) have opposite signs: compare a^2 with k*b^2.
  Rational d = a_ * a_ - Rational(k_) * b_ * b_;
  return d.sign() * sa;
}

QuadFieldElement QuadFieldElement::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw std::domain_error("inverse of zero in quadratic field");
  return {k_, a_ / n, -b_ / n};
}

QuadFieldElement& QuadFieldElement::operator+=(const QuadFieldElement& o) {
  check(o);
  if (b_.is_zero()) k_ = o.k_;
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadFieldElement& QuadFieldElement::operator-=(const QuadFieldElement& o) {
  check(o);
  if (b_.is_zero()) k_ = o.k_;
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadFieldElement& QuadFieldElement::operator*=(const QuadFieldElement& o) {
  check(o);
  if (b_.is_zero()) k_ = o.k_;
  Rational na = a_ * o.a_ + Rational(k_) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::string QuadFieldElement::str() const {
  std::string root = "sqrt(" + std::to_string(k_) + ")";
  if (b_.is_zero()) return a_.str();
  std::string bpart;
  if (b_ == Rational(1)) {
    bpart = root;
  } else if (b_ == Rational(-1)) {
    bpart = "-" + root;
  } else {
    bpart = b_.str() + "*" + root;
  }
  if (a_.is_zero()) return bpart;
  if (bpart[0] == '-') return a_.str() + " - " + bpart.substr(1);
  return a_.str() + " + " + bpart;
}

}  // namespace anosov
