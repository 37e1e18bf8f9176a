#include "anosov/exact/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace anosov {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

bool UniPoly::has_integer_coeffs() const {
  for (const auto& c : c_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

int UniPoly::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  int s = leading().sign();
  if (!positive && degree() % 2 == 1) s = -s;
  return s;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::reversal() const {
  std::vector<Rational> r(c_.rbegin(), c_.rend());
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::negate_variable() const {
  std::vector<Rational> v = c_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& c : v) c *= s;
  return UniPoly(std::move(v));
}

std::pair<Rational, UniPoly> UniPoly::primitive_part() const {
  if (is_zero()) return {Rational(0), {}};
  BigInt den_lcm = 1;
  for (const auto& c : c_) {
    BigInt d = c.den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  BigInt g = 0;
  std::vector<BigInt> ints;
  ints.reserve(c_.size());
  for (const auto& c : c_) {
    BigInt v = c.num() * (den_lcm / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) g = -g;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(BigInt(v / g));
  return {Rational(g, den_lcm), UniPoly(std::move(out))};
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

namespace {

std::string term_str(const Rational& c, int power, const std::string& var, bool first) {
  std::string out;
  Rational mag = c.abs();
  if (c.sign() < 0) {
    out += first ? "-" : " - ";
  } else if (!first) {
    out += " + ";
  }
  bool unit = mag == Rational(1);
  if (!unit || power == 0) out += mag.str();
  if (power > 0) {
    if (!unit) out += "*";
    out += var;
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out;
}

}  // namespace

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    out += term_str(c, i, var, first);
    first = false;
  }
  return out;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  Rational lead_inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
    std::size_t shift = static_cast<std::size_t>(i - b.degree());
    quo[shift] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= q * bc[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.monic();
}

UniPoly pow(const UniPoly& p, unsigned e) {
  UniPoly result = UniPoly::constant(Rational(1));
  UniPoly b = p;
  while (e > 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free part of zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(Rational(1));
  UniPoly g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

UniPoly from_monic_tail(const std::vector<Rational>& tail) {
  std::vector<Rational> c = tail;
  c.emplace_back(1);
  return UniPoly(std::move(c));
}

}  // namespace anosov
