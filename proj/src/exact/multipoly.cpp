#include "anosov/exact/multipoly.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace anosov {

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t i) {
  MultiPoly p(std::move(vars));
  if (i >= p.nvars()) throw std::out_of_range("variable index out of range");
  Exponents e(p.nvars(), 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

std::vector<std::string> MultiPoly::default_names(std::size_t n) {
  static const char* kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(n <= 4 ? std::string(kShort[i]) : "z" + std::to_string(i + 1));
  return out;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::is_homogeneous() const {
  int d = degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

bool MultiPoly::is_constant() const { return degree() <= 0; }

Rational MultiPoly::constant_term() const { return coeff(Exponents(nvars(), 0)); }

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars()) throw std::invalid_argument("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    out.add_term(f, c * Rational(e[var]));
  }
  return out;
}

Rational MultiPoly::evaluate(const RationalVector& at) const {
  if (at.size() != nvars()) throw std::invalid_argument("evaluation point length mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= pow(at[i], static_cast<unsigned>(e[i]));
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::linear_substitute(const RationalMatrix& m) const {
  if (m.rows() != nvars() || m.cols() != nvars())
    throw std::invalid_argument("substitution matrix size mismatch");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < nvars(); ++i) {
    MultiPoly li(vars_);
    for (std::size_t j = 0; j < nvars(); ++j) {
      Exponents e(nvars(), 0);
      e[j] = 1;
      li.add_term(e, m(i, j));
    }
    images.push_back(std::move(li));
  }
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(vars_, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= pow(images[i], static_cast<unsigned>(e[i]));
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
  MultiPoly out(vars_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

MultiPoly MultiPoly::with_variables(std::vector<std::string> vars) const {
  if (vars.size() != nvars()) throw std::invalid_argument("variable rename changes arity");
  MultiPoly out = *this;
  out.vars_ = std::move(vars);
  return out;
}

void MultiPoly::check_compatible(const MultiPoly& o) {
  if (vars_.empty() && terms_.empty()) {
    vars_ = o.vars_;
    return;
  }
  if (o.nvars() != nvars() && !(o.vars_.empty() && o.terms_.empty()))
    throw std::invalid_argument("polynomials over different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_compatible(o);
  MultiPoly out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.abs();
    if (c.sign() < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
  MultiPoly result = MultiPoly::constant(p.variables(), Rational(1));
  MultiPoly b = p;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

MultiPoly determinant(const PolyMatrix& m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square polynomial matrix");
  if (n == 0) return MultiPoly::constant(vars, Rational(1));
  if (n > 20) throw std::invalid_argument("polynomial determinant too large");
  // minors[mask]: determinant of rows 0..popcount-1 against the columns in mask.
  std::unordered_map<unsigned, MultiPoly> minors;
  minors.emplace(0U, MultiPoly::constant(vars, Rational(1)));
  for (std::size_t r = 0; r < n; ++r) {
    std::unordered_map<unsigned, MultiPoly> next;
    for (const auto& [mask, val] : minors) {
      if (val.is_zero()) continue;
      int sign_pos = 0;
      for (std::size_t c = n; c-- > 0;) {
        if ((mask >> c) & 1U) {
          ++sign_pos;
          continue;
        }
        if (m[r][c].is_zero()) continue;
        // c is inserted after sign_pos larger used columns.
        MultiPoly t = val * m[r][c];
        if (sign_pos % 2 == 1) t = -t;
        auto key = mask | (1U << c);
        auto it = next.find(key);
        if (it == next.end()) {
          next.emplace(key, std::move(t));
        } else {
          it->second += t;
        }
      }
    }
    minors = std::move(next);
  }
  auto it = minors.find((1U << n) - 1);
  return it == minors.end() ? MultiPoly(vars) : it->second;
}

}  // namespace anosov
