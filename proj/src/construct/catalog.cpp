#include "anosov/construct/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "anosov/exact/numtheory.hpp"

namespace anosov {

bool is_gradation(const LieAlgebra& l, const Gradation& d) {
  const std::size_t n = l.dim();
  if (d.size() != n) return false;
  for (int w : d)
    if (w <= 0) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!l.c(i, j, k).is_zero() && d[i] + d[j] != d[k]) return false;
  return true;
}

Gradation default_gradation(const LieAlgebra& l) {
  auto series = central_series(l);
  const std::size_t n = l.dim();
  Gradation d(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n);
    e[i] = Rational(1);
    for (std::size_t s = 0; s < series.size(); ++s)
      if (series[s].contains(e)) d[i] = static_cast<int>(s) + 1;
  }
  if (!is_gradation(l, d)) throw std::invalid_argument("central series layers do not grade this basis");
  return d;
}

namespace {

std::vector<std::string> xz_names(std::size_t nx, std::size_t nz) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nx; ++i) names.push_back("X" + std::to_string(i));
  for (std::size_t i = 1; i <= nz; ++i) names.push_back("Z" + std::to_string(i));
  return names;
}

void require_square_free(long k, bool allow_zero) {
  if (k == 0 && allow_zero) return;
  if (k == 0 || !is_square_free(BigInt(k)))
    throw std::invalid_argument("parameter k = " + std::to_string(k) + " must be square-free");
}

LieAlgebra finish(LieAlgebra l) {
  require_valid(l);
  type_of(l);
  return l;
}

}  // namespace

LieAlgebra heisenberg(std::size_t dim) {
  if (dim < 3 || dim % 2 == 0) throw std::invalid_argument("Heisenberg algebras have odd dimension >= 3");
  std::size_t m = (dim - 1) / 2;
  LieAlgebra l(xz_names(2 * m, 1), "h" + std::to_string(dim));
  for (std::size_t i = 0; i < m; ++i) l.add_bracket(2 * i, 2 * i + 1, 2 * m, Rational(1));
  return finish(l);
}

LieAlgebra f3() {
  LieAlgebra l(xz_names(3, 3), "f3");
  l.add_bracket("X1", "X2", "Z1");
  l.add_bracket("X1", "X3", "Z2");
  l.add_bracket("X2", "X3", "Z3");
  return finish(l);
}

LieAlgebra g_algebra() {
  LieAlgebra l(xz_names(6, 2), "g");
  l.add_bracket("X1", "X2", "Z1");
  l.add_bracket("X1", "X3", "Z2");
  l.add_bracket("X4", "X5", "Z1");
  l.add_bracket("X4", "X6", "Z2");
  return finish(l);
}

LieAlgebra h_algebra() {
  LieAlgebra l(xz_names(4, 4), "h");
  l.add_bracket("X1", "X3", "Z1");
  l.add_bracket("X1", "X4", "Z2");
  l.add_bracket("X2", "X3", "Z3");
  l.add_bracket("X2", "X4", "Z4");
  return finish(l);
}

LieAlgebra l4() {
  LieAlgebra l({"X1", "X2", "X3", "X4"}, "l4");
  l.add_bracket("X1", "X2", "X3");
  l.add_bracket("X1", "X3", "X4");
  return finish(l);
}

LieAlgebra h3h5() {
  LieAlgebra l(xz_names(6, 2), "h3h5");
  l.add_bracket("X1", "X2", "Z1");
  l.add_bracket("X3", "X4", "Z2");
  l.add_bracket("X5", "X6", "Z2");
  return finish(l);
}

LieAlgebra n_k(long k) {
  require_square_free(k, true);
  LieAlgebra l(xz_names(4, 2), "n_k(" + std::to_string(k) + ")");
  l.add_bracket("X1", "X3", "Z1");
  l.add_bracket("X1", "X4", "Z2");
  l.add_bracket("X2", "X3", "Z2", Rational(k));
  l.add_bracket("X2", "X4", "Z1");
  return finish(l);
}

LieAlgebra h_k(long k) {
  require_square_free(k, false);
  LieAlgebra l(xz_names(4, 4), "h_k(" + std::to_string(k) + ")");
  l.add_bracket("X1", "X2", "Z1");
  l.add_bracket("X1", "X3", "Z2");
  l.add_bracket("X1", "X4", "Z3", Rational(k));
  l.add_bracket("X2", "X3", "Z3", Rational(-1));
  l.add_bracket("X2", "X4", "Z2", Rational(-1));
  l.add_bracket("X3", "X4", "Z4");
  return finish(l);
}

LieAlgebra l_k_raw(const BigInt& k) {
  if (k == 0) throw std::invalid_argument("l_k needs k != 0");
  LieAlgebra l(xz_names(4, 4), "l_k(" + k.get_str() + ")");
  Rational kk(k);
  l.add_bracket("X1", "X3", "Z1");
  l.add_bracket("X1", "X4", "Z2");
  l.add_bracket("X1", "Z1", "Z3");
  l.add_bracket("X1", "Z2", "Z4");
  l.add_bracket("X2", "X3", "Z2");
  l.add_bracket("X2", "X4", "Z1", kk);
  l.add_bracket("X2", "Z2", "Z3", kk);
  l.add_bracket("X2", "Z1", "Z4");
  return finish(l);
}

LieAlgebra l_k(long k) {
  require_square_free(k, false);
  return l_k_raw(BigInt(k));
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  std::size_t b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad catalog parameter '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("bad catalog parameter '" + s + "'");
  return v;
}

LieAlgebra single(const std::string& term, std::optional<long> k) {
  std::string name = term;
  std::optional<long> param = k;
  auto open = term.find('(');
  if (open != std::string::npos) {
    if (term.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + term + "'");
    name = trim(term.substr(0, open));
    param = parse_long(trim(term.substr(open + 1, term.size() - open - 2)));
  }
  auto need = [&]() -> long {
    if (!param) throw std::invalid_argument("catalog entry '" + name + "' needs a parameter");
    return *param;
  };
  if (name == "f3") return f3();
  if (name == "g") return g_algebra();
  if (name == "h") return h_algebra();
  if (name == "l4") return l4();
  if (name == "h3h5") return h3h5();
  if (name == "n_k") return n_k(need());
  if (name == "h_k") return h_k(need());
  if (name == "l_k") return l_k(need());
  if (name == "abelian" || name == "Q") {
    long n = need();
    if (n < 1) throw std::invalid_argument("abelian(n) needs n >= 1");
    return LieAlgebra::abelian(static_cast<std::size_t>(n));
  }
  if (name == "heisenberg") return heisenberg(static_cast<std::size_t>(need()));
  if (name.size() >= 2 && name[0] == 'h' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return heisenberg(static_cast<std::size_t>(parse_long(name.substr(1))));
  throw std::invalid_argument("unknown catalog algebra '" + name + "'");
}

}  // namespace

LieAlgebra catalog(const std::string& expr, std::optional<long> k) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : expr) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  for (const auto& p : parts)
    if (p.empty()) throw std::invalid_argument("empty term in catalog expression '" + expr + "'");
  LieAlgebra acc = single(parts[0], k);
  if (parts.size() == 1) return acc;
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, single(parts[i], k));
  std::string label;
  for (std::size_t i = 0; i < parts.size(); ++i) label += (i ? "+" : "") + parts[i];
  acc.set_label(label);
  return canonical_order(acc);
}

std::vector<CatalogEntry> catalog_index() {
  return {
      {"abelian(n)", "n >= 1", "(n)", "Anosov iff n >= 2"},
      {"h3, h5, ... (heisenberg(2m+1))", "m >= 1", "(2m,1)", "not Anosov (type gate)"},
      {"f3", "", "(3,3)", "Anosov"},
      {"g", "", "(6,2)", "Anosov"},
      {"h", "", "(4,4)", "Anosov (real form; rational forms h_k)"},
      {"l4", "", "(2,1,1)", "not Anosov (type gate)"},
      {"h3h5", "", "(6,2)", "not Anosov (expected by theorem, not mechanized)"},
      {"n_k", "k square-free", "(4,2)", "Anosov iff k >= 2"},
      {"h_k", "k square-free, k != 0", "(4,4)", "Anosov iff k >= 1"},
      {"l_k", "k square-free, k != 0", "(4,2,2)", "Anosov iff k >= 2"},
  };
}

}  // namespace anosov
