#include "anosov/exact/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>

#include "anosov/exact/numtheory.hpp"

namespace anosov {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // low-to-high, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

ModPoly reduce(const UniPoly& f, u64 p) {
  ModPoly out;
  for (const auto& c : f.coeffs()) {
    BigInt r;
    BigInt num = c.num();
    mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), p);
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, u64 p) {
  u64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 q = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(q, b[i], p)) % p;
    trim(a);
  }
  return a;
}

ModPoly mod_div(ModPoly a, const ModPoly& b, u64 p) {
  u64 inv = invmod(b.back(), p);
  ModPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  return q;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return mod_rem(r, m, p);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly mod_pow(ModPoly base, u64 e, const ModPoly& m, u64 p) {
  ModPoly result{1};
  while (e > 0) {
    if (e & 1U) result = mod_mul(result, base, m, p);
    base = mod_mul(base, base, m, p);
    e >>= 1U;
  }
  return result;
}

// Degrees of irreducible factors of f mod p (distinct-degree factorization);
// empty when p is unsuitable (degree drop or repeated factors mod p).
std::vector<int> modular_degrees(const UniPoly& f, u64 p) {
  ModPoly g = reduce(f, p);
  if (static_cast<int>(g.size()) - 1 != f.degree()) return {};
  ModPoly dg;
  for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(mulmod(g[i], i % p, p));
  trim(dg);
  if (dg.empty() || mod_gcd(g, dg, p).size() != 1) return {};
  std::vector<int> degs;
  ModPoly h = mod_rem(ModPoly{0, 1}, g, p);
  int i = 0;
  while (static_cast<int>(g.size()) - 1 >= 2 * (i + 1)) {
    ++i;
    h = mod_pow(h, p, g, p);  // x^(p^i) mod g
    ModPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    trim(hx);
    ModPoly d = mod_gcd(g, hx, p);
    int dd = static_cast<int>(d.size()) - 1;
    if (dd > 0) {
      for (int j = 0; j < dd / i; ++j) degs.push_back(i);
      g = mod_div(g, d, p);
      h = mod_rem(h, g, p);
    }
  }
  if (g.size() > 1) degs.push_back(static_cast<int>(g.size()) - 1);
  return degs;
}

std::set<int> subset_sums(const std::vector<int>& degs) {
  std::set<int> sums{0};
  for (int d : degs) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

// Degrees a proper factor of f could have, from a handful of primes.
std::set<int> possible_factor_degrees(const UniPoly& f) {
  const int n = f.degree();
  std::set<int> allowed;
  for (int d = 1; d < n; ++d) allowed.insert(d);
  int used = 0;
  for (u64 p : {101ULL, 103ULL, 107ULL, 109ULL, 113ULL, 127ULL, 131ULL, 137ULL, 139ULL, 149ULL,
                151ULL, 157ULL, 163ULL, 167ULL, 173ULL}) {
    auto degs = modular_degrees(f, p);
    if (degs.empty()) continue;
    auto sums = subset_sums(degs);
    std::set<int> keep;
    for (int d : allowed)
      if (sums.count(d) != 0) keep.insert(d);
    allowed = std::move(keep);
    if (allowed.empty() || ++used == 6) break;
  }
  return allowed;
}

UniPoly lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UniPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly term = UniPoly::constant(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term *= UniPoly(std::vector<Rational>{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    out += term.scaled(ys[i] / denom);
  }
  return out;
}

// Normalizes to a primitive integer polynomial with positive leading coefficient.
UniPoly primitive(const UniPoly& f) { return f.primitive_part().second; }

// Finds a factor of degree d of the primitive square-free f, by Kronecker's method.
std::optional<UniPoly> kronecker_factor(const UniPoly& f, int d) {
  struct Point {
    Rational x;
    std::vector<BigInt> divs;
  };
  std::vector<Point> pts;
  for (long x = -20; x <= 20; ++x) {
    Rational v = f(Rational(x));
    if (v.is_zero()) continue;
    pts.push_back({Rational(x), divisors(v.num())});
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Point& a, const Point& b) { return a.divs.size() < b.divs.size(); });
  if (static_cast<int>(pts.size()) < d + 1) return std::nullopt;
  pts.resize(static_cast<std::size_t>(d) + 1);
  std::vector<Rational> xs;
  for (const auto& pt : pts) xs.push_back(pt.x);
  // Each point contributes +-divisor; the first is kept positive (sign normalization).
  std::vector<std::size_t> choice(pts.size(), 0);
  std::vector<std::size_t> limits;
  for (std::size_t i = 0; i < pts.size(); ++i)
    limits.push_back(pts[i].divs.size() * (i == 0 ? 1 : 2));
  const BigInt lc = f.leading().num();
  std::vector<Rational> ys(pts.size());
  while (true) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& divs = pts[i].divs;
      std::size_t c = choice[i];
      BigInt v = divs[c % divs.size()];
      if (c >= divs.size()) v = -v;
      ys[i] = Rational(v);
    }
    UniPoly g = lagrange(xs, ys);
    if (g.degree() == d && g.has_integer_coeffs() &&
        mpz_divisible_p(lc.get_mpz_t(), g.leading().num().get_mpz_t()) != 0) {
      auto dm = divmod(f, g);
      if (dm.remainder.is_zero()) return primitive(g);
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == limits[i]) {
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size()) break;
  }
  return std::nullopt;
}

void split_square_free(const UniPoly& f, std::vector<UniPoly>& out) {
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.push_back(f);
    return;
  }
  // Rational roots first: cheap and common.
  const BigInt lc = f.leading().num();
  const BigInt c0 = f.coeff(0).num();
  if (c0 == 0) {
    out.push_back(UniPoly{0, 1});
    split_square_free(divmod(f, UniPoly{0, 1}).quotient, out);
    return;
  }
  for (const auto& pn : divisors(c0)) {
    for (const auto& qd : divisors(lc)) {
      for (int s : {1, -1}) {
        Rational r(BigInt(s * pn), qd);
        if (f(r).is_zero()) {
          UniPoly lin = primitive(UniPoly(std::vector<Rational>{-r, Rational(1)}));
          out.push_back(lin);
          split_square_free(primitive(divmod(f, lin).quotient), out);
          return;
        }
      }
    }
  }
  if (f.degree() <= 3) {
    out.push_back(f);
    return;
  }
  for (int d : possible_factor_degrees(f)) {
    if (d < 2 || 2 * d > f.degree()) continue;
    if (auto g = kronecker_factor(f, d)) {
      split_square_free(*g, out);
      split_square_free(primitive(divmod(f, *g).quotient), out);
      return;
    }
  }
  out.push_back(f);
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

int max_factor_degree() {
  if (const char* env = std::getenv("ANOSOV_MAX_FACTOR_DEGREE")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 12;
}

Factorization factor_over_Z(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
  if (!p.has_integer_coeffs()) throw std::invalid_argument("factor_over_Z needs integer coefficients");
  if (p.degree() > max_factor_degree())
    throw UnsupportedError("degree " + std::to_string(p.degree()) + " exceeds factorization bound " +
                           std::to_string(max_factor_degree()));
  auto [content, prim] = p.primitive_part();
  Factorization result{content, {}};
  // Yun's square-free decomposition.
  UniPoly a = prim;
  UniPoly b = a.derivative();
  UniPoly c = gcd(a, b);
  int mult = 1;
  UniPoly w = divmod(a, c).quotient;
  while (w.degree() >= 1) {
    UniPoly y = gcd(w, c);
    UniPoly z = divmod(w, y).quotient;
    if (z.degree() >= 1) {
      std::vector<UniPoly> parts;
      split_square_free(primitive(z), parts);
      for (auto& f : parts) result.factors.push_back({primitive(f), mult});
    }
    w = y;
    c = divmod(c, y).quotient;
    ++mult;
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const Factor& x, const Factor& y) { return poly_less(x.poly, y.poly); });
  // Content absorbs the sign/scale left over from normalizing each factor.
  UniPoly prod = expand(Factorization{Rational(1), result.factors});
  result.content = p.leading() / prod.leading();
  return result;
}

UniPoly expand(const Factorization& f) {
  UniPoly out = UniPoly::constant(f.content);
  for (const auto& fac : f.factors) out *= pow(fac.poly, static_cast<unsigned>(fac.multiplicity));
  return out;
}

}  // namespace anosov
