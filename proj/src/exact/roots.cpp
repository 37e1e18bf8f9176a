#include "anosov/exact/roots.hpp"

#include <vector>

namespace anosov {

namespace {

std::vector<UniPoly> signed_remainder_sequence(const UniPoly& f0, const UniPoly& f1) {
  std::vector<UniPoly> seq{f0, f1};
  while (!seq.back().is_zero()) {
    UniPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int variations(const std::vector<UniPoly>& seq, const std::optional<Rational>& at, bool plus_inf) {
  int count = 0;
  int last = 0;
  for (const auto& f : seq) {
    int s = at ? f.sign_at(*at) : f.sign_at_infinity(plus_inf);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sturm_real_root_count(const UniPoly& p, const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi) {
  if (p.is_zero()) throw std::invalid_argument("Sturm count of the zero polynomial");
  if (lo && hi && !(*lo < *hi)) return 0;
  UniPoly f = square_free_part(p);
  if (f.degree() < 1) return 0;
  auto seq = signed_remainder_sequence(f, f.derivative());
  // V(a) - V(b) counts roots in (a, b].
  int n = variations(seq, lo, false) - variations(seq, hi, true);
  if (hi && f.sign_at(*hi) == 0) --n;
  return n;
}

int sturm_closed_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (hi < lo) return 0;
  int n = sturm_real_root_count(p, lo, hi);
  if (p.sign_at(lo) == 0) ++n;
  if (hi != lo && p.sign_at(hi) == 0) ++n;
  return n;
}

int schur_cohn_inside_unit_disk(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("disk count of the zero polynomial");
  const int n = p.degree();
  if (n == 0) return 0;
  if (p.sign_at(Rational(1)) == 0 || p.sign_at(Rational(-1)) == 0)
    throw RootOnCircleError("polynomial vanishes at +1 or -1");
  // Cayley transform z = (w+1)/(w-1): |z| < 1 exactly when Re w < 0.
  const UniPoly wp{1, 1};
  const UniPoly wm{-1, 1};
  UniPoly q;
  for (int k = 0; k <= n; ++k) {
    const Rational& a = p.coeff(k);
    if (a.is_zero()) continue;
    q += (pow(wp, static_cast<unsigned>(k)) * pow(wm, static_cast<unsigned>(n - k))).scaled(a);
  }
  // q(w) = a_0 w^n + a_1 w^(n-1) + ...; split q(iy) into its two real parts.
  std::vector<Rational> c0(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> c1(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational a = q.coeff(n - j);
    int deg = n - j;
    Rational s = (j / 2) % 2 == 0 ? a : -a;
    if (j % 2 == 0) {
      c0[static_cast<std::size_t>(deg)] = s;
    } else {
      c1[static_cast<std::size_t>(deg)] = s;
    }
  }
  UniPoly p0(std::move(c0));
  UniPoly p1(std::move(c1));
  UniPoly g = gcd(p0, p1);
  if (g.degree() >= 1 && sturm_real_root_count(g, std::nullopt, std::nullopt) > 0)
    throw RootOnCircleError("polynomial has a root on the unit circle");
  int index = 0;
  if (!p1.is_zero()) {
    auto seq = signed_remainder_sequence(p0, p1);
    index = variations(seq, std::nullopt, false) - variations(seq, std::nullopt, true);
  }
  int right_half = (n - index) / 2;
  return n - right_half;
}

}  // namespace anosov
