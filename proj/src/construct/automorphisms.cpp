#include <stdexcept>

#include "anosov/anosov/certify.hpp"
#include "anosov/construct/constructions.hpp"
#include "anosov/exact/numtheory.hpp"

namespace anosov {

namespace {

RationalMatrix from_big(const std::vector<std::vector<BigInt>>& rows) {
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Rational(rows[r][c]);
  return m;
}

RationalMatrix golden() { return RationalMatrix{{2, 1}, {1, 1}}; }

RationalMatrix cubic_companion() { return RationalMatrix::companion(UniPoly{-1, -1, 0, 1}); }

// Rejects candidates that fail bracket preservation so callers never hand out a wrong map.
Construction checked(Construction c) {
  if (!is_automorphism(c.algebra, c.automorphism))
    throw std::logic_error("construction for " + c.algebra.label() + " is not an automorphism");
  return c;
}

}  // namespace

Construction hk_automorphism(long k, const BigInt& a, const BigInt& b, const BigInt& n) {
  if (k < 2) throw std::invalid_argument("hk_automorphism needs square-free k >= 2");
  BigInt kk(k);
  if (a * a - kk * b * b != 1) throw std::invalid_argument("(a, b) does not solve a^2 - k b^2 = 1");
  if (QuadFieldElement(k, Rational(BigInt(n * n - a)), Rational(BigInt(-b))).sign() <= 0)
    throw std::invalid_argument("n^2 must exceed a + b sqrt(k)");
  RationalMatrix a1 = from_big({{0, 0, b, -a}, {0, 0, -a, kk * b}, {0, 1, 2 * n, 0}, {1, 0, 0, 2 * n}});
  RationalMatrix a2 = from_big({{0, 0, 0, -1},
                                {0, -a, b, 4 * n * a},
                                {0, -b * kk, a, 4 * n * b * kk},
                                {-1, -2 * n, 0, 4 * n * n}});
  return checked({h_k(k), RationalMatrix::block_diagonal({a1, a2}),
                  "Pell (" + a.get_str() + ", " + b.get_str() + "), n = " + n.get_str()});
}

BigInt hk_minimal_n(long k, const BigInt& a, const BigInt& b) {
  BigInt n = 1;
  while (QuadFieldElement(k, Rational(BigInt(n * n - a)), Rational(BigInt(-b))).sign() <= 0) ++n;
  return n;
}

BigInt hk_balanced_n(long k, const BigInt& a, const BigInt& b) {
  BigInt n = hk_minimal_n(k, a, b);
  while (QuadFieldElement(k, Rational(BigInt(2 * n - 1 - a)), Rational(BigInt(-b))).sign() <= 0) ++n;
  return n;
}

Construction hk_automorphism(long k) {
  if (k < 2) throw std::invalid_argument("hk_automorphism needs square-free k >= 2");
  auto [a, b] = pell_fundamental(BigInt(k));
  return hk_automorphism(k, a, b, hk_minimal_n(k, a, b));
}

Construction h1_base_automorphism(long a) {
  if (a <= 1) throw std::invalid_argument("h1_base_automorphism needs a >= 2");
  Rational m(BigInt(BigInt(a) * a - 1));
  LieAlgebra l({"X1", "X2", "X3", "X4", "Z1", "Z2", "Z3", "Z4"}, "h(a=" + std::to_string(a) + ")");
  l.add_bracket("X1", "X3", "Z1");
  l.add_bracket("X1", "X3", "Z3");
  l.add_bracket("X1", "X4", "Z2");
  l.add_bracket("X1", "X4", "Z4");
  l.add_bracket("X2", "X3", "Z2");
  l.add_bracket("X2", "X3", "Z4", Rational(-1));
  l.add_bracket("X2", "X4", "Z1", m);
  l.add_bracket("X2", "X4", "Z3", -m);
  require_valid(l);
  RationalMatrix b(2, 2);
  b(0, 0) = Rational(a);
  b(0, 1) = m;
  b(1, 0) = Rational(1);
  b(1, 1) = Rational(a);
  return checked({l, RationalMatrix::block_diagonal({b, pow(b, 2), pow(b, 3), b}), "diag(B, B^2, B^3, B)"});
}

namespace {

// L / (last layer of the central series), for algebras in canonical order.
LieAlgebra drop_last_layer(const LieAlgebra& l) {
  auto layers = coordinate_layers(l);
  if (!layers || layers->size() < 2) throw std::invalid_argument("need a coordinate central series");
  std::size_t keep = l.dim() - layers->back();
  std::vector<std::string> names(l.names().begin(), l.names().begin() + static_cast<long>(keep));
  LieAlgebra q(names, l.label() + "/C");
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = i + 1; j < keep; ++j)
      for (std::size_t k = 0; k < keep; ++k)
        if (!l.c(i, j, k).is_zero()) q.add_bracket(i, j, k, l.c(i, j, k));
  return q;
}

}  // namespace

LkOutcome lk_automorphism(long k) {
  if (k < 1 || !is_square_free(BigInt(k))) throw std::invalid_argument("lk_automorphism needs square-free k >= 1");
  LkOutcome out;
  if (k == 1) {
    LieAlgebra quotient = drop_last_layer(l_k(1));
    ObstructionReport rep = region_obstructions(quotient);
    out.anosov = false;
    out.reason = "l_1 maps onto the characteristic quotient l_1/C^2(l_1) of type (4,2); there " + rep.criterion +
                 " gives " + to_string(rep.verdict) + " (" + rep.detail + "), and an Anosov automorphism of l_1 "
                 "would induce one on the quotient";
    return out;
  }
  auto [a, q] = pell_fundamental(BigInt(k));
  BigInt b = a * a - 1;
  LieAlgebra raw = l_k_raw(b);
  RationalMatrix bm = from_big({{a, b}, {1, a}});
  RationalMatrix ab = RationalMatrix::block_diagonal({bm, bm, pow(bm, 2), pow(bm, 3)});
  LieAlgebra target = l_k(k);
  RationalVector dq;
  for (int i = 0; i < 4; ++i) {
    dq.emplace_back(1);
    dq.emplace_back(q);
  }
  RationalMatrix d = RationalMatrix::diagonal(dq);
  RationalMatrix dinv = *d.inverse();
  for (const RationalMatrix* p : {&d, &dinv}) {
    if (!(change_basis(raw, *p) == target)) continue;
    RationalMatrix pinv = *p->inverse();
    out.anosov = true;
    out.construction = checked({target, pinv * ab * *p,
                                "Pell (" + a.get_str() + ", " + q.get_str() + "), diag(B, B, B^2, B^3) on l_" +
                                    b.get_str() + " rescaled by diag(1, q, ...)"});
    out.reason = "explicit automorphism";
    return out;
  }
  throw std::logic_error("diagonal rescaling does not identify l_(a^2-1) with l_k");
}

RationalMatrix exterior_square(const RationalMatrix& a) {
  if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("exterior_square expects a 3x3 matrix");
  const std::size_t pr[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  RationalMatrix out(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      auto [i, j] = pr[r];
      auto [k, l] = pr[c];
      out(r, c) = a(i, k) * a(j, l) - a(i, l) * a(j, k);
    }
  return out;
}

Construction f3_automorphism(const RationalMatrix& a1) {
  if (!a1.is_integer() || a1.rows() != 3 || a1.cols() != 3 || a1.determinant().abs() != Rational(1))
    throw std::invalid_argument("f3_automorphism needs A1 in GL(3, Z)");
  return checked({f3(), RationalMatrix::block_diagonal({a1, exterior_square(a1)}), "diag(A1, Lambda^2 A1)"});
}

Construction f3_automorphism() { return f3_automorphism(cubic_companion()); }

Construction nk_automorphism(long k) {
  if (k < 2 || !is_square_free(BigInt(k))) throw std::invalid_argument("nk_automorphism needs square-free k >= 2");
  auto [a, b] = pell_fundamental(BigInt(k));
  BigInt kk(k);
  BigInt c = a * a + kk * b * b;
  BigInt d = 2 * a * b;
  RationalMatrix m = RationalMatrix::block_diagonal(
      {from_big({{a, kk * b}, {b, a}}), from_big({{a, b}, {kk * b, a}}), from_big({{c, d}, {kk * d, c}})});
  return checked({n_k(k), m, "multiplication by " + a.get_str() + " + " + b.get_str() + " sqrt(" +
                                 std::to_string(k) + ")"});
}

Construction g_automorphism() {
  RationalMatrix s = golden();
  RationalMatrix t = pow(s, 2);
  RationalMatrix kron = kronecker(s.inverse()->transpose(), t);
  RationalMatrix a(8, 8);
  const std::size_t xs[2] = {0, 3};
  const std::size_t qs[4] = {1, 2, 4, 5};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      a(xs[r], xs[c]) = s(r, c);
      a(6 + r, 6 + c) = t(r, c);
    }
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) a(qs[r], qs[c]) = kron(r, c);
  return checked({g_algebra(), a, "S on <X1,X4>, M -> S^2 M S^-1 on the rest of V, S^2 on Z"});
}

Construction abelian_automorphism(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Q^1 has no hyperbolic unimodular automorphism");
  std::vector<RationalMatrix> blocks;
  std::size_t left = n;
  if (n % 2 == 1) {
    blocks.push_back(cubic_companion());
    left -= 3;
  }
  for (; left > 0; left -= 2) blocks.push_back(golden());
  LieAlgebra l = LieAlgebra::abelian(n);
  l.set_label("abelian(" + std::to_string(n) + ")");
  return {l, RationalMatrix::block_diagonal(blocks), "hyperbolic blocks"};
}

Construction with_abelian_plane(const Construction& c) {
  LieAlgebra sum = direct_sum(c.algebra, LieAlgebra::abelian(2));
  sum.set_label(c.algebra.label() + "+abelian(2)");
  std::vector<std::size_t> perm;
  LieAlgebra ordered = canonical_order(sum, &perm);
  RationalMatrix big = RationalMatrix::block_diagonal({c.automorphism, golden()});
  RationalMatrix a(big.rows(), big.cols());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j) a(i, j) = big(perm[i], perm[j]);
  return checked({ordered, a, c.note + "; [[2,1],[1,1]] on the abelian plane"});
}

}  // namespace anosov
