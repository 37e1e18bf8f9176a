#include <cmath>
#include <random>

#include "anosov/anosov/certify.hpp"
#include "anosov/construct/constructions.hpp"
#include "anosov/exact/numtheory.hpp"
#include "anosov/forms/forms.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anosov;

namespace {

std::pair<int, int> sig(const Construction& c) {
  auto cert = verify_anosov(c.algebra, c.automorphism);
  REQUIRE(cert.pass());
  return *cert.signature;
}

Subspace j_span(const LieAlgebra& l) {
  TwoStepSplit sp = two_step_split(l);
  std::vector<RationalVector> rows;
  for (std::size_t z = 0; z < sp.n2; ++z) {
    RationalVector e(sp.n2);
    e[z] = Rational(1);
    RationalMatrix j = jz_matrix(l, e);
    RationalVector v;
    for (std::size_t r = 0; r < sp.n1; ++r)
      for (std::size_t c = r + 1; c < sp.n1; ++c) v.push_back(j(r, c));
    rows.push_back(v);
  }
  return Subspace::span(sp.n1 * (sp.n1 - 1) / 2, rows);
}

}  // namespace

TEST_CASE("catalog expressions") {
  LieAlgebra l = catalog("n_k(2)+abelian(2)");
  CHECK(l.label() == "n_k(2)+abelian(2)");
  CHECK(l.dim() == 8);
  CHECK(is_two_step(l));
  CHECK(catalog("n_k", 3) == n_k(3));
  CHECK(catalog("h5") == heisenberg(5));
  CHECK(catalog("h_k(-1)").dim() == 8);
  CHECK_THROWS(catalog("n_k(4)"));
  CHECK_THROWS(catalog("h_k(0)"));
  CHECK_THROWS(catalog("l_k(0)"));
  CHECK_THROWS(catalog("n_k"));
  CHECK_THROWS(catalog("n_k(2"));
  CHECK_THROWS(catalog("frobnicate"));
  CHECK_THROWS(catalog("f3+"));
  CHECK(catalog_index().size() == 10);
}

TEST_CASE("gradations") {
  CHECK(default_gradation(heisenberg(3)) == Gradation{1, 1, 2});
  CHECK(default_gradation(l4()) == Gradation{1, 1, 2, 3});
  CHECK(default_gradation(l_k(2)) == Gradation{1, 1, 1, 1, 2, 2, 3, 3});
  CHECK(is_gradation(heisenberg(3), {2, 3, 5}));
  CHECK_FALSE(is_gradation(heisenberg(3), {1, 1, 1}));
  CHECK_FALSE(is_gradation(heisenberg(3), {0, 1, 1}));
}

TEST_CASE("graded sum of h3") {
  LieAlgebra h3 = heisenberg(3);
  Construction c = graded_sum(h3, default_gradation(h3), RationalMatrix{{2, 1}, {1, 1}});
  CHECK(type_string(type_of(c.algebra)) == "(4,2)");
  CHECK(sig(c) == std::pair{3, 3});

  Construction d = graded_sum(h3, default_gradation(h3), RationalMatrix{{2, 3}, {1, 2}});
  CHECK(sig(d) == std::pair{3, 3});
  auto cls = binary_quadratic_class(pfaffian_form(d.algebra));
  CHECK(cls.k == 3);

  Construction e = graded_sum(l4(), default_gradation(l4()), RationalMatrix{{2, 1}, {1, 1}});
  CHECK(type_string(type_of(e.algebra)) == "(4,2,2)");
  CHECK(sig(e) == std::pair{4, 4});

  // Using the same block on every weight does not preserve brackets.
  RationalMatrix plain = RationalMatrix::block_diagonal(
      {RationalMatrix::companion(charpoly(RationalMatrix{{2, 1}, {1, 1}})),
       RationalMatrix::companion(charpoly(RationalMatrix{{2, 1}, {1, 1}})),
       RationalMatrix::companion(charpoly(RationalMatrix{{2, 1}, {1, 1}}))});
  CHECK_FALSE(is_automorphism(c.algebra, plain));
}

TEST_CASE("graded sum preconditions") {
  LieAlgebra h3 = heisenberg(3);
  Gradation d = default_gradation(h3);
  CHECK_THROWS(graded_sum(h3, d, RationalMatrix{{0, -1}, {1, 0}}));  // complex spectrum
  CHECK_THROWS(graded_sum(h3, d, RationalMatrix{{2, 0}, {0, 1}}));   // det 2
  CHECK_THROWS(graded_sum(h3, d, RationalMatrix{{1, 1}, {0, 1}}));   // not hyperbolic
  CHECK_THROWS(graded_sum(h3, d, RationalMatrix{{2}}));               // s = 1
  CHECK_THROWS(graded_sum(h3, {1, 1, 1}, RationalMatrix{{2, 1}, {1, 1}}));
  LieAlgebra half({"X1", "X2", "Z1"});
  half.add_bracket(0, 1, 2, Rational(BigInt(1), BigInt(2)));
  CHECK_THROWS(graded_sum(half, d, RationalMatrix{{2, 1}, {1, 1}}));
}

TEST_CASE("graded sum with s = 3") {
  // x^3 - 3x + 1 has three real roots and constant term 1
  RationalMatrix b = RationalMatrix::companion(UniPoly{1, -3, 0, 1});
  LieAlgebra h3 = heisenberg(3);
  Construction c = graded_sum(h3, default_gradation(h3), b);
  CHECK(c.algebra.dim() == 9);
  CHECK(type_string(type_of(c.algebra)) == "(6,3)");
  CHECK(verify_anosov(c.algebra, c.automorphism).pass());
}

TEST_CASE("Scheuneman duality") {
  LieAlgebra d = canonical_order(scheuneman_dual(catalog("h3+h3")));
  CHECK(d == h_algebra());
  CHECK(type_string(type_of(d)) == "(4,4)");
  CHECK_THROWS(scheuneman_dual(l4()));
  CHECK_THROWS(scheuneman_dual(heisenberg(3)));  // the dual would be abelian

  std::mt19937 rng(31);
  std::uniform_int_distribution<int> v(-2, 2);
  int tested = 0;
  for (int t = 0; t < 200 && tested < 20; ++t) {
    LieAlgebra l({"a", "b", "c", "d", "e", "z1", "z2"});
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        for (std::size_t k = 5; k < 7; ++k)
          if (int c = v(rng); c != 0 && v(rng) == 0) l.add_bracket(i, j, k, Rational(c));
    if (!is_two_step(l) || center(l).dim() != 2 || derived(l).dim() != 2) continue;
    LieAlgebra dd = scheuneman_dual(scheuneman_dual(l));
    CHECK(j_span(dd) == j_span(l));
    ++tested;
  }
  CHECK(tested == 20);
}

TEST_CASE("sqrt-k witnesses reproduce the rational forms") {
  for (long k : {1, 2, 3, 5, 6, 7}) {
    for (const char* fam : {"h3h3", "h", "l4l4"}) {
      SqrtFormWitness w = sqrt_form_witness(fam, k);
      CHECK_MESSAGE(w.rational_form == w.target, fam << " k=" << k);
    }
  }
  CHECK_THROWS(sqrt_form_witness("g", 2));
  LieAlgebra h3h3 = sqrt_form_witness("h3h3", 2).real;
  std::vector<QuadVector> bad;
  for (std::size_t i = 0; i < 6; ++i) {
    QuadVector e(6, QuadFieldElement(2, Rational(0)));
    e[i] = i == 1 ? QuadFieldElement::sqrt(2) : QuadFieldElement(2, Rational(1));
    bad.push_back(e);
  }
  CHECK_THROWS(rational_form_from_basis(h3h3, 2, bad));
}

TEST_CASE("h_k automorphism") {
  // The block as printed, with 2n^2 in the corner, does not preserve brackets.
  long k = 2, a = 3, b = 2, n = 3;
  RationalMatrix a1{{0, 0, b, -a}, {0, 0, -a, k * b}, {0, 1, 2 * n, 0}, {1, 0, 0, 2 * n}};
  RationalMatrix a2{{0, 0, 0, -1}, {0, -a, b, 4 * n * a}, {0, -b * k, a, 4 * n * b * k}, {-1, -2 * n, 0, 2 * n * n}};
  CHECK_FALSE(is_automorphism(h_k(2), RationalMatrix::block_diagonal({a1, a2})));
  a2(3, 3) = Rational(4 * n * n);
  CHECK(is_automorphism(h_k(2), RationalMatrix::block_diagonal({a1, a2})));

  Construction c = hk_automorphism(2, BigInt(3), BigInt(2), BigInt(3));
  CHECK(c.automorphism == RationalMatrix::block_diagonal({a1, a2}));
  CHECK(verify_anosov(c.algebra, c.automorphism).pass());
  CHECK(charpoly(a1) == pow(UniPoly{3, -6, 1}, 2) - UniPoly{8});

  CHECK(verify_anosov(h_k(5), hk_automorphism(5, BigInt(9), BigInt(4), BigInt(5)).automorphism).pass());
  CHECK_THROWS(hk_automorphism(5, BigInt(9), BigInt(4), BigInt(4)));
  CHECK_THROWS(hk_automorphism(2, BigInt(3), BigInt(2), BigInt(1)));
  CHECK_THROWS(hk_automorphism(2, BigInt(3), BigInt(1), BigInt(3)));
  CHECK_THROWS(hk_automorphism(1));
}

TEST_CASE("h_k minimal and balanced n") {
  struct Row {
    long k;
    long nmin, nbal;
  };
  for (Row r : {Row{2, 3, 4}, Row{3, 2, 3}, Row{5, 5, 10}}) {
    auto [a, b] = pell_fundamental(BigInt(r.k));
    CHECK(hk_minimal_n(r.k, a, b) == r.nmin);
    CHECK(hk_balanced_n(r.k, a, b) == r.nbal);
    CHECK(sig(hk_automorphism(r.k)) == std::pair{5, 3});
    CHECK(sig(hk_automorphism(r.k, a, b, BigInt(r.nbal))) == std::pair{4, 4});
  }
}

TEST_CASE("h_k signature against numeric eigenvalues over a range of n") {
  for (long k : {2, 3, 5}) {
    auto [a, b] = pell_fundamental(BigInt(k));
    double eps = a.get_d() + b.get_d() * std::sqrt(static_cast<double>(k));
    for (long n = hk_minimal_n(k, a, b).get_si(); n <= 14; ++n) {
      Construction c = hk_automorphism(k, a, b, BigInt(n));
      int outside = 0;
      for (auto m : oracle::matrix_moduli(c.automorphism)) outside += m > 1 ? 1 : 0;
      CHECK(sig(c).first == outside);
      CHECK((outside == 4) == (2.0 * n - 1 > eps));
    }
  }
}

TEST_CASE("h1 base automorphism") {
  Construction c = h1_base_automorphism(2);
  CHECK(sig(c) == std::pair{4, 4});
  CHECK(type_string(type_of(c.algebra)) == "(4,4)");
  CHECK(pfaffian_form(c.algebra).str() == "3*x^2 - y^2 - 3*z^2 + w^2");
  CHECK(sig(h1_base_automorphism(3)) == std::pair{4, 4});
  CHECK(pfaffian_form(h1_base_automorphism(3).algebra).str() == "8*x^2 - y^2 - 8*z^2 + w^2");
  CHECK_THROWS(h1_base_automorphism(1));
}

TEST_CASE("l_k automorphism") {
  for (long k : {2, 3, 5}) {
    LkOutcome o = lk_automorphism(k);
    REQUIRE(o.anosov);
    CHECK(o.construction->algebra == l_k(k));
    CHECK(sig(*o.construction) == std::pair{4, 4});
  }
  LkOutcome one = lk_automorphism(1);
  CHECK_FALSE(one.anosov);
  CHECK_FALSE(one.construction.has_value());
  CHECK(one.reason.find("OBSTRUCTED") != std::string::npos);
  CHECK_THROWS(lk_automorphism(4));
  CHECK_THROWS(lk_automorphism(0));

  // diag(B, B, B, B) on l_{a^2-1} is not an automorphism.
  RationalMatrix bm{{2, 3}, {1, 2}};
  CHECK_FALSE(is_automorphism(l_k_raw(BigInt(3)), RationalMatrix::block_diagonal({bm, bm, bm, bm})));
  CHECK(is_automorphism(l_k_raw(BigInt(3)), RationalMatrix::block_diagonal({bm, bm, pow(bm, 2), pow(bm, 3)})));
}

TEST_CASE("f3 induced automorphism") {
  Construction c = f3_automorphism();
  CHECK(sig(c) == std::pair{3, 3});
  CHECK(verify_anosov(f3(), f3_automorphism(RationalMatrix::identity(3)).automorphism).failures ==
        std::vector<std::string>{"hyperbolic"});
  CHECK_THROWS(f3_automorphism(RationalMatrix(3, 3)));
  CHECK_THROWS(f3_automorphism(RationalMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

  std::mt19937 rng(37);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 50; ++t) {
    RationalMatrix a(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t col = 0; col < 3; ++col) a(r, col) = Rational(d(rng));
    Rational det = a.determinant();
    CHECK(exterior_square(a).determinant() == det * det);
  }
}

TEST_CASE("n_k, g and abelian automorphisms") {
  for (long k : {2, 3, 5, 6, 7, 10}) {
    CHECK(sig(nk_automorphism(k)) == std::pair{3, 3});
    CHECK(sig(with_abelian_plane(nk_automorphism(k))) == std::pair{4, 4});
  }
  CHECK_THROWS(nk_automorphism(1));
  CHECK(sig(g_automorphism()) == std::pair{4, 4});
  CHECK(sig(with_abelian_plane(f3_automorphism())) == std::pair{4, 4});
  CHECK(type_string(type_of(with_abelian_plane(f3_automorphism()).algebra)) == "(5,3)");
  for (std::size_t n = 2; n <= 8; ++n) {
    auto s = sig(abelian_automorphism(n));
    CHECK(static_cast<std::size_t>(s.first + s.second) == n);
  }
  CHECK_THROWS(abelian_automorphism(1));
}
