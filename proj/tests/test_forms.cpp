#include <random>

#include "anosov/construct/constructions.hpp"
#include "anosov/forms/forms.hpp"
#include "doctest.h"

using namespace anosov;

namespace {

MultiPoly parse_quadratic(const std::vector<long>& c, std::size_t nvars) {
  // c lists the coefficients of x_i x_j for i <= j in lexicographic order.
  auto names = MultiPoly::default_names(nvars);
  MultiPoly p(names);
  std::size_t at = 0;
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = i; j < nvars; ++j) {
      Exponents e(nvars, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, Rational(c[at++]));
    }
  return p;
}

RationalMatrix random_skew(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = Rational(BigInt(d(rng)), BigInt(den(rng)));
      m(c, r) = -m(r, c);
    }
  return m;
}

}  // namespace

TEST_CASE("Pfaffian normalization and the 4x4 formula") {
  RationalMatrix std4{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  CHECK(pfaffian(std4) == Rational(1));
  std::mt19937 rng(2);
  for (int t = 0; t < 30; ++t) {
    RationalMatrix a = random_skew(rng, 4);
    Rational classical = a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
    CHECK(pfaffian(a) == -classical);
  }
  CHECK(pfaffian(RationalMatrix(3, 3)) == Rational(0));
  CHECK_THROWS(pfaffian(RationalMatrix{{1, 0}, {0, 0}}));
}

TEST_CASE("Pf^2 = det on 50 random 6x6 and 8x8 skew matrices") {
  std::mt19937 rng(17);
  for (std::size_t n : {6u, 8u})
    for (int t = 0; t < 50; ++t) {
      RationalMatrix a = random_skew(rng, n);
      Rational pf = pfaffian(a);
      CHECK(pf * pf == a.determinant());
    }
}

TEST_CASE("Pfaffian forms of the catalog") {
  for (long k : {-3, -1, 1, 2, 3, 5}) {
    HomogeneousForm f = pfaffian_form(n_k(k));
    MultiPoly x = MultiPoly::variable({"x", "y"}, 0), y = MultiPoly::variable({"x", "y"}, 1);
    CHECK(f.poly() == x * x - y * y * MultiPoly::constant({"x", "y"}, Rational(k)));
  }
  CHECK(pfaffian_form(g_algebra()).is_zero());
  CHECK(pfaffian_form(h3h5()).str() == "x*y^2");
  CHECK(pfaffian_form(h_algebra()).str() == "x*w - y*z");
  // Under the fixed normalization h_k comes out as the negative of xw + y^2 - kz^2.
  CHECK(pfaffian_form(h_k(2)).str() == "-x*w - y^2 + 2*z^2");
  CHECK(pfaffian_form(h_k(3)).str() == "-x*w - y^2 + 3*z^2");
  CHECK(pfaffian_form(f3()).is_zero());
}

TEST_CASE("Hessians") {
  for (long k : {1, 2, 3, 7}) {
    CHECK(hessian(pfaffian_form(n_k(k))).constant_term() == Rational(-4 * k));
    CHECK(hessian(pfaffian_form(h_k(k))).constant_term() == Rational(4 * k));
  }
  HomogeneousForm h1 = pfaffian_form(h1_base_automorphism(2).algebra);
  CHECK(h1.str() == "3*x^2 - y^2 - 3*z^2 + w^2");
  CHECK(hessian(h1).constant_term() == Rational(144));
}

TEST_CASE("Hessian covariance on 100 random (f, A, c)") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> cd(1, 3);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    std::vector<long> coeffs(n * (n + 1) / 2);
    for (auto& c : coeffs) c = d(rng);
    HomogeneousForm f(parse_quadratic(coeffs, n), 2);
    if (t % 3 == 0) {
      // cubic: multiply by a random linear form
      MultiPoly lin(f.poly().variables());
      for (std::size_t i = 0; i < n; ++i) {
        Exponents e(n, 0);
        e[i] = 1;
        lin.add_term(e, Rational(d(rng)));
      }
      f = HomogeneousForm(f.poly() * lin, 3);
    }
    RationalMatrix a(n, n);
    do {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(d(rng));
    } while (a.determinant().is_zero());
    Rational c(BigInt(cd(rng)), BigInt(cd(rng)));
    HomogeneousForm g = substitute_and_scale(f, a, c);
    Rational det = a.determinant();
    MultiPoly lhs = hessian(g);
    MultiPoly rhs = hessian(f).linear_substitute(a).scaled(pow(c, static_cast<unsigned>(n)) * det * det);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("substitute_and_scale errors") {
  HomogeneousForm f = pfaffian_form(n_k(2));
  CHECK_THROWS(substitute_and_scale(f, RationalMatrix::identity(3), Rational(1)));
  CHECK_THROWS(substitute_and_scale(f, RationalMatrix(2, 2), Rational(1)));
  CHECK_THROWS(substitute_and_scale(f, RationalMatrix::identity(2), Rational(0)));
}

TEST_CASE("binary quadratic classes") {
  auto k_of = [](std::vector<long> c) {
    std::vector<Rational> r(c.begin(), c.end());
    return binary_quadratic_class(binary_form(r)).k;
  };
  CHECK(k_of({1, 0, -2}) == 2);
  CHECK(k_of({1, 0, -8}) == 2);
  CHECK(k_of({0, 1, 0}) == 1);
  CHECK(k_of({1, 0, 1}) == -1);
  CHECK(k_of({1, 4, 1}) == 3);  // discriminant 12
  CHECK(binary_quadratic_class(binary_form({Rational(0), Rational(0), Rational(0)})).degenerate);
}

TEST_CASE("binary cubic equivalence to x*y^2") {
  HomogeneousForm xyy = binary_form({Rational(0), Rational(0), Rational(1), Rational(0)});
  CHECK(binary_cubic_xyy_test(xyy).b.has_value());
  HomogeneousForm xxy = binary_form({Rational(0), Rational(1), Rational(0), Rational(0)});
  CHECK(binary_cubic_xyy_test(xxy).b.has_value());
  HomogeneousForm sum = binary_form({Rational(1), Rational(0), Rational(0), Rational(1)});
  CHECK_FALSE(binary_cubic_xyy_test(sum).b.has_value());
  HomogeneousForm cube = binary_form({Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK_FALSE(binary_cubic_xyy_test(cube).b.has_value());

  std::mt19937 rng(29);
  std::uniform_int_distribution<int> d(-4, 4);
  int found = 0;
  for (int t = 0; t < 60; ++t) {
    RationalMatrix b{{d(rng), d(rng)}, {d(rng), d(rng)}};
    if (b.determinant().is_zero()) continue;
    HomogeneousForm f = substitute_and_scale(xyy, b, Rational(1));
    auto w = binary_cubic_xyy_test(f);
    REQUIRE(w.b.has_value());
    CHECK(substitute_and_scale(xyy, *w.b, Rational(1)) == f);
    ++found;
  }
  CHECK(found > 30);
  // x^2 (2x - 3y): the branch where the printed formula's denominator vanishes
  auto mirrored = binary_cubic_xyy_test(binary_form({Rational(2), Rational(-3), Rational(0), Rational(0)}));
  CHECK(mirrored.b.has_value());
  // x^3 + x y^2 has a complex pair of linear factors
  CHECK_FALSE(binary_cubic_xyy_test(binary_form({Rational(1), Rational(0), Rational(1), Rational(0)})).b.has_value());
  CHECK(pfaffian_form(h3h5()) == xyy);
}

TEST_CASE("dual of n_k is projectively equivalent to xw + y^2 - kz^2") {
  for (long k : {1, 2, 3}) {
    HomogeneousForm f = pfaffian_form(scheuneman_dual(n_k(k)));
    std::vector<std::string> v = MultiPoly::default_names(4);
    MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1), z = MultiPoly::variable(v, 2),
              w = MultiPoly::variable(v, 3);
    MultiPoly target = x * w + y * y - z * z * MultiPoly::constant(v, Rational(k));
    RationalMatrix swap_yz{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    CHECK(substitute_and_scale(f, swap_yz, Rational(-1)).poly() == target);
  }
}
