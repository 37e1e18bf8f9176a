#include <random>

#include "anosov/construct/catalog.hpp"
#include "anosov/lie/algebra.hpp"
#include "doctest.h"

using namespace anosov;

namespace {

// Jacobiator straight from the structure constants.
bool jacobi_holds(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (i == j) return Rational(0);
    return i < j ? l.c(i, j, k) : -l.c(j, i, k);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Rational s;
          for (std::size_t p = 0; p < n; ++p)
            s += c(j, k, p) * c(i, p, m) + c(k, i, p) * c(j, p, m) + c(i, j, p) * c(k, p, m);
          if (!s.is_zero()) return false;
        }
  return true;
}

LieAlgebra random_two_step(std::mt19937& rng, std::size_t n1, std::size_t n2) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n1 + n2; ++i) names.push_back("e" + std::to_string(i + 1));
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    LieAlgebra l(names);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = i + 1; j < n1; ++j)
        for (std::size_t k = 0; k < n2; ++k)
          if (int v = d(rng); v != 0 && d(rng) == 0) l.add_bracket(i, j, n1 + k, Rational(v));
    if (derived(l).dim() == n2 && center(l).dim() == n2) return l;
  }
}

RationalMatrix random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(d(rng));
    if (!m.determinant().is_zero()) return m;
  }
}

}  // namespace

TEST_CASE("catalog types") {
  CHECK(type_string(type_of(f3())) == "(3,3)");
  CHECK(type_string(type_of(g_algebra())) == "(6,2)");
  CHECK(type_string(type_of(h_algebra())) == "(4,4)");
  CHECK(type_string(type_of(l4())) == "(2,1,1)");
  CHECK(type_string(type_of(catalog("l4+l4"))) == "(4,2,2)");
  CHECK(type_string(type_of(h3h5())) == "(6,2)");
  CHECK(type_string(type_of(heisenberg(5))) == "(4,1)");
  CHECK(type_string(type_of(n_k(3))) == "(4,2)");
  CHECK(type_string(type_of(h_k(2))) == "(4,4)");
  CHECK(type_string(type_of(l_k(5))) == "(4,2,2)");
  CHECK(type_string(type_of(LieAlgebra::abelian(4))) == "(4)");
}

TEST_CASE("validate agrees with a brute-force Jacobiator") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-1, 1);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LieAlgebra l({"a", "b", "c", "d", "e"});
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        for (std::size_t k = j + 1; k < 5; ++k)
          if (int v = d(rng); v != 0) l.add_bracket(i, j, k, Rational(v));
    bool oracle = jacobi_holds(l);
    CHECK(oracle == !validate(l).has_value());
    (oracle ? valid : invalid)++;
  }
  CHECK(valid > 10);
  CHECK(invalid > 10);
}

TEST_CASE("require_valid and nilpotency errors") {
  LieAlgebra bad({"a", "b", "c", "d"});
  bad.add_bracket(0, 1, 2, Rational(1));
  bad.add_bracket(1, 2, 3, Rational(1));
  bad.add_bracket(0, 3, 3, Rational(1));
  CHECK_THROWS_AS(require_valid(bad), std::invalid_argument);

  LieAlgebra sl2({"h", "e", "f"});
  sl2.add_bracket(0, 1, 1, Rational(2));
  sl2.add_bracket(0, 2, 2, Rational(-2));
  sl2.add_bracket(1, 2, 0, Rational(1));
  CHECK_FALSE(validate(sl2).has_value());
  CHECK_THROWS_AS(type_of(sl2), std::domain_error);
}

TEST_CASE("central series, center and derived algebra") {
  auto series = central_series(l4());
  REQUIRE(series.size() == 4);
  CHECK(series[0].dim() == 4);
  CHECK(series[1].dim() == 2);
  CHECK(series[2].dim() == 1);
  CHECK(series[3].dim() == 0);
  CHECK(center(heisenberg(7)).dim() == 1);
  CHECK(derived(f3()).dim() == 3);
  auto cs = characteristic_subspaces(catalog("h3+abelian(2)"));
  CHECK(cs.center.dim() == 3);
  CHECK(cs.derived.dim() == 1);
  CHECK(cs.center_cap_derived.dim() == 1);
}

TEST_CASE("maximal abelian factor") {
  auto af = max_abelian_factor(catalog("n_k(2)+abelian(2)"));
  CHECK(af.m == 2);
  CHECK(type_string(type_of(af.reduced)) == "(4,2)");
  CHECK(max_abelian_factor(f3()).m == 0);
  CHECK(max_abelian_factor(LieAlgebra::abelian(3)).m == 3);

  LieAlgebra l = catalog("h3+abelian(1)");
  auto f = max_abelian_factor(l);
  CHECK(f.m == 1);
  CHECK(change_basis(l, f.basis_change) == direct_sum(f.reduced, LieAlgebra::abelian(f.m)));
}

TEST_CASE("change_basis transports brackets") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    LieAlgebra l = random_two_step(rng, 4, 2);
    RationalMatrix p = random_invertible(rng, 6);
    LieAlgebra m = change_basis(l, p);
    CHECK(is_isomorphism(m, l, p));
    CHECK_FALSE(validate(m).has_value());
  }
  RationalMatrix singular(3, 3);
  CHECK_THROWS(change_basis(heisenberg(3), singular));
}

TEST_CASE("canonical order and direct sums") {
  LieAlgebra s = direct_sum(heisenberg(3), heisenberg(3));
  CHECK(s.names() == std::vector<std::string>{"X1", "X2", "Z1", "X1_2", "X2_2", "Z1_2"});
  std::vector<std::size_t> perm;
  LieAlgebra c = canonical_order(s, &perm);
  CHECK(c.names() == std::vector<std::string>{"X1", "X2", "X1_2", "X2_2", "Z1", "Z1_2"});
  CHECK(perm == std::vector<std::size_t>{0, 1, 3, 4, 2, 5});
  CHECK(is_two_step(c));
  CHECK_FALSE(is_two_step(s));
  CHECK_THROWS(two_step_split(s));
}

TEST_CASE("J_Z pairs with the bracket") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 20; ++t) {
    LieAlgebra l = random_two_step(rng, 4, 3);
    RationalVector x(7), y(7), z(3);
    for (std::size_t i = 0; i < 4; ++i) x[i] = Rational(d(rng)), y[i] = Rational(d(rng));
    for (auto& v : z) v = Rational(d(rng));
    RationalMatrix j = jz_matrix(l, z);
    CHECK(j.is_skew_symmetric());
    RationalVector br = l.bracket(x, y);
    Rational lhs;
    for (std::size_t i = 0; i < 3; ++i) lhs += br[4 + i] * z[i];
    RationalVector jx = j.apply(RationalVector(x.begin(), x.begin() + 4));
    Rational rhs;
    for (std::size_t i = 0; i < 4; ++i) rhs += y[i] * jx[i];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bracket preservation and the J-path agree on 200 random pairs") {
  std::mt19937 rng(19);
  int agree_true = 0;
  for (int t = 0; t < 200; ++t) {
    LieAlgebra l1 = random_two_step(rng, 4, 2);
    RationalMatrix p = RationalMatrix::block_diagonal({random_invertible(rng, 4), random_invertible(rng, 2)});
    LieAlgebra l2 = two_step_split(l1).n2 == 2 ? change_basis(l1, p) : l1;
    RationalMatrix a = p;
    if (t % 2 == 1) {
      std::uniform_int_distribution<int> pos(0, 5);
      a(static_cast<std::size_t>(pos(rng)), static_cast<std::size_t>(pos(rng))) += Rational(1);
    }
    bool direct = preserves_bracket(l2, l1, a);
    CHECK(direct == preserves_bracket_via_j(l2, l1, a));
    if (direct) ++agree_true;
  }
  CHECK(agree_true >= 100);
}

TEST_CASE("is_isomorphism errors") {
  CHECK_THROWS(is_isomorphism(heisenberg(3), heisenberg(3), RationalMatrix::identity(4)));
  CHECK_THROWS(is_isomorphism(heisenberg(3), heisenberg(3), RationalMatrix(3, 3)));
  CHECK(is_isomorphism(heisenberg(3), heisenberg(3), RationalMatrix::identity(3)));
}
