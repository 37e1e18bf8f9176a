#include <random>

#include "anosov/anosov/certify.hpp"
#include "anosov/construct/constructions.hpp"
#include "anosov/exact/numtheory.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anosov;

TEST_CASE("automorphism predicate") {
  CHECK(is_automorphism(heisenberg(3), RationalMatrix{{2, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  CHECK_FALSE(is_automorphism(heisenberg(3), RationalMatrix{{2, 1, 0}, {1, 1, 0}, {0, 0, 2}}));
  CHECK_FALSE(is_automorphism(heisenberg(3), RationalMatrix(3, 3)));
  CHECK_THROWS(is_automorphism(heisenberg(3), RationalMatrix::identity(2)));
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(RationalMatrix{{2, 1}, {1, 1}}).ok);
  CHECK(is_unimodular(RationalMatrix{{0, 1}, {1, 0}}).ok);
  CHECK_FALSE(is_unimodular(RationalMatrix{{2, 0}, {0, 2}}).ok);
  RationalMatrix half{{1, 0}, {0, 1}};
  half(0, 1) = Rational(BigInt(1), BigInt(2));
  CHECK(is_unimodular(half).ok);  // charpoly (x-1)^2 is integral
  half(0, 0) = Rational(BigInt(1), BigInt(2));
  CHECK_FALSE(is_unimodular(half).integer_coefficients);
}

TEST_CASE("hyperbolicity examples") {
  CHECK(is_hyperbolic(RationalMatrix{{2, 1}, {1, 1}}).ok);
  CHECK_FALSE(is_hyperbolic(RationalMatrix{{0, -1}, {1, 0}}).ok);
  CHECK_FALSE(is_hyperbolic(RationalMatrix{{1, 1}, {0, 1}}).ok);
  CHECK_FALSE(is_hyperbolic(RationalMatrix{{-1, 0}, {0, 2}}).ok);
  // x^4 - x^3 - x^2 - x + 1 (Salem-type): two roots on the circle
  CHECK_FALSE(hyperbolicity_of(UniPoly{1, -1, -1, -1, 1}).ok);
  CHECK(hyperbolicity_of(UniPoly{-1, -1, 0, 1}).ok);
}

TEST_CASE("exact hyperbolicity and signatures agree with numerics on 1000 random integer matrices") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<int> d(-3, 3);
  int disagreements = 0, hyperbolic = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = static_cast<std::size_t>(size(rng));
    RationalMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(d(rng));
    auto moduli = oracle::matrix_moduli(a);
    int inside = 0, on = 0;
    for (auto m : moduli) {
      if (std::abs(m - 1) < 1e-6L) ++on;
      else if (m < 1) ++inside;
    }
    HyperbolicityEvidence ev = is_hyperbolic(a);
    if (ev.ok != (on == 0)) ++disagreements;
    if (ev.ok) {
      ++hyperbolic;
      auto [p, q] = signature(a, ev);
      if (q != inside || p != static_cast<int>(n) - inside) ++disagreements;
    }
  }
  CHECK(disagreements == 0);
  CHECK(hyperbolic > 300);
}

TEST_CASE("signature of the inverse swaps") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-2, 2);
  int seen = 0;
  for (int t = 0; t < 400 && seen < 40; ++t) {
    RationalMatrix a(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) a(r, c) = Rational(d(rng));
    if (a.determinant().abs() != Rational(1)) continue;
    auto ev = is_hyperbolic(a);
    if (!ev.ok) continue;
    RationalMatrix inv = *a.inverse();
    auto s = signature(a, ev);
    auto si = signature(inv, is_hyperbolic(inv));
    CHECK(s.first == si.second);
    CHECK(s.second == si.first);
    ++seen;
  }
  CHECK(seen >= 10);
  CHECK(signature(RationalMatrix{{2, 1}, {1, 1}}, is_hyperbolic(RationalMatrix{{2, 1}, {1, 1}})) == std::pair{1, 1});
  CHECK_THROWS(signature(RationalMatrix::identity(2), is_hyperbolic(RationalMatrix::identity(2))));
}

TEST_CASE("semisimplicity") {
  CHECK(is_semisimple(RationalMatrix{{2, 1}, {1, 1}}));
  CHECK_FALSE(is_semisimple(RationalMatrix{{1, 1}, {0, 1}}));
  CHECK(is_semisimple(RationalMatrix::identity(3)));
}

TEST_CASE("verify_anosov failure lists") {
  auto c = verify_anosov(f3(), RationalMatrix::identity(6));
  CHECK(c.failures == std::vector<std::string>{"hyperbolic"});
  CHECK(c.verdict() == Verdict::Fail);
  auto d = verify_anosov(heisenberg(3), RationalMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  CHECK(d.failures == std::vector<std::string>{"automorphism", "unimodular", "hyperbolic"});
  auto e = verify_anosov(LieAlgebra::abelian(2), RationalMatrix{{2, 1}, {1, 1}});
  CHECK(e.pass());
  CHECK(e.signature == std::pair{1, 1});
}

TEST_CASE("eigenvalue unit report on the h_2 automorphism") {
  Construction c = hk_automorphism(2);
  auto blocks = eigenvalue_unit_report(c.automorphism, {4, 4});
  REQUIRE(blocks.size() == 2);
  REQUIRE(blocks[0].factors.size() == 1);
  CHECK(blocks[0].factors[0].poly == pow(UniPoly{3, -6, 1}, 2) - UniPoly{8});
  CHECK(blocks[0].factors[0].unit);
  CHECK(blocks[0].all_units);
  CHECK(blocks[1].all_units);
  CHECK_THROWS(eigenvalue_unit_report(RationalMatrix{{1, 1}, {0, 1}}, {1, 1}));
  CHECK_NOTHROW(eigenvalue_unit_report(RationalMatrix{{1, 0}, {1, 1}}, {1, 1}));
}

TEST_CASE("type gate") {
  CHECK(type_gate({4}).admissible);
  CHECK(type_gate({4}).clause == "abelian");
  CHECK_FALSE(type_gate({2, 1}).admissible);
  CHECK_FALSE(type_gate({4, 1}).admissible);
  CHECK_FALSE(type_gate({2, 1, 1}).admissible);
  CHECK(type_gate({4, 2}).admissible);
  CHECK(type_gate({3, 3}).admissible);
  CHECK(type_gate({4, 2, 2}).admissible);
  GateResult g = type_gate({3, 3, 2});
  CHECK(g.admissible);
  CHECK(g.dimension == 8);
}

TEST_CASE("region obstructions") {
  auto n1 = region_obstructions(n_k(1));
  CHECK(n1.verdict == Verdict::Obstructed);
  CHECK(n1.criterion == "region-integer-solutions");
  REQUIRE(!n1.enumerations.empty());
  CHECK(n1.enumerations[0].value == 1);
  CHECK(n1.enumerations[0].bound == 10000);
  REQUIRE(n1.enumerations[0].solutions.size() == 2);
  for (const auto& s : n1.enumerations[0].solutions) {
    CHECK(abs(s.x) == 1);
    CHECK(s.y == 0);
  }

  auto n1q = region_obstructions(catalog("n_k(1)+abelian(2)"));
  CHECK(n1q.verdict == Verdict::Obstructed);
  CHECK(n1q.abelian_factor == 2);
  CHECK(n1q.enumerations[0].solutions.size() == 2);

  auto neg = region_obstructions(n_k(-2));
  CHECK(neg.verdict == Verdict::Obstructed);
  CHECK(neg.criterion == "region-unbounded");

  auto two = region_obstructions(n_k(2));
  CHECK(two.verdict == Verdict::Deferred);
  REQUIRE(two.pell_solution.has_value());
  CHECK(two.pell_solution->first == 3);
  CHECK(two.pell_solution->second == 2);

  CHECK(region_obstructions(g_algebra()).verdict == Verdict::Inapplicable);
  CHECK(region_obstructions(h_k(2)).verdict == Verdict::Inapplicable);
}

TEST_CASE("region dichotomy for square-free |k| <= 30") {
  for (long k = -30; k <= 30; ++k) {
    if (k == 0 || !is_square_free(BigInt(k))) continue;
    auto r = region_obstructions(n_k(k));
    if (k < 0) {
      CHECK(r.verdict == Verdict::Obstructed);
      CHECK(r.criterion == "region-unbounded");
    } else if (k == 1) {
      CHECK(r.verdict == Verdict::Obstructed);
    } else {
      CHECK(r.verdict == Verdict::Deferred);
      // infinitely many solutions: a nontrivial one exists
      CHECK(oracle::brute_force_pell(k, 5000).has_value());
    }
  }
}

TEST_CASE("enumerate_solutions") {
  auto e = enumerate_solutions(BigInt(2), BigInt(1), 100);
  // (1,0), (3,2), (17,12), (99,70) and their sign variants
  CHECK(e.solutions.size() == 2 + 4 * 3);
  for (const auto& s : e.solutions) CHECK(s.x * s.x - 2 * s.y * s.y == 1);
  CHECK(enumerate_solutions(BigInt(3), BigInt(2), 50).solutions.empty());
}

TEST_CASE("Pell fundamental solutions match brute force for square-free k <= 30") {
  for (long k = 2; k <= 30; ++k) {
    if (!is_square_free(BigInt(k))) continue;
    auto want = oracle::brute_force_pell(k, 100000);
    REQUIRE(want.has_value());
    auto got = pell_fundamental(BigInt(k));
    CHECK(got.first == want->first);
    CHECK(got.second == want->second);
  }
}

TEST_CASE("abelian factor reduction") {
  CHECK(abfactor_reduce(LieAlgebra::abelian(3)).verdict == Verdict::Pass);
  CHECK(abfactor_reduce(catalog("h3+abelian(1)")).verdict == Verdict::Obstructed);
  auto r = abfactor_reduce(catalog("n_k(2)+abelian(2)"));
  CHECK(r.m == 2);
  CHECK(r.verdict == Verdict::Deferred);
  CHECK(abfactor_reduce(f3()).m == 0);
}
