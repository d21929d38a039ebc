#include "tmne/game.hpp"
#include "tmne/multilinear.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace tmne;

namespace {

MultilinearPoly random_poly(const std::vector<int>& sizes, const Multidegree& d, std::mt19937_64& rng) {
  MultilinearPoly F(sizes, d);
  for (auto& c : F.coeffs()) c = static_cast<long>(rng() % 19) - 9;
  return F;
}

GroupedPoint random_point(const std::vector<int>& sizes, std::mt19937_64& rng, bool nonzero_ref = false) {
  GroupedPoint x;
  for (int s : sizes) {
    std::vector<Rational> v;
    for (int j = 0; j < s; ++j) v.push_back(make_rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4)));
    if (nonzero_ref && v[0] == 0) v[0] = 1;
    x.push_back(std::move(v));
  }
  return x;
}

const MultilinearPoly& player1(const MultilinearSystem& sys) { return sys.polys[0]; }

}  // namespace

TEST_CASE("evaluation examples") {
  auto sys = indifference_system(oracle::fixture("sym222.game"));
  const auto& F = player1(sys);
  GroupedPoint x{{1, 0}, {1, Rational(1, 3)}, {1, Rational(1, 3)}};
  CHECK(evaluate(F, x) == 0);
  CHECK(evaluate(F, GroupedPoint{{1, 0}, {1, 0}, {1, 0}}) == 4);
  GroupedPoint y{{1, 0}, {2, 0}, {1, 0}};
  CHECK(evaluate(F, y) == 8);
  CHECK_THROWS_WITH(evaluate(F, GroupedPoint{{1, 0}, {1, 0}}), doctest::Contains("dimension mismatch"));
}

TEST_CASE("multihomogeneity") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 40; ++it) {
    std::vector<int> sizes{2 + static_cast<int>(rng() % 2), 2, 2 + static_cast<int>(rng() % 2)};
    Multidegree d{static_cast<int>(rng() % 2), 1, static_cast<int>(rng() % 2)};
    auto F = random_poly(sizes, d, rng);
    auto x = random_point(sizes, rng);
    for (std::size_t g = 0; g < sizes.size(); ++g) {
      Rational lam = make_rational(static_cast<long>(rng() % 7) + 1, 1 + static_cast<long>(rng() % 5));
      auto y = x;
      for (auto& c : y[g]) c *= lam;
      CHECK(evaluate(F, y) == (d[g] ? lam : Rational(1)) * evaluate(F, x));
    }
  }
}

TEST_CASE("homogenized linear forms") {
  std::vector<int> sizes{2, 2, 2};
  auto F = homogenize_linear_form(sizes, 1, {});
  CHECK(F.multidegree() == Multidegree{1, 1, 1});
  CHECK(evaluate(F, GroupedPoint{{2, 5}, {3, 7}, {1, 1}}) == 6);
  auto L = homogenize_linear_form(sizes, 5, {{{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1}});
  int nonzero = 0;
  for (const auto& c : L.coeffs()) nonzero += c != 0;
  CHECK(nonzero == 4);
  CHECK(evaluate_affine(L, GroupedPoint{{2}, {3}, {Rational(1, 2)}}) == 5 + 2 + 3 + Rational(1, 2));
  CHECK_THROWS(homogenize_linear_form(sizes, 1, {{{0, 2}, 1}}));
  CHECK_THROWS(homogenize_linear_form(sizes, 1, {{{3, 1}, 1}}));
}

TEST_CASE("facet restriction") {
  auto sys = indifference_system(oracle::fixture("sym222.game"));
  auto R = facet_restriction(player1(sys), 1);
  CHECK(R.sizes() == std::vector<int>{2, 1, 2});
  CHECK(R.coeffs() == std::vector<Rational>{4, -9});
  // degree-0 group: coefficients unchanged
  auto S = facet_restriction(player1(sys), 0);
  CHECK(S.coeffs() == player1(sys).coeffs());
  CHECK(S.sizes() == std::vector<int>{1, 2, 2});
  CHECK_THROWS(facet_restriction(R, 1));

  std::mt19937_64 rng(22);
  for (int it = 0; it < 20; ++it) {
    auto F = random_poly({3, 2, 3}, {1, 1, 1}, rng);
    CHECK(facet_restriction(facet_restriction(F, 0), 2) == facet_restriction(facet_restriction(F, 2), 0));
  }
}

TEST_CASE("affine chart") {
  auto sys = indifference_system(oracle::fixture("sym222.game"));
  auto A = affine_chart(player1(sys));
  for (long a : {0L, 1L, 3L})
    for (long b : {-2L, 1L}) {
      Rational u2(a), u3(b);
      CHECK(evaluate(A, GroupedPoint{{5}, {u2}, {u3}}) == 4 - 9 * u3 - 9 * u2 + 18 * u2 * u3);
    }
  auto one = affine_chart(homogenize_linear_form({2, 3}, 1, {}));
  CHECK(evaluate(one, GroupedPoint{{7}, {8, 9}}) == 1);

  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    std::vector<int> sizes{3, 2, 2};
    Multidegree d{1, static_cast<int>(rng() % 2), 1};
    auto F = random_poly(sizes, d, rng);
    auto xi = random_point(sizes, rng, true);
    GroupedPoint u;
    Rational scale = 1;
    for (std::size_t g = 0; g < sizes.size(); ++g) {
      std::vector<Rational> v;
      for (std::size_t j = 1; j < xi[g].size(); ++j) v.push_back(xi[g][j] / xi[g][0]);
      u.push_back(std::move(v));
      if (d[g]) scale *= xi[g][0];
    }
    CHECK(evaluate(affine_chart(F), u) == evaluate(F, xi) / scale);
  }
}

TEST_CASE("fixture system vanishes only at the two solutions on a grid") {
  auto sys = indifference_system(oracle::fixture("sym222.game"));
  std::vector<Rational> grid;
  for (int a = 0; a <= 12; ++a) grid.push_back(make_rational(a, 12));
  for (int a = 1; a <= 4; ++a) grid.push_back(make_rational(a, 3) + 1);
  int hits = 0;
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& c : grid) {
        GroupedPoint x{{1, a}, {1, b}, {1, c}};
        bool all = true;
        for (const auto& F : sys.polys) all = all && evaluate(F, x) == 0;
        if (!all) continue;
        ++hits;
        CHECK(a == b);
        CHECK(b == c);
        CHECK((a == Rational(1, 3) || a == Rational(2, 3)));
      }
  CHECK(hits == 2);
}
