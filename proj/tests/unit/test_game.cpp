#include "tmne/game.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace tmne;

namespace {

MixedProfile same(int r, Rational p1) {
  return MixedProfile(static_cast<std::size_t>(r), std::vector<Rational>{1 - p1, p1});
}

MixedProfile random_profile(const GameShape& s, std::mt19937_64& rng) {
  MixedProfile p;
  for (int c : s.strategy_counts) {
    std::vector<Rational> v;
    Rational sum = 0;
    for (int j = 0; j < c; ++j) {
      v.emplace_back(1 + static_cast<long>(rng() % 9));
      sum += v.back();
    }
    for (auto& x : v) x /= sum;
    p.push_back(std::move(v));
  }
  return p;
}

MixedProfile with_pure(MixedProfile p, int i, int j) {
  auto& v = p[static_cast<std::size_t>(i)];
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = (static_cast<int>(k) == j) ? 1 : 0;
  return p;
}

}  // namespace

TEST_CASE("shape strings") {
  auto s = GameShape::parse("2,3,2");
  CHECK(s.strategy_counts == std::vector<int>{2, 3, 2});
  CHECK(s.dims() == std::vector<int>{1, 2, 1});
  CHECK(s.n() == 4);
  CHECK(s.tensor_size() == 12);
  CHECK_THROWS(GameShape::parse("2"));
  CHECK_THROWS(GameShape::parse("2,1"));
  CHECK_THROWS(GameShape::parse("2,,3"));
  CHECK_THROWS(GameShape::parse("2,x"));
}

TEST_CASE("load_game validation") {
  Game g = oracle::fixture("sym222.game");
  CHECK(g.shape.strategy_counts == std::vector<int>{2, 2, 2});
  CHECK(g.payoff(0, {1, 0, 1}) == -9);

  CHECK_THROWS_WITH(load_game(R"({"players":2,"strategies":[2,2],"payoffs":[["1","2","3"],["1","2","3","4"]]})"),
                    doctest::Contains("tensor size"));
  CHECK_THROWS_WITH(load_game(R"({"players":2,"strategies":[2,2],"payoffs":[["1/0","2","3","4"],["1","2","3","4"]]})"),
                    doctest::Contains("invalid rational"));
  CHECK_THROWS_WITH(load_game(R"({"players":2,"strategies":[2,2],"payoffs":[["1","2","3","4"]]})"),
                    doctest::Contains("shape mismatch"));
  CHECK_THROWS_WITH(load_game(R"({"players":2,"strategies":[2,2],"payoffs":[["1","2","3","4"],["1","2","3","4"],["1","2","3","4"]]})"),
                    doctest::Contains("duplicate player block"));
  CHECK_THROWS_WITH(load_game(R"({"players":2,"strategies":[2,2],)"), doctest::Contains("parse error"));
}

TEST_CASE("save and reload round trip") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Game g = random_game(GameShape::parse("2,3,2"), seed);
    CHECK(load_game(save_game(g)) == g);
    CHECK(save_game(random_game(GameShape::parse("2,3,2"), seed)) == save_game(g));
    for (const auto& t : g.payoffs)
      for (const auto& x : t) CHECK((x >= -9 && x <= 9 && x.get_den() == 1));
  }
}

TEST_CASE("expected payoff") {
  Game g = oracle::fixture("sym222.game");
  CHECK(expected_payoff(g, 0, with_pure(with_pure(with_pure(same(3, 0), 0, 1), 1, 1), 2, 0)) == g.payoff(0, {1, 1, 0}));
  CHECK(expected_payoff(g, 0, same(3, Rational(1, 4))) == 0);
  Game five = random_game(GameShape::parse("3,2"), 1);
  for (auto& t : five.payoffs)
    for (auto& x : t) x = 5;
  MixedProfile uniform{{Rational(1, 3), Rational(1, 3), Rational(1, 3)}, {Rational(1, 2), Rational(1, 2)}};
  CHECK(expected_payoff(five, 1, uniform) == 5);
  CHECK_THROWS_WITH(expected_payoff(five, 0, same(2, 0)), doctest::Contains("dimension mismatch"));
}

TEST_CASE("indifference system of the fixture") {
  Game g = oracle::fixture("sym222.game");
  auto sys = indifference_system(g);
  REQUIRE(sys.polys.size() == 3);
  const auto& F = sys.polys[0];
  CHECK(F.multidegree() == Multidegree{0, 1, 1});
  CHECK(F.coeffs() == std::vector<Rational>{4, -9, -9, 18});
  for (std::size_t k = 0; k < 3; ++k) CHECK(sys.tags[k] == std::pair<int, int>{static_cast<int>(k), 1});

  Game z = g;
  z.payoffs[0] = {4, -9, -9, 18, 4, -9, -9, 18};
  CHECK(indifference_system(z).polys[0].is_zero());
  for (auto& t : z.payoffs)
    for (auto& x : t) x = 0;
  for (const auto& p : indifference_system(z).polys) CHECK(p.is_zero());
}

TEST_CASE("difference coefficients by recomputation") {
  std::mt19937_64 rng(3);
  for (const char* shape : {"2,3", "3,2,2", "2,2,2,2"}) {
    Game g = random_game(GameShape::parse(shape), rng());
    auto dc = difference_coefficients(g);
    const int r = g.shape.players();
    for (int i = 0; i < r; ++i)
      for (int k = 1; k < g.shape.strategy_counts[static_cast<std::size_t>(i)]; ++k) {
        dc.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)].for_each([&](const std::vector<int>& idx, const Rational& c) {
          auto hi = idx, lo = idx;
          hi[static_cast<std::size_t>(i)] = k;
          lo[static_cast<std::size_t>(i)] = 0;
          CHECK(c == g.payoff(i, hi) - g.payoff(i, lo));
        });
      }
  }
}

TEST_CASE("is_tmne on the fixture") {
  Game g = oracle::fixture("sym222.game");
  CHECK(is_tmne(g, same(3, Rational(1, 4))));
  CHECK(is_tmne(g, same(3, Rational(2, 5))));
  CHECK_FALSE(is_tmne(g, same(3, Rational(1, 3))));
  CHECK_FALSE(is_tmne(g, same(3, 0)));
}

TEST_CASE("indifference polynomials are payoff gaps") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 50; ++it) {
    const char* shapes[] = {"2,2", "3,2", "2,2,2", "3,3", "2,3,2"};
    GameShape s = GameShape::parse(shapes[it % 5]);
    Game g = random_game(s, rng());
    MixedProfile p = random_profile(s, rng);
    auto sys = indifference_system(g);
    for (std::size_t q = 0; q < sys.polys.size(); ++q) {
      auto [i, k] = sys.tags[q];
      Rational gap = expected_payoff(g, i, with_pure(p, i, k)) - expected_payoff(g, i, with_pure(p, i, 0));
      CHECK(evaluate(sys.polys[q], p) == gap);
    }
  }
}

TEST_CASE("constant shifts leave the system unchanged") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    Game g = random_game(GameShape::parse("3,2,2"), rng());
    Game h = g;
    int i = static_cast<int>(rng() % 3);
    Rational shift = make_rational(static_cast<long>(rng() % 17) - 8, 3);
    for (auto& x : h.payoffs[static_cast<std::size_t>(i)]) x += shift;
    CHECK(indifference_system(g).polys == indifference_system(h).polys);
  }
}

TEST_CASE("tmne profiles are deviation proof") {
  Game g = oracle::fixture("sym222.game");
  for (Rational p1 : {Rational(1, 4), Rational(2, 5)}) {
    MixedProfile p = same(3, p1);
    REQUIRE(is_tmne(g, p));
    for (int i = 0; i < 3; ++i) {
      Rational base = expected_payoff(g, i, p);
      for (int j = 0; j < 2; ++j) CHECK(expected_payoff(g, i, with_pure(p, i, j)) == base);
    }
  }
}
