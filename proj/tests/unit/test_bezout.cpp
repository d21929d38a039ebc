#include "tmne/bezout.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <functional>
#include <random>

using namespace tmne;

namespace {

// all dims tuples with r >= 2, every entry >= 1 and total <= max_n
std::vector<std::vector<int>> shapes_up_to(int max_n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (cur.size() >= 2) out.push_back(cur);
    for (int k = 1; k <= left; ++k) {
      cur.push_back(k);
      rec(left - k);
      cur.pop_back();
    }
  };
  rec(max_n);
  return out;
}

std::vector<Multidegree> expand(const DegreeSpec& spec) {
  std::vector<Multidegree> out;
  for (const auto& [d, m] : spec)
    for (int k = 0; k < m; ++k) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("bez_number examples") {
  CHECK(bez_number({1, 1, 1}, {{d_i(3, 0), 1}, {d_i(3, 1), 1}, {d_i(3, 2), 1}}) == 2);
  CHECK(bez_number({2, 2}, {{d_i(2, 0), 2}, {d_i(2, 1), 2}}) == 1);
  CHECK(bez_number({1, 1, 1}, {{d0(3), 1}, {d_i(3, 1), 1}, {d_i(3, 2), 1}}) == 3);
  CHECK_THROWS(bez_number({1, 1}, {{d0(2), 1}}));
}

TEST_CASE("delta examples") {
  CHECK(delta({1, 1, 1}) == 2);
  CHECK(delta({1, 1, 1, 1}) == 9);
  CHECK(delta({2, 2, 2}) == 10);
  for (int k = 1; k <= 5; ++k) CHECK(delta({k, k}) == 1);
  CHECK(delta({2, 1}) == 0);
  CHECK_FALSE(feasible({2, 1}));
  CHECK(feasible({1, 1}));
}

TEST_CASE("delta equals the J_0 enumeration for n <= 8") {
  auto shapes = shapes_up_to(8);
  CHECK(shapes.size() == 247);
  for (const auto& dims : shapes) {
    CAPTURE(dims);
    Integer d = delta(dims);
    CHECK(d == oracle::delta_enumerate(dims));
    CHECK((d > 0) == feasible(dims));
  }
}

TEST_CASE("bez_number equals enumeration on random specs") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 100; ++it) {
    int r = 2 + static_cast<int>(rng() % 3);
    std::vector<int> dims;
    int n = 0;
    for (int g = 0; g < r; ++g) dims.push_back(1 + static_cast<int>(rng() % 2)), n += dims.back();
    DegreeSpec spec;
    for (int k = 0; k < n; ++k) {
      Multidegree v(static_cast<std::size_t>(r));
      for (auto& x : v) x = static_cast<int>(rng() % 2);
      spec.push_back({v, 1});
    }
    CHECK(bez_number(dims, spec) == oracle::bez_enumerate(dims, expand(spec)));
  }
}

TEST_CASE("degree ledger examples") {
  auto L = degree_ledger({1, 1, 1});
  CHECK(L.delta == 2);
  CHECK(L.delta_i == std::vector<Integer>{3, 3, 3});
  CHECK(L.D == 11);
  CHECK(L.N == 3 + 1 + 3 * 4);
  CHECK(L.D <= 9 * L.delta);

  auto M = degree_ledger({2, 2});
  CHECK(M.delta == 1);
  for (int i = 0; i < 2; ++i) {
    std::vector<Multidegree> polys{d0(2)};
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2 - (j == i ? 1 : 0); ++k) polys.push_back(d_i(2, j));
    CHECK(M.delta_i[static_cast<std::size_t>(i)] == oracle::bez_enumerate({2, 2}, polys));
  }
  CHECK(M.D == 1 + 2 * M.delta_i[0] + 2 * M.delta_i[1]);

  auto I = degree_ledger({3, 1});
  CHECK(I.delta == 0);
  CHECK_FALSE(I.feasible);
}

TEST_CASE("ledger bounds on every feasible shape with n <= 10") {
  for (const auto& dims : shapes_up_to(10)) {
    auto L = degree_ledger(dims);
    if (!L.feasible) continue;
    CAPTURE(dims);
    Integer n = 0;
    for (int x : dims) n += x;
    Integer D = L.delta;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      CHECK(L.delta_i[i] <= (dims[i] + 1) * L.delta);
      D += dims[i] * L.delta_i[i];
    }
    CHECK(D == L.D);
    CHECK(L.D <= n * n * L.delta);
  }
}

TEST_CASE("bez_number is additive in the first multidegree") {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 60; ++it) {
    int r = 2 + static_cast<int>(rng() % 3);
    std::vector<int> dims;
    for (int g = 0; g < r; ++g) dims.push_back(1 + static_cast<int>(rng() % 3));
    // rest: the quasi-equilibrium structure with one d_1 removed
    DegreeSpec rest;
    for (int i = 0; i < r; ++i) rest.push_back({d_i(r, i), dims[static_cast<std::size_t>(i)] - (i == 0 ? 1 : 0)});
    Multidegree e1(static_cast<std::size_t>(r), 0);
    e1[0] = 1;
    auto with = [&](const Multidegree& v) {
      DegreeSpec s{{v, 1}};
      s.insert(s.end(), rest.begin(), rest.end());
      return bez_number(dims, s);
    };
    CHECK(with(d0(r)) == with(d_i(r, 0)) + with(e1));
  }
}
