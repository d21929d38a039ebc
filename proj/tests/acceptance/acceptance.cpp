// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include "tmne/bezout.hpp"
#include "tmne/deformation.hpp"
#include "tmne/eliminant.hpp"
#include "tmne/essential.hpp"
#include "tmne/realroots.hpp"
#include "tmne/solver.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace tmne;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  // records the first failure only
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what << "; ";
    ok = ok && cond;
  }
};

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

std::string str(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Game two_by_two(std::vector<long> p1, std::vector<long> p2) {
  Game g;
  g.shape = GameShape({2, 2});
  g.payoffs.resize(2);
  for (long x : p1) g.payoffs[0].emplace_back(x);
  for (long x : p2) g.payoffs[1].emplace_back(x);
  return g;
}

SupportFamily family(std::vector<int> dims, const std::vector<std::pair<Multidegree, int>>& spec) {
  SupportFamily F{std::move(dims), {}};
  for (const auto& [v, k] : spec)
    for (int t = 0; t < k; ++t) F.members.push_back(v);
  return F;
}

// First 50 seeds per shape whose random game has deg P = delta.
const std::vector<std::pair<const char*, std::vector<int>>> kCorpus = {
    {"2,2", {1,  2,  3,  4,  5,  6,  7,  8,  9,  11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 27,
             28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 41, 42, 43, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55}},
    {"2,2,2", {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26,
               27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 45, 46, 47, 48, 49, 50, 51, 52}},
    {"2,2,2,2", {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25,
                 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50}},
    {"3,3", {1,  2,  3,  4,  5,  6,  7,  8,  9,  11, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27,
             28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53}},
    {"3,3,3", {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25,
               26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50}},
};

struct CorpusEntry {
  std::string label;
  Game game;
  GeometricResolution R;
  int count = 0;
};

std::vector<CorpusEntry> corpus;  // filled by criterion 4, reused by 6

void criterion1(Outcome& o) {
  o.expect(delta({1, 1, 1}) == 2, "delta(1,1,1)");
  o.expect(delta({1, 1, 1, 1}) == 9, "delta(1,1,1,1)");
  o.expect(delta({2, 2, 2}) == 10, "delta(2,2,2)");
  for (int k = 1; k <= 5; ++k) o.expect(delta({k, k}) == 1, "delta(k,k)");
  o.expect(delta({2, 1}) == 0 && !feasible({2, 1}), "dims (2,1) should be infeasible");
  int n = 0;
  for (const auto& dims : shapes_up_to(8)) {
    o.expect(delta(dims) == oracle::delta_enumerate(dims), "enumeration mismatch at dims " + str(dims));
    ++n;
  }
  o.why << n << " shapes enumerated";
}

void criterion2(Outcome& o) {
  auto L = degree_ledger({1, 1, 1});
  o.expect(L.delta_i == std::vector<Integer>{3, 3, 3}, "delta_i at (1,1,1)");
  o.expect(L.D == 11, "D at (1,1,1)");
  int n_feasible = 0;
  for (const auto& dims : shapes_up_to(10)) {
    auto M = degree_ledger(dims);
    if (!M.feasible) continue;
    ++n_feasible;
    Integer n = 0;
    for (int x : dims) n += x;
    for (std::size_t i = 0; i < dims.size(); ++i)
      o.expect(M.delta_i[i] <= (dims[i] + 1) * M.delta, "delta_i bound at dims " + str(dims));
    o.expect(M.D <= n * n * M.delta, "D bound at dims " + str(dims));
  }
  o.why << n_feasible << " feasible shapes";
}

void criterion3(Outcome& o) {
  Game g = oracle::fixture("sym222.game");
  auto R = geometric_resolution(g, 1);
  o.expect(R.separating_form == LinearForm{{{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1}}, "separating form is not the sum");
  const Rational c = R.P.lc();
  o.expect(R.P == UniPoly{Rational(2), Rational(-3), Rational(1)} * c, "P");
  o.expect(R.W.size() == 3, "W size");
  for (const auto& [v, w] : R.W)
    o.expect(w == UniPoly{Rational(-4, 3), Rational(1)} * c, "W_" + chart_var_name(v));
  auto rep = extract_tmne(R, g);
  o.expect(rep.count == 2 && count_tmne(g, 1) == 2, "count");
  std::vector<MixedProfile> want;
  for (Rational q : {Rational(1, 4), Rational(2, 5)}) want.push_back(MixedProfile(3, std::vector<Rational>{1 - q, q}));
  for (std::size_t k = 0; k < rep.equilibria.size() && k < 2; ++k) {
    MixedProfile p;
    o.expect(exact_profile(rep.equilibria[k], p), "irrational equilibrium");
    o.expect(p == want[k], "equilibrium values");
    o.expect(is_tmne(g, p), "is_tmne");
  }
  o.why << "P = " << R.P.to_string();
}

void criterion4(Outcome& o) {
  int games = 0;
  for (const auto& [shape, seeds] : kCorpus) {
    GameShape s = GameShape::parse(shape);
    const Integer d = delta(s.dims());
    for (int seed : seeds) {
      std::string label = std::string(shape) + " seed " + std::to_string(seed);
      CorpusEntry e{label, random_game(s, static_cast<std::uint64_t>(seed)), {}, 0};
      e.R = geometric_resolution(e.game, 1);
      e.count = extract_tmne(e.R, e.game).count;
      o.expect(e.R.P.degree() == d, "deg P != delta on " + label);
      auto num = oracle::numeric_tmne_count(e.game);
      o.expect(num.decided, "oracle undecided on " + label + ": " + num.detail);
      o.expect(num.count == e.count,
               "count " + std::to_string(e.count) + " vs oracle " + std::to_string(num.count) + " on " + label);
      corpus.push_back(std::move(e));
      ++games;
    }
  }
  o.why << games << " games";
}

void criterion5(Outcome& o) {
  std::mt19937_64 rng(2024);
  auto random_poly = [&](int deg) {
    std::vector<Rational> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(static_cast<long>(rng() % 19) - 9);
    if (c.back() == 0) c.back() = 1;
    return UniPoly(std::move(c));
  };
  int shared = 0;
  for (int it = 0; it < 100; ++it) {
    UniPoly p = squarefree_part(random_poly(1 + static_cast<int>(rng() % 12)));
    UniPoly q = random_poly(static_cast<int>(rng() % 13));
    if (it % 5 == 0) {
      // a common rational root, where q has sign 0
      UniPoly r{Rational(static_cast<long>(rng() % 7) - 3), Rational(1)};
      p = squarefree_part(p * r);
      q = q * r;
    }
    int signed_count = 0;
    for (auto& iv : isolate_real_roots(p)) {
      int sg = sign_at_root(p, iv, q);
      signed_count += sg;
      shared += sg == 0;
    }
    o.expect(hermite_signature(p, q) == signed_count, "mismatch at pair " + std::to_string(it));
  }
  o.why << "100 pairs, " << shared << " roots with sign 0";
}

void criterion6(Outcome& o) {
  auto sym = certify_max(oracle::fixture("sym222.game"), 1);
  o.expect(sym.verdict, "sym222 not certified: " + sym.reason);
  auto mp = certify_max(two_by_two({1, -1, -1, 1}, {-1, 1, 1, -1}), 1);
  o.expect(mp.verdict && mp.delta == 1, "matching pennies not certified: " + mp.reason);
  auto dom = certify_max(two_by_two({1, 1, 0, 0}, {1, 0, 0, 1}), 1);
  o.expect(!dom.verdict, "dominant-strategy game certified");
  o.expect(!corpus.empty(), "corpus of criterion 4 unavailable");
  int checked = 0, certified = 0;
  for (const auto& e : corpus) {
    auto c = certify_from_resolution(e.R, e.game);
    if (e.R.P.degree() != c.delta || c.S0_value == 0) continue;
    ++checked;
    certified += c.verdict;
    o.expect(c.verdict == (e.count == c.delta), "verdict disagrees with the count on " + e.label);
  }
  o.why << checked << " corpus games, " << certified << " certified";
}

bool contains(const GeometricResolution& R, const oracle::Point& p) {
  std::map<ChartVar, Rational> at;
  std::size_t k = 0;
  for (int g = 0; g < static_cast<int>(R.sizes.size()); ++g)
    for (int j = 1; j < R.sizes[g]; ++j) at[{g, j}] = p.at(k++);
  Rational t = 0;
  for (const auto& [v, c] : R.separating_form) t += c * at.at(v);
  if (R.P(t) != 0) return false;
  Rational d = R.P_prime(t);
  for (const auto& [v, w] : R.W)
    if (w(t) != at.at(v) * d) return false;
  return true;
}

void criterion7(Outcome& o) {
  Game red = oracle::fixture("sym222_redundant.game");
  o.expect(zero_dim_test(indifference_system(red), 40, 1) == ZeroDimVerdict::LikelyPositiveDimensional,
           "redundant fixture judged zero-dimensional");
  int points = 0;
  for (const char* name : {"sym222_redundant.game", "glued_point_line.game", "glued_outside_point.game"}) {
    Game g = oracle::fixture(name);
    auto sys = indifference_system(g);
    auto iso = isolated_quasi_equilibria(g, 1);
    const auto& R = iso.trace.pruned;
    o.expect(verify_resolution(R, sys), std::string("candidate off the variety in ") + name);
    for (const auto& p : oracle::isolated_points(sys)) {
      o.expect(contains(R, p), std::string("isolated point missing in ") + name);
      ++points;
    }
    o.why << name << ": " << R.P.degree() << " candidates; ";
  }
  o.why << points << " oracle points";
}

void criterion8(Outcome& o) {
  auto qe = essential_subset(quasi_equilibrium_family({1, 1, 1}));
  o.expect(qe.essential_index_set == std::vector<int>{0, 1, 2, 3} && qe.major() == "I", "full family for (1,1,1)");
  for (int M = 2; M <= 4; ++M) {
    auto a = essential_subset(family({M, M - 1}, {{{0, 1}, M}, {{1, 0}, M}}));
    std::vector<int> block;
    for (int k = 0; k < M; ++k) block.push_back(k);
    o.expect(a.case_label == "III.a" && a.essential_index_set == block, "III.a (0,1)-block");
  }
  auto c = essential_subset(family({1, 1, 3}, {{d_i(3, 0), 2}, {d_i(3, 1), 1}, {d_i(3, 2), 3}}));
  o.expect(c.case_label == "III.c" && c.essential_index_set == std::vector<int>{3, 4, 5}, "III.c d_i block");
  int ranks = 0;
  for (const auto& dims : shapes_up_to(5)) {
    if (!feasible(dims)) continue;
    auto F = quasi_equilibrium_family(dims);
    auto ea = essential_subset(F);
    for (const auto& [subset, rank] : ea.lattice_ranks) {
      o.expect(rank == oracle::lattice_rank_generators(F, subset), "lattice rank at dims " + str(dims));
      ++ranks;
    }
  }
  o.why << ranks << " subset ranks";
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(99);
  auto shape = GameShape::parse("2,2,2");
  auto tensor = [&] {
    std::vector<Rational> v;
    for (std::size_t k = 0; k < shape.tensor_size(); ++k) v.emplace_back(static_cast<long>(rng() % 41) - 20);
    return v;
  };
  for (int it = 0; it < 5; ++it) {
    MacaulayResultant R(indifference_system(random_game(shape, rng())), rng());
    auto a = tensor(), b = tensor();
    o.expect(R.along_line(a, b).degree() == 2, "degree along the line is not 2");
  }
  o.why << "5 random systems";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    void (*run)(Outcome&);
  };
  const Criterion all[] = {
      {1, "delta values and enumeration", criterion1},
      {2, "degree ledger bounds", criterion2},
      {3, "fixture solve", criterion3},
      {4, "corpus agrees with the numeric oracle", criterion4},
      {5, "Hermite signature vs isolation", criterion5},
      {6, "maximality certificates", criterion6},
      {7, "degenerate path", criterion7},
      {8, "essential subsets and lattice ranks", criterion8},
      {9, "F_0 degree along a line", criterion9},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%s; %.1fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.title, o.why.str().c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
