#include "tmne/bezout.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace tmne {

Multidegree d0(int r) { return Multidegree(static_cast<std::size_t>(r), 1); }

Multidegree d_i(int r, int i) {
  Multidegree d = d0(r);
  d.at(static_cast<std::size_t>(i)) = 0;
  return d;
}

Integer bez_number(const std::vector<int>& dims, const DegreeSpec& spec) {
  std::size_t r = dims.size();
  int total = 0, n = 0;
  for (int d : dims) n += d;
  for (const auto& [deg, m] : spec) {
    if (deg.size() != r) throw std::invalid_argument("bez_number: multidegree length mismatch");
    if (m < 0) throw std::invalid_argument("bez_number: negative multiplicity");
    total += m;
  }
  if (total != n) throw std::invalid_argument("bez_number: multiplicity sum mismatch");

  // binomials up to n
  std::vector<std::vector<Integer>> C(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) {
    C[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a) + 1, Integer(1));
    for (int b = 1; b < a; ++b)
      C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          C[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
          C[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
  }

  std::map<std::vector<int>, Integer> states{{dims, Integer(1)}};
  for (const auto& [deg, m] : spec) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [cap, w] : states) {
      // distribute m identical polynomials over the groups
      std::vector<int> c(r, 0);
      std::function<void(std::size_t, int, Integer)> rec = [&](std::size_t g, int left, Integer weight) {
        if (g == r) {
          if (left != 0) return;
          std::vector<int> nc = cap;
          for (std::size_t t = 0; t < r; ++t) nc[t] -= c[t];
          next[nc] += weight;
          return;
        }
        int hi = std::min(left, cap[g]);
        if (deg[g] == 0) hi = 0;
        for (int x = 0; x <= hi; ++x) {
          c[g] = x;
          Integer f = weight * C[static_cast<std::size_t>(left)][static_cast<std::size_t>(x)];
          for (int k = 0; k < x; ++k) f *= deg[g];
          rec(g + 1, left - x, f);
        }
        c[g] = 0;
      };
      rec(0, m, w);
    }
    states = std::move(next);
  }
  auto it = states.find(std::vector<int>(r, 0));
  return it == states.end() ? Integer(0) : it->second;
}

bool feasible(const std::vector<int>& dims) {
  int n = 0;
  for (int d : dims) n += d;
  for (int d : dims)
    if (d > n - d) return false;
  return true;
}

Integer delta(const std::vector<int>& dims) {
  int r = static_cast<int>(dims.size());
  DegreeSpec spec;
  for (int i = 0; i < r; ++i) spec.emplace_back(d_i(r, i), dims[static_cast<std::size_t>(i)]);
  return bez_number(dims, spec);
}

DegreeLedger degree_ledger(const std::vector<int>& dims) {
  int r = static_cast<int>(dims.size());
  DegreeLedger L;
  L.dims = dims;
  L.feasible = feasible(dims);
  L.delta = delta(dims);
  int n = 0;
  for (int d : dims) n += d;
  L.D = L.delta;
  for (int i = 0; i < r; ++i) {
    DegreeSpec spec{{d0(r), 1}};
    for (int j = 0; j < r; ++j) {
      int m = dims[static_cast<std::size_t>(j)] - (j == i ? 1 : 0);
      spec.emplace_back(d_i(r, j), m);
    }
    Integer di = bez_number(dims, spec);
    L.delta_i.push_back(di);
    L.D += dims[static_cast<std::size_t>(i)] * di;
  }
  L.N = n + 1;
  for (int i = 0; i < r; ++i) {
    Integer p = 1;
    for (int t = 0; t < r; ++t)
      if (t != i) p *= dims[static_cast<std::size_t>(t)] + 1;
    L.N += dims[static_cast<std::size_t>(i)] * p;
  }

  if (L.feasible != (L.delta > 0)) throw std::logic_error("degree ledger: feasibility disagrees with delta");
  Integer D2 = L.delta;
  for (int i = 0; i < r; ++i) D2 += dims[static_cast<std::size_t>(i)] * L.delta_i[static_cast<std::size_t>(i)];
  if (D2 != L.D) throw std::logic_error("degree ledger: D != delta + sum n_i delta_i");
  if (L.feasible) {
    for (int i = 0; i < r; ++i)
      if (L.delta_i[static_cast<std::size_t>(i)] > (dims[static_cast<std::size_t>(i)] + 1) * L.delta)
        throw std::logic_error("degree ledger: delta_i > (n_i + 1) delta");
    if (L.D > Integer(n) * n * L.delta) throw std::logic_error("degree ledger: D > n^2 delta");
  }
  return L;
}

}  // namespace tmne
