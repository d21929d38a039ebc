#pragma once

#include "tmne/multilinear.hpp"
#include "tmne/rational.hpp"

#include <utility>
#include <vector>

namespace tmne {

using DegreeSpec = std::vector<std::pair<Multidegree, int>>;  // (multidegree, multiplicity)

// d_0 = (1,...,1) and d_i = d_0 with a 0 in slot i (0-based i).
Multidegree d0(int r);
Multidegree d_i(int r, int i);

// Multihomogeneous Bezout number for dims (n_1..n_r), by a DP over the
// remaining capacity of each group.
Integer bez_number(const std::vector<int>& dims, const DegreeSpec& spec);

bool feasible(const std::vector<int>& dims);
Integer delta(const std::vector<int>& dims);

struct DegreeLedger {
  std::vector<int> dims;
  Integer delta;
  std::vector<Integer> delta_i;
  Integer D;
  Integer N;
  bool feasible = false;
};

// Throws std::logic_error if an internal invariant fails.
DegreeLedger degree_ledger(const std::vector<int>& dims);

}  // namespace tmne
