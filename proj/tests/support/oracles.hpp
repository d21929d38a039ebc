#pragma once

// Independent oracles for the tests. None of them calls the elimination,
// resolution or root-counting code under test.

#include "tmne/essential.hpp"
#include "tmne/game.hpp"
#include "tmne/multilinear.hpp"
#include "tmne/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace oracle {

using tmne::Integer;
using tmne::Rational;

// Number of maps from polynomials to groups (a polynomial may go to group g
// only if its multidegree has a 1 there) hitting group g exactly dims[g] times.
Integer bez_enumerate(const std::vector<int>& dims, const std::vector<tmne::Multidegree>& polys);
// The J_0 enumeration for the quasi-equilibrium structure.
Integer delta_enumerate(const std::vector<int>& dims);

// Rank of the lattice spanned by differences of points of the Minkowski sum.
int lattice_rank_generators(const tmne::SupportFamily& F, const std::vector<int>& subset);

// Interval Newton (Krawczyk) count of totally mixed equilibria in
// probability coordinates.
struct NumericCount {
  int count = 0;
  bool decided = false;
  std::string detail;
  std::vector<std::vector<double>> points;  // midpoints of the verified boxes
};
NumericCount numeric_tmne_count(const tmne::Game& game);

// Exact branching solver for small affine systems built from products of
// linear factors. Returns the chart points with nonsingular Jacobian.
// Variables are ordered group by group, u_{g,1..n_g}.
using Point = std::vector<Rational>;
std::vector<Point> isolated_points(const tmne::MultilinearSystem& sys);

// Game whose indifference polynomials are the given affine tensors:
// payoff 0 for strategy 0 and a^{ik} for strategy k.
tmne::Game game_from_system(const tmne::MultilinearSystem& sys);

tmne::Game fixture(const std::string& name);

}  // namespace oracle
