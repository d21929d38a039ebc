#pragma once

#include "tmne/multilinear.hpp"
#include "tmne/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tmne {

struct GameShape {
  std::vector<int> strategy_counts;  // n_i + 1

  GameShape() = default;
  explicit GameShape(std::vector<int> counts);
  int players() const { return static_cast<int>(strategy_counts.size()); }
  int n_i(int i) const { return strategy_counts[static_cast<std::size_t>(i)] - 1; }
  std::vector<int> dims() const;  // (n_1, ..., n_r)
  int n() const;
  std::size_t tensor_size() const;
  // "2,3,2" -> counts; throws std::invalid_argument.
  static GameShape parse(std::string_view text);
  static GameShape from_dims(const std::vector<int>& dims);
  std::string to_string() const;
  friend bool operator==(const GameShape&, const GameShape&) = default;
};

struct Game {
  GameShape shape;
  std::vector<std::vector<Rational>> payoffs;  // payoffs[i][offset(j_1..j_r)]

  std::size_t offset(const std::vector<int>& j) const;
  const Rational& payoff(int i, const std::vector<int>& j) const;
  friend bool operator==(const Game&, const Game&) = default;
};

using MixedProfile = std::vector<std::vector<Rational>>;

// a^(ik) as a MultilinearPoly of multidegree d_i over the full shape.
struct DifferenceCoefficients {
  std::vector<std::vector<MultilinearPoly>> a;  // a[i][k-1]
};

Game load_game(std::string_view bytes);
std::string save_game(const Game& g);
Game load_game_file(const std::string& path);

void validate_profile(const Game& g, const MixedProfile& p);
Rational expected_payoff(const Game& g, int i, const MixedProfile& p);
DifferenceCoefficients difference_coefficients(const Game& g);
MultilinearSystem indifference_system(const Game& g);
bool is_tmne(const Game& g, const MixedProfile& p);

// Integer payoffs drawn uniformly from [lo, hi], deterministic in the seed.
Game random_game(const GameShape& shape, std::uint64_t seed, int lo = -9, int hi = 9);

}  // namespace tmne
