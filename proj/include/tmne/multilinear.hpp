#pragma once

#include "tmne/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace tmne {

using Multidegree = std::vector<int>;
// Per group a coordinate vector: projective (length size) or affine (size-1).
using GroupedPoint = std::vector<std::vector<Rational>>;

// Polynomial of degree 0 or 1 in each group of variables x_{g,0..size_g-1}.
// The dense coefficient tensor is indexed by one variable index per group of
// degree 1, row-major with the last such group fastest.
class MultilinearPoly {
 public:
  MultilinearPoly() = default;
  MultilinearPoly(std::vector<int> sizes, Multidegree deg);
  MultilinearPoly(std::vector<int> sizes, Multidegree deg, std::vector<Rational> coeffs);

  const std::vector<int>& sizes() const { return sizes_; }
  const Multidegree& multidegree() const { return deg_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::vector<Rational>& coeffs() { return coeffs_; }
  int groups() const { return static_cast<int>(sizes_.size()); }
  bool is_zero() const;

  // Offset of a full index vector (entries for degree-0 groups are ignored).
  std::size_t offset(const std::vector<int>& idx) const;
  Rational& at(const std::vector<int>& idx) { return coeffs_[offset(idx)]; }
  const Rational& at(const std::vector<int>& idx) const { return coeffs_[offset(idx)]; }
  // Calls f(idx, coeff) for every tensor entry; idx[g] = -1 for degree-0 groups.
  template <class F>
  void for_each(F&& f) const;

  friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
    return a.sizes_ == b.sizes_ && a.deg_ == b.deg_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<int> sizes_;
  Multidegree deg_;
  std::vector<Rational> coeffs_;
};

struct MultilinearSystem {
  std::vector<int> sizes;                // n_i + 1 per group
  std::vector<MultilinearPoly> polys;
  std::vector<std::pair<int, int>> tags;  // (player i, strategy k) per polynomial, 0-based i, 1-based k
};

Rational evaluate(const MultilinearPoly& F, const GroupedPoint& x);
// Evaluation in the chart x_{g0} = 1; u[g] has length sizes[g]-1.
Rational evaluate_affine(const MultilinearPoly& F, const GroupedPoint& u);

// constant * prod x_{g0} + sum coeff_{ij} x_{ij} prod_{t != i} x_{t0}.
// Keys are (group, j) with 0-based group and 1 <= j < sizes[group].
MultilinearPoly homogenize_linear_form(const std::vector<int>& sizes, const Rational& constant,
                                       const std::map<std::pair<int, int>, Rational>& coeffs);

// Sets the last coordinate of `group` to zero: the tensor is sliced and the
// group loses one variable.
MultilinearPoly facet_restriction(const MultilinearPoly& F, int group);

// Sets x_{g0} = 1. The result keeps the tensor layout; an index 0 in a group
// stands for the constant 1 of that group, index j >= 1 for u_{gj}.
struct AffinePoly {
  MultilinearPoly tensor;
};
AffinePoly affine_chart(const MultilinearPoly& F);
Rational evaluate(const AffinePoly& F, const GroupedPoint& u);

template <class F>
void MultilinearPoly::for_each(F&& f) const {
  int r = groups();
  std::vector<int> idx(static_cast<std::size_t>(r), -1);
  for (int g = 0; g < r; ++g)
    if (deg_[static_cast<std::size_t>(g)] == 1) idx[static_cast<std::size_t>(g)] = 0;
  for (std::size_t pos = 0; pos < coeffs_.size(); ++pos) {
    f(static_cast<const std::vector<int>&>(idx), coeffs_[pos]);
    for (int g = r - 1; g >= 0; --g) {
      auto gs = static_cast<std::size_t>(g);
      if (deg_[gs] != 1) continue;
      if (++idx[gs] < sizes_[gs]) break;
      idx[gs] = 0;
    }
  }
}

}  // namespace tmne
