#pragma once

#include "tmne/multilinear.hpp"
#include "tmne/qmatrix.hpp"
#include "tmne/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace tmne {

// ---- arithmetic modulo a word-size prime ----
struct ModP {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a + b >= p ? a + b - p : a + b; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  // nullopt when p divides the denominator
  std::optional<std::uint64_t> reduce(const Rational& q) const;
};

// Random prime in [2^60, 2^61).
std::uint64_t random_prime(std::mt19937_64& rng);

// Incrementally maintained row echelon basis over F_p.
class IncrementalRank {
 public:
  IncrementalRank(ModP F, std::size_t cols) : F_(F), cols_(cols) {}
  // Reduces v by the basis; if nonzero, adds it and returns true.
  bool insert(std::vector<std::uint64_t> v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  ModP F_;
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> piv_;
};

// Row patterns of the multihomogeneous Macaulay matrix at multidegree d.
// Columns are the monomials of multidegree d; a row is a polynomial times a
// monomial multiplier. An entry stores (column, position in the coefficient
// tensor), so the same plan serves every coefficient specialization.
struct MacaulayPlan {
  struct Row {
    int poly;  // index in the system, or -1 for F_0
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
  };
  std::vector<int> sizes;
  std::vector<int> d;
  std::size_t ncols = 0;
  std::vector<Row> f_rows;
  std::vector<Row> f0_rows;
};

MacaulayPlan make_macaulay_plan(const std::vector<int>& sizes, const std::vector<Multidegree>& degs,
                                const std::vector<int>& d);

struct MacaulayDegree {
  std::vector<int> d;
  std::size_t ncols = 0;
  long hilbert = 0;  // HF(d) = HF(d - 1) for a random system
};

// Smallest multidegree d (by column count) with HF(d) = HF(d - (1..1)) =
// delta for a random system of the quasi-equilibrium structure, and a full
// rank Macaulay matrix once F_0 rows are appended. Cached per shape.
MacaulayDegree macaulay_degree(const std::vector<int>& sizes);

// Dense rows over F_p for the given coefficient tensors.
std::vector<std::uint64_t> dense_row_mod(const MacaulayPlan::Row& row, const std::vector<Rational>& coeffs,
                                         std::size_t ncols, const ModP& F, bool* ok);
std::vector<std::uint64_t> dense_row_mod(const MacaulayPlan::Row& row, const std::vector<std::uint64_t>& coeffs,
                                         std::size_t ncols);

// A square row selection: `f_sel` indexes plan.f_rows, `f0_sel` plan.f0_rows.
struct MacaulaySelection {
  std::vector<std::size_t> f_sel;
  std::vector<std::size_t> f0_sel;
};

// Greedy selection at a specialization given over F_p: system coefficient
// tensors (one per polynomial) and the F_0 tensor. Returns nullopt when the
// full matrix is rank deficient there.
std::optional<MacaulaySelection> select_square(const MacaulayPlan& plan,
                                               const std::vector<std::vector<std::uint64_t>>& sys,
                                               const std::vector<std::uint64_t>& f0, const ModP& F);

// Exact square matrix for a selection and rational coefficients.
QMatrix square_matrix(const MacaulayPlan& plan, const MacaulaySelection& sel,
                      const std::vector<std::vector<Rational>>& sys, const std::vector<Rational>& f0);
// Same layout with only the F_0 rows filled from `f0` (system rows zero):
// the derivative of the square matrix along an F_0 coefficient direction.
QMatrix square_matrix_f0_only(const MacaulayPlan& plan, const MacaulaySelection& sel,
                              const std::vector<Rational>& f0);

}  // namespace tmne
