#pragma once

#include "tmne/macaulay.hpp"
#include "tmne/multilinear.hpp"
#include "tmne/rational.hpp"
#include "tmne/unipoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tmne {

// Coefficients of an affine linear form in the chart variables u_{gj},
// keyed by (0-based group, 1 <= j <= n_g).
using LinearForm = std::map<std::pair<int, int>, Rational>;
using ChartVar = std::pair<int, int>;

class PositiveDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EliminantEngine { NormalForm, Macaulay };

struct EliminantOptions {
  // Group ranking for the monomial order; empty means decreasing n_i, ties by index.
  std::vector<int> group_order;
  EliminantEngine engine = EliminantEngine::NormalForm;
};

struct Eliminant {
  std::vector<std::string> variable_order;
  UniPoly polynomial;
  std::vector<std::string> provenance;
  bool in_ideal = true;
};

std::string chart_var_name(const ChartVar& v);
std::vector<ChartVar> chart_variables(const std::vector<int>& sizes, const std::vector<int>& group_order);
// Parses "2,1,3" into a group ranking (1-based in the text).
std::vector<int> parse_group_order(const std::string& text, int groups);

// Quotient ring data of the affine chart ideal.
struct NormalFormData {
  std::vector<ChartVar> vars;
  bool unit = false;
  std::size_t quotient_dim = 0;
  std::size_t distinct_points = 0;
  std::size_t basis_size = 0;
  UniPoly chi;                // det(T - M_l)
  std::vector<UniPoly> dchi;  // per variable: d/ds det(T - M_l - s M_x) at s = 0
};

// Throws PositiveDimensional when the affine set is infinite.
NormalFormData normal_form_data(const MultilinearSystem& sys, const LinearForm& l, const EliminantOptions& opts);

// E(T) vanishing at l(x) for every common affine root x. The seed drives the
// Macaulay engine's modular choices; the normal-form engine is deterministic.
Eliminant eliminant_with_linear_form(const MultilinearSystem& sys, const LinearForm& l, std::uint64_t seed,
                                     const EliminantOptions& opts = {});

// Normalizes E by its leading coefficient in T. Throws on the zero polynomial.
Eliminant affine_part(const Eliminant& E);

enum class ZeroDimVerdict { ZeroDimensionalOrEmpty, LikelyPositiveDimensional };
const char* to_string(ZeroDimVerdict v);
ZeroDimVerdict zero_dim_test(const MultilinearSystem& sys, int trials, std::uint64_t seed);

// Macaulay-matrix determinant as a function of the F_0 coefficient tensor.
class MacaulayResultant {
 public:
  MacaulayResultant(const MultilinearSystem& sys, std::uint64_t seed);
  const MacaulayPlan& plan() const { return plan_; }
  const std::optional<MacaulaySelection>& selection() const { return sel_; }
  // Picks the square row selection at a + s0 b for a random s0 over F_p.
  // Returns false when the matrix is rank deficient there.
  bool choose_selection(const std::vector<Rational>& a, const std::vector<Rational>& b);
  Rational det(const std::vector<Rational>& f0) const;
  // det(a + s b) as a polynomial in s (chooses a selection if none yet).
  UniPoly along_line(const std::vector<Rational>& a, const std::vector<Rational>& b);

 private:
  MultilinearSystem sys_;
  std::vector<std::vector<Rational>> coeffs_;
  MacaulayPlan plan_;
  std::optional<MacaulaySelection> sel_;
  std::mt19937_64 rng_;
};

// Tensor of homogenize_linear_form(sizes, A0, l).
std::vector<Rational> f0_tensor(const std::vector<int>& sizes, const Rational& A0, const LinearForm& l);

}  // namespace tmne
