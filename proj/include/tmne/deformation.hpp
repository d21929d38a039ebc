#pragma once

#include "tmne/eliminant.hpp"
#include "tmne/solver.hpp"

#include <cstdint>
#include <vector>

namespace tmne {

struct DeformationPass {
  std::vector<std::vector<Rational>> b;  // direction: coefficient tensors per polynomial
  int epsilon = 0;
  UniPoly candidate_P;                    // lowest tau-order coefficient, in T
  GeometricResolution pruned;             // candidates solving the undeformed system
  int b_attempts = 0;
};

struct DeformationTrace {
  ZeroDimVerdict verdict = ZeroDimVerdict::ZeroDimensionalOrEmpty;
  // epsilon and candidate_P of the first direction (epsilon = 0 when no deformation ran)
  int epsilon = 0;
  UniPoly candidate_P;
  std::vector<DeformationPass> passes;  // empty when no deformation was needed
  GeometricResolution pruned;           // intersection over the passes
};

struct IsolatedResult {
  DeformationTrace trace;
  TMNEReport report;  // upper bound for the isolated totally mixed equilibria
};

// Candidate set containing every isolated affine solution of the system.
DeformationTrace isolated_solutions(const MultilinearSystem& sys, std::uint64_t seed, int trials = 40);
IsolatedResult isolated_quasi_equilibria(const Game& game, std::uint64_t seed, int trials = 40);

}  // namespace tmne
