#pragma once

#include "tmne/eliminant.hpp"
#include "tmne/game.hpp"
#include "tmne/realroots.hpp"
#include "tmne/unipoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tmne {

struct GeometricResolution {
  std::vector<int> sizes;
  LinearForm separating_form;
  UniPoly P;        // primitive, square-free
  UniPoly P_prime;
  std::map<ChartVar, UniPoly> W;  // x_{ij} = W_ij(t) / P'(t) at the roots t of P
  std::size_t quotient_dim = 0;
  int form_attempts = 0;
  std::vector<std::string> provenance;
};

struct SolverOptions {
  EliminantOptions elim;
  int max_form_attempts = 4;  // simple form plus three seeded power forms
};

// x = -D / E' at the roots of E, made polynomial modulo the square-free part.
struct Parametrization {
  UniPoly P;
  std::map<ChartVar, UniPoly> W;
};
Parametrization parametrize(const UniPoly& E, const std::map<ChartVar, UniPoly>& D);

// Composition of F with the parametrization, reduced modulo P.
UniPoly composed_numerator(const MultilinearPoly& F, const GeometricResolution& R);
// Keeps the roots of P whose points solve every polynomial of the system.
void prune(GeometricResolution& R, const MultilinearSystem& sys);
// Exact checks: gcd(P, P') = 1, each composed numerator is 0 mod P and
// l(W) = T P' mod P.
bool verify_resolution(const GeometricResolution& R, const MultilinearSystem& sys);

GeometricResolution resolve_system(const MultilinearSystem& sys, std::uint64_t seed, const SolverOptions& opts = {});
GeometricResolution geometric_resolution(const Game& game, std::uint64_t seed, const SolverOptions& opts = {});

// A profile coordinate: exact, or an enclosing interval [lo, hi].
struct Coordinate {
  bool exact = true;
  Rational value;
  Rational lo, hi;
};

struct EquilibriumRecord {
  IsolatingInterval root;
  bool rational = false;
  Rational t;
  std::vector<std::vector<Coordinate>> profile;
  std::vector<int> signs;  // signs of P' and the W_ij (map order) at the root
};

struct TMNEReport {
  int count = 0;
  std::vector<EquilibriumRecord> equilibria;
};

// Interval enclosures of irrational coordinates are refined below `width`.
TMNEReport extract_tmne(const GeometricResolution& R, const Game& game, const Rational& width = Rational(1, 1000000000));
int count_tmne(const Game& game, std::uint64_t seed, const SolverOptions& opts = {});
// Exact profile when every coordinate is exact.
bool exact_profile(const EquilibriumRecord& e, MixedProfile& out);

struct MaxCertificate {
  Rational S0_value;
  std::map<ChartVar, std::vector<Rational>> charpoly_coeffs;  // S^(h), h = 0..delta-1
  std::map<ChartVar, std::vector<int>> signs;
  bool verdict = false;
  long delta = 0;
  std::string reason;
};

MaxCertificate certify_max(const Game& game, std::uint64_t seed, const SolverOptions& opts = {});
// Same from an existing resolution (count cross-check included).
MaxCertificate certify_from_resolution(const GeometricResolution& R, const Game& game);

}  // namespace tmne
