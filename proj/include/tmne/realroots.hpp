#pragma once

#include "tmne/qmatrix.hpp"
#include "tmne/rational.hpp"
#include "tmne/unipoly.hpp"

#include <vector>

namespace tmne {

struct IsolatingInterval {
  Rational lo, hi;  // lo == hi for an exact rational root
  bool multiplicity_free = true;
  bool exact() const { return lo == hi; }
};

// Upper bound on the number of real roots of p in the open interval (a, b),
// by Descartes' rule after the Moebius map onto (0, inf).
int descartes_bound(const UniPoly& p, const Rational& a, const Rational& b);

// Isolating intervals for the real roots of squarefree_part(p), sorted.
// Open intervals have endpoints that are not roots.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p);

// Halves the interval while keeping the root of the square-free p inside.
void refine(const UniPoly& p, IsolatingInterval& iv);
// Refines until the width is at most `width`.
void refine_to(const UniPoly& p, IsolatingInterval& iv, const Rational& width);

// Sign of q at the root of the square-free p isolated by iv (refining iv).
int sign_at_root(const UniPoly& p, IsolatingInterval& iv, const UniPoly& q);

// If the root is rational, returns true and stores it.
bool rational_root(const UniPoly& p, IsolatingInterval& iv, Rational& root);

struct SignedRootCount {
  int pos_count = 0;
  int neg_count = 0;
  std::vector<IsolatingInterval> roots;  // qualifying roots, in increasing order
  std::vector<std::vector<int>> signs;   // per qualifying root, signs of each q
};

SignedRootCount count_real_roots_with_signs(const UniPoly& p, const std::vector<UniPoly>& qs);

// Scaled Hermite matrix p_d^K * [Trace(M_{T^(a+b) q})]_{a,b<d} on Q[T]/(p),
// computed from powers of the multiplication matrix of p_d*T without
// dividing by p_d. K is the even number returned through `K`.
QMatrix scaled_trace_matrix(const UniPoly& p, const UniPoly& q, int* K = nullptr, int K_min = 0);
int hermite_signature(const UniPoly& p, const UniPoly& q);
// Signature of a real symmetric matrix read from the sign changes of its
// characteristic polynomial (Descartes is exact for real-rooted polynomials).
int signature_from_charpoly(const UniPoly& chi);

}  // namespace tmne
