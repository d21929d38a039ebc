#pragma once

#include "tmne/multilinear.hpp"
#include "tmne/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace tmne {

// Supports of dehomogenized polynomials: members are multidegrees in {0,1}^r
// over groups with dims[g] affine variables each.
struct SupportFamily {
  std::vector<int> dims;
  std::vector<Multidegree> members;
};

struct EssentialAnalysis {
  std::vector<int> essential_index_set;
  bool is_unique = false;
  std::map<std::vector<int>, int> lattice_ranks;
  std::string case_label;  // I.a, I.b, II, III.a, III.b, III.c, III.d
  std::string major() const { return case_label.substr(0, case_label.find('.')); }
};

// Rank of the lattice spanned by the Minkowski sum of the chosen supports.
int lattice_rank(const SupportFamily& family, const std::vector<int>& subset);

// Case label of the recursion; throws std::invalid_argument when the family
// fits none of the cases.
std::string case_label(const SupportFamily& family);

// Brute force over subsets; throws std::invalid_argument if none is essential.
EssentialAnalysis essential_subset(const SupportFamily& family);

// Family of the quasi-equilibrium system with F_0 appended (member 0).
SupportFamily quasi_equilibrium_family(const std::vector<int>& dims);

struct PoissonNode {
  std::string label;
  // poisson: product of the distinguished member over the subsystem's roots
  // times the facet children; determinant: square linear leaf; discard: a
  // group without variables dropped; essential: the unique essential
  // subfamily is taken; dense: all members of multidegree (1,...,1).
  std::string kind;
  SupportFamily family;
  int distinguished = -1;
  std::vector<int> subsystem;
  Integer root_count = 0;
  std::vector<int> facet_groups;  // group reduced in each child (poisson only)
  std::vector<PoissonNode> children;
};

// Throws std::invalid_argument for families the recursion does not split
// (case II or unclassified).
PoissonNode poisson_split(const SupportFamily& family);

}  // namespace tmne
