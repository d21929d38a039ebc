#include "tmne/essential.hpp"

#include "tmne/bezout.hpp"

#include <numeric>
#include <stdexcept>

namespace tmne {

namespace {

struct Counts {
  int ones = 0;            // members of multidegree (1,...,1)
  std::vector<int> by_zero;  // members d_i, by i
  bool other = false;
};

Counts count_types(const SupportFamily& F) {
  const int r = static_cast<int>(F.dims.size());
  Counts c;
  c.by_zero.assign(static_cast<std::size_t>(r), 0);
  for (const auto& v : F.members) {
    if (static_cast<int>(v.size()) != r) throw std::invalid_argument("member length differs from group count");
    int zeros = 0, where = -1;
    for (int g = 0; g < r; ++g) {
      int e = v[static_cast<std::size_t>(g)];
      if (e != 0 && e != 1) throw std::invalid_argument("member is not in {0,1}^r");
      if (e == 0) ++zeros, where = g;
    }
    if (zeros == 0) ++c.ones;
    else if (zeros == 1) ++c.by_zero[static_cast<std::size_t>(where)];
    else c.other = true;
  }
  return c;
}

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

int lattice_rank(const SupportFamily& F, const std::vector<int>& subset) {
  const std::size_t r = F.dims.size();
  std::vector<bool> covered(r, false);
  for (int k : subset) {
    const auto& v = F.members.at(static_cast<std::size_t>(k));
    for (std::size_t g = 0; g < r; ++g)
      if (v[g]) covered[g] = true;
  }
  int rank = 0;
  for (std::size_t g = 0; g < r; ++g)
    if (covered[g]) rank += F.dims[g];
  return rank;
}

std::string case_label(const SupportFamily& F) {
  const int r = static_cast<int>(F.dims.size());
  const Counts c = count_types(F);
  const int m = total(F.dims);
  const int nm = static_cast<int>(F.members.size());
  auto fail = [] { return std::invalid_argument("family outside the case analysis"); };
  if (c.other) throw fail();

  if (c.ones == nm && nm == m + 1) return "II";

  if (c.ones == 1 && nm == m + 1 && c.by_zero == F.dims) {
    bool condition = true, some_one = false;
    for (int i = 0; i < r; ++i) {
      int mi = F.dims[static_cast<std::size_t>(i)];
      if (mi > m - mi) condition = false;
      if (mi == 1) some_one = true;
    }
    if (condition) return some_one ? "I.b" : "I.a";
    // one group outweighs the rest by one: arises after a discard in I.b
    for (int i = 0; i < r; ++i) {
      int mi = F.dims[static_cast<std::size_t>(i)];
      if (mi == m - mi + 1) return "I.b";
    }
    throw fail();
  }

  if (c.ones == 0 && nm == m + 1) {
    int reduced = -1;
    for (int g = 0; g < r; ++g) {
      auto gs = static_cast<std::size_t>(g);
      if (F.dims[gs] == c.by_zero[gs] - 1) {
        if (reduced >= 0) throw fail();
        reduced = g;
      } else if (F.dims[gs] != c.by_zero[gs]) {
        throw fail();
      }
    }
    if (reduced < 0) throw fail();
    const int cm = total(c.by_zero);
    for (int i = 0; i < r; ++i)
      if (c.by_zero[static_cast<std::size_t>(i)] > cm - c.by_zero[static_cast<std::size_t>(i)]) throw fail();
    if (r == 2) return "III.a";
    if (c.by_zero[static_cast<std::size_t>(reduced)] == 1) return "III.b";
    for (int i = 0; i < r; ++i)
      if (i != reduced && c.by_zero[static_cast<std::size_t>(i)] == cm - c.by_zero[static_cast<std::size_t>(i)])
        return "III.c";
    return "III.d";
  }
  throw fail();
}

EssentialAnalysis essential_subset(const SupportFamily& F) {
  const std::size_t N = F.members.size();
  if (N > 20) throw std::invalid_argument("essential_subset: too many members");
  EssentialAnalysis out;
  const std::uint32_t full = (std::uint32_t{1} << N) - 1;
  std::vector<int> rank(std::size_t{1} << N);
  auto members_of = [&](std::uint32_t mask) {
    std::vector<int> s;
    for (std::size_t k = 0; k < N; ++k)
      if (mask >> k & 1) s.push_back(static_cast<int>(k));
    return s;
  };
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    auto s = members_of(mask);
    rank[mask] = lattice_rank(F, s);
    out.lattice_ranks[s] = rank[mask];
  }
  std::vector<std::uint32_t> found;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int size = __builtin_popcount(mask);
    if (rank[mask] != size - 1) continue;
    bool ok = true;
    for (std::uint32_t sub = (mask - 1) & mask; sub && ok; sub = (sub - 1) & mask)
      if (rank[sub] < __builtin_popcount(sub)) ok = false;
    if (ok) found.push_back(mask);
  }
  if (found.empty()) throw std::invalid_argument("no essential subset");
  out.essential_index_set = members_of(found.front());
  out.is_unique = found.size() == 1;
  out.case_label = case_label(F);
  return out;
}

SupportFamily quasi_equilibrium_family(const std::vector<int>& dims) {
  const int r = static_cast<int>(dims.size());
  SupportFamily F{dims, {d0(r)}};
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < dims[static_cast<std::size_t>(i)]; ++k) F.members.push_back(d_i(r, i));
  return F;
}

namespace {

DegreeSpec spec_of(const std::vector<Multidegree>& members) {
  DegreeSpec spec;
  for (const auto& v : members) {
    bool merged = false;
    for (auto& [w, k] : spec)
      if (w == v) ++k, merged = true;
    if (!merged) spec.emplace_back(v, 1);
  }
  return spec;
}

SupportFamily facet(const SupportFamily& F, int skip_member, int group) {
  SupportFamily out{F.dims, {}};
  --out.dims[static_cast<std::size_t>(group)];
  for (std::size_t k = 0; k < F.members.size(); ++k)
    if (static_cast<int>(k) != skip_member) out.members.push_back(F.members[k]);
  return out;
}

PoissonNode split(const SupportFamily& F);

PoissonNode poisson_node(const SupportFamily& F, const std::string& label, int dist,
                         const std::vector<int>& groups) {
  PoissonNode node;
  node.label = label;
  node.kind = "poisson";
  node.family = F;
  node.distinguished = dist;
  std::vector<Multidegree> sub;
  for (std::size_t k = 0; k < F.members.size(); ++k)
    if (static_cast<int>(k) != dist) {
      node.subsystem.push_back(static_cast<int>(k));
      sub.push_back(F.members[k]);
    }
  node.root_count = bez_number(F.dims, spec_of(sub));
  for (int g : groups) {
    node.facet_groups.push_back(g);
    node.children.push_back(split(facet(F, dist, g)));
  }
  return node;
}

PoissonNode split(const SupportFamily& F) {
  const int r = static_cast<int>(F.dims.size());
  // a group without variables carries no information: drop it
  for (int g = 0; g < r; ++g) {
    if (F.dims[static_cast<std::size_t>(g)] != 0) continue;
    PoissonNode node;
    node.kind = "discard";
    node.family = F;
    try {
      node.label = case_label(F);
    } catch (const std::invalid_argument&) {
      node.label = "reduced";
    }
    SupportFamily child;
    for (int h = 0; h < r; ++h)
      if (h != g) child.dims.push_back(F.dims[static_cast<std::size_t>(h)]);
    for (const auto& v : F.members) {
      Multidegree w;
      for (int h = 0; h < r; ++h)
        if (h != g) w.push_back(v[static_cast<std::size_t>(h)]);
      child.members.push_back(std::move(w));
    }
    node.facet_groups.push_back(g);
    node.children.push_back(split(child));
    return node;
  }

  const std::string label = case_label(F);
  const Counts c = count_types(F);
  if (label == "II") {
    PoissonNode node;
    node.label = label;
    node.kind = "dense";
    node.family = F;
    return node;
  }
  if (label == "III.a") {
    PoissonNode node;
    node.label = label;
    node.kind = "determinant";
    node.family = F;
    node.subsystem = essential_subset(F).essential_index_set;
    return node;
  }
  auto essential_child = [&](const std::string& lab) {
    PoissonNode node;
    node.label = lab;
    node.kind = "essential";
    node.family = F;
    node.subsystem = essential_subset(F).essential_index_set;
    SupportFamily child;
    int zero = -1;
    for (int g = 0; g < r; ++g)
      if (F.members[static_cast<std::size_t>(node.subsystem.front())][static_cast<std::size_t>(g)] == 0) zero = g;
    for (int g = 0; g < r; ++g)
      if (g != zero) child.dims.push_back(F.dims[static_cast<std::size_t>(g)]);
    for (std::size_t k = 0; k < node.subsystem.size(); ++k) child.members.push_back(d0(r - 1));
    node.children.push_back(split(child));
    return node;
  };
  if (label == "III.c") return essential_child(label);
  if (label == "I.a" || label == "I.b") {
    const int m = total(F.dims);
    for (int i = 0; i < r; ++i)
      if (F.dims[static_cast<std::size_t>(i)] == m - F.dims[static_cast<std::size_t>(i)] + 1)
        return essential_child(label);
    int dist = -1;
    for (std::size_t k = 0; k < F.members.size(); ++k)
      if (count_types({F.dims, {F.members[k]}}).ones) dist = static_cast<int>(k);
    std::vector<int> groups(static_cast<std::size_t>(r));
    std::iota(groups.begin(), groups.end(), 0);
    return poisson_node(F, label, dist, groups);
  }
  // III.d (III.b families always have a group without variables)
  int reduced = -1;
  for (int g = 0; g < r; ++g)
    if (F.dims[static_cast<std::size_t>(g)] == c.by_zero[static_cast<std::size_t>(g)] - 1) reduced = g;
  int dist = -1;
  for (std::size_t k = 0; k < F.members.size() && dist < 0; ++k)
    if (F.members[k][static_cast<std::size_t>(reduced)] == 0) dist = static_cast<int>(k);
  std::vector<int> groups;
  for (int g = 0; g < r; ++g)
    if (g != reduced) groups.push_back(g);
  return poisson_node(F, label, dist, groups);
}

}  // namespace

PoissonNode poisson_split(const SupportFamily& F) {
  const std::string label = case_label(F);
  if (label == "II") throw std::invalid_argument("poisson_split: case II is not split");
  return split(F);
}

}  // namespace tmne
