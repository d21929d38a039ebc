#include "tmne/multilinear.hpp"

#include <stdexcept>

namespace tmne {

namespace {

std::size_t tensor_size(const std::vector<int>& sizes, const Multidegree& deg) {
  std::size_t n = 1;
  for (std::size_t g = 0; g < sizes.size(); ++g)
    if (deg[g] == 1) n *= static_cast<std::size_t>(sizes[g]);
  return n;
}

}  // namespace

MultilinearPoly::MultilinearPoly(std::vector<int> sizes, Multidegree deg)
    : sizes_(std::move(sizes)), deg_(std::move(deg)) {
  if (sizes_.size() != deg_.size()) throw std::invalid_argument("multidegree length mismatch");
  for (std::size_t g = 0; g < sizes_.size(); ++g) {
    if (sizes_[g] < 1) throw std::invalid_argument("group size must be >= 1");
    if (deg_[g] != 0 && deg_[g] != 1) throw std::invalid_argument("multidegree entries must be 0 or 1");
  }
  coeffs_.assign(tensor_size(sizes_, deg_), Rational(0));
}

MultilinearPoly::MultilinearPoly(std::vector<int> sizes, Multidegree deg, std::vector<Rational> coeffs)
    : MultilinearPoly(std::move(sizes), std::move(deg)) {
  if (coeffs.size() != coeffs_.size()) throw std::invalid_argument("coefficient tensor size mismatch");
  coeffs_ = std::move(coeffs);
}

bool MultilinearPoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

std::size_t MultilinearPoly::offset(const std::vector<int>& idx) const {
  if (idx.size() != sizes_.size()) throw std::invalid_argument("index length mismatch");
  std::size_t off = 0;
  for (std::size_t g = 0; g < sizes_.size(); ++g) {
    if (deg_[g] != 1) continue;
    if (idx[g] < 0 || idx[g] >= sizes_[g]) throw std::out_of_range("tensor index out of range");
    off = off * static_cast<std::size_t>(sizes_[g]) + static_cast<std::size_t>(idx[g]);
  }
  return off;
}

Rational evaluate(const MultilinearPoly& F, const GroupedPoint& x) {
  if (x.size() != F.sizes().size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t g = 0; g < x.size(); ++g)
    if (static_cast<int>(x[g].size()) != F.sizes()[g]) throw std::invalid_argument("dimension mismatch");
  Rational acc = 0;
  F.for_each([&](const std::vector<int>& idx, const Rational& c) {
    if (sgn(c) == 0) return;
    Rational t = c;
    for (std::size_t g = 0; g < idx.size(); ++g)
      if (idx[g] >= 0) t *= x[g][static_cast<std::size_t>(idx[g])];
    acc += t;
  });
  return acc;
}

Rational evaluate_affine(const MultilinearPoly& F, const GroupedPoint& u) {
  GroupedPoint x(u.size());
  for (std::size_t g = 0; g < u.size(); ++g) {
    x[g].push_back(1);
    x[g].insert(x[g].end(), u[g].begin(), u[g].end());
  }
  return evaluate(F, x);
}

MultilinearPoly homogenize_linear_form(const std::vector<int>& sizes, const Rational& constant,
                                       const std::map<std::pair<int, int>, Rational>& coeffs) {
  Multidegree ones(sizes.size(), 1);
  MultilinearPoly F(sizes, ones);
  std::vector<int> idx(sizes.size(), 0);
  F.at(idx) = constant;
  for (const auto& [key, c] : coeffs) {
    auto [g, j] = key;
    if (g < 0 || g >= static_cast<int>(sizes.size()) || j < 1 || j >= sizes[static_cast<std::size_t>(g)])
      throw std::out_of_range("linear form index out of range");
    std::vector<int> k(sizes.size(), 0);
    k[static_cast<std::size_t>(g)] = j;
    F.at(k) = c;
  }
  return F;
}

MultilinearPoly facet_restriction(const MultilinearPoly& F, int group) {
  auto gs = static_cast<std::size_t>(group);
  if (group < 0 || gs >= F.sizes().size()) throw std::out_of_range("facet restriction: bad group");
  if (F.sizes()[gs] <= 1) throw std::invalid_argument("facet restriction: group of size 1 cannot shrink");
  std::vector<int> sizes = F.sizes();
  sizes[gs] -= 1;
  MultilinearPoly R(sizes, F.multidegree());
  int last = F.sizes()[gs] - 1;
  F.for_each([&](const std::vector<int>& idx, const Rational& c) {
    if (F.multidegree()[gs] == 1 && idx[gs] == last) return;
    R.at(idx) = c;
  });
  return R;
}

AffinePoly affine_chart(const MultilinearPoly& F) { return {F}; }

Rational evaluate(const AffinePoly& F, const GroupedPoint& u) { return evaluate_affine(F.tensor, u); }

}  // namespace tmne
