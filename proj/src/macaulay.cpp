#include "tmne/macaulay.hpp"

#include "tmne/bezout.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tmne {

std::uint64_t ModP::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> ModP::reduce(const Rational& q) const {
  Integer pp;
  mpz_set_ui(pp.get_mpz_t(), static_cast<unsigned long>(p));
  Integer num = q.get_num() % pp;
  if (num < 0) num += pp;
  Integer den = q.get_den() % pp;
  if (den == 0) return std::nullopt;
  auto n = static_cast<std::uint64_t>(mpz_get_ui(num.get_mpz_t()));
  auto d = static_cast<std::uint64_t>(mpz_get_ui(den.get_mpz_t()));
  return mul(n, inv(d));
}

std::uint64_t random_prime(std::mt19937_64& rng) {
  std::uint64_t start = (std::uint64_t{1} << 60) | (rng() & ((std::uint64_t{1} << 60) - 1));
  Integer s;
  mpz_set_ui(s.get_mpz_t(), static_cast<unsigned long>(start));
  Integer q;
  mpz_nextprime(q.get_mpz_t(), s.get_mpz_t());
  return static_cast<std::uint64_t>(mpz_get_ui(q.get_mpz_t()));
}

bool IncrementalRank::insert(std::vector<std::uint64_t> v) {
  if (rows_.size() == cols_) return false;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint64_t c = v[piv_[k]];
    if (!c) continue;
    const auto& b = rows_[k];
    for (std::size_t j = piv_[k]; j < cols_; ++j)
      if (b[j]) v[j] = F_.sub(v[j], F_.mul(c, b[j]));
  }
  std::size_t pc = 0;
  while (pc < cols_ && !v[pc]) ++pc;
  if (pc == cols_) return false;
  std::uint64_t s = F_.inv(v[pc]);
  for (std::size_t j = pc; j < cols_; ++j)
    if (v[j]) v[j] = F_.mul(v[j], s);
  rows_.push_back(std::move(v));
  piv_.push_back(pc);
  return true;
}

namespace {

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

// All exponent vectors of total degree e in s variables, lexicographic.
std::vector<std::vector<int>> compositions(int s, int e) {
  std::vector<std::vector<int>> out;
  if (e < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(s), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == s - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, e);
  return out;
}

}  // namespace

MacaulayPlan make_macaulay_plan(const std::vector<int>& sizes, const std::vector<Multidegree>& degs,
                                const std::vector<int>& d) {
  const int r = static_cast<int>(sizes.size());
  MacaulayPlan plan;
  plan.sizes = sizes;
  plan.d = d;
  // per group: monomials of degree d_g (columns) and d_g - 1, and x_j * m maps
  std::vector<std::vector<std::vector<int>>> top(r), low(r);
  std::vector<std::vector<std::vector<std::uint32_t>>> mulx(r);
  std::vector<std::size_t> stride(r, 1);
  for (int g = 0; g < r; ++g) {
    auto gs = static_cast<std::size_t>(g);
    top[gs] = compositions(sizes[gs], d[gs]);
    low[gs] = compositions(sizes[gs], d[gs] - 1);
    std::map<std::vector<int>, std::uint32_t> index;
    for (std::size_t k = 0; k < top[gs].size(); ++k) index[top[gs][k]] = static_cast<std::uint32_t>(k);
    mulx[gs].resize(low[gs].size());
    for (std::size_t m = 0; m < low[gs].size(); ++m) {
      for (int j = 0; j < sizes[gs]; ++j) {
        auto e = low[gs][m];
        ++e[static_cast<std::size_t>(j)];
        mulx[gs][m].push_back(index.at(e));
      }
    }
  }
  plan.ncols = 1;
  for (int g = r - 1; g >= 0; --g) {
    stride[static_cast<std::size_t>(g)] = plan.ncols;
    plan.ncols *= top[static_cast<std::size_t>(g)].size();
  }

  auto emit = [&](int poly, const Multidegree& v, std::vector<MacaulayPlan::Row>& out) {
    std::vector<std::size_t> count(r);
    for (int g = 0; g < r; ++g) {
      auto gs = static_cast<std::size_t>(g);
      if (d[gs] - v[gs] < 0) return;
      count[gs] = v[gs] ? low[gs].size() : top[gs].size();
      if (!count[gs]) return;
    }
    // tensor positions: per degree-1 group an index, last fastest
    std::size_t tsize = 1;
    for (int g = 0; g < r; ++g)
      if (v[static_cast<std::size_t>(g)]) tsize *= static_cast<std::size_t>(sizes[static_cast<std::size_t>(g)]);
    std::vector<std::size_t> m(r, 0);
    while (true) {
      MacaulayPlan::Row row;
      row.poly = poly;
      row.entries.reserve(tsize);
      std::vector<int> idx(r, 0);
      for (std::size_t pos = 0; pos < tsize; ++pos) {
        std::size_t col = 0;
        for (int g = 0; g < r; ++g) {
          auto gs = static_cast<std::size_t>(g);
          std::size_t c = v[gs] ? mulx[gs][m[gs]][static_cast<std::size_t>(idx[gs])] : m[gs];
          col += c * stride[gs];
        }
        row.entries.emplace_back(static_cast<std::uint32_t>(col), static_cast<std::uint32_t>(pos));
        for (int g = r - 1; g >= 0; --g) {
          auto gs = static_cast<std::size_t>(g);
          if (!v[gs]) continue;
          if (++idx[gs] < sizes[gs]) break;
          idx[gs] = 0;
        }
      }
      out.push_back(std::move(row));
      int g = r - 1;
      for (; g >= 0; --g) {
        auto gs = static_cast<std::size_t>(g);
        if (++m[gs] < count[gs]) break;
        m[gs] = 0;
      }
      if (g < 0) break;
    }
  };
  for (std::size_t k = 0; k < degs.size(); ++k) emit(static_cast<int>(k), degs[k], plan.f_rows);
  emit(-1, d0(r), plan.f0_rows);
  return plan;
}

std::vector<std::uint64_t> dense_row_mod(const MacaulayPlan::Row& row, const std::vector<std::uint64_t>& coeffs,
                                         std::size_t ncols) {
  std::vector<std::uint64_t> v(ncols, 0);
  for (auto [c, pos] : row.entries) v[c] = coeffs[pos];
  return v;
}

std::vector<std::uint64_t> dense_row_mod(const MacaulayPlan::Row& row, const std::vector<Rational>& coeffs,
                                         std::size_t ncols, const ModP& F, bool* ok) {
  std::vector<std::uint64_t> v(ncols, 0);
  for (auto [c, pos] : row.entries) {
    auto x = F.reduce(coeffs[pos]);
    if (!x) {
      if (ok) *ok = false;
      return v;
    }
    v[c] = *x;
  }
  return v;
}

namespace {

std::vector<Multidegree> structure_degrees(const std::vector<int>& sizes) {
  int r = static_cast<int>(sizes.size());
  std::vector<Multidegree> degs;
  for (int i = 0; i < r; ++i)
    for (int k = 1; k < sizes[static_cast<std::size_t>(i)]; ++k) degs.push_back(d_i(r, i));
  return degs;
}

std::size_t tensor_size(const std::vector<int>& sizes, const Multidegree& v) {
  std::size_t t = 1;
  for (std::size_t g = 0; g < sizes.size(); ++g)
    if (v[g]) t *= static_cast<std::size_t>(sizes[g]);
  return t;
}

std::size_t f_rank(const MacaulayPlan& plan, const std::vector<std::vector<std::uint64_t>>& sys, const ModP& F,
                   std::size_t stop_at) {
  IncrementalRank R(F, plan.ncols);
  for (const auto& row : plan.f_rows) {
    R.insert(dense_row_mod(row, sys[static_cast<std::size_t>(row.poly)], plan.ncols));
    if (R.rank() >= stop_at) break;
  }
  return R.rank();
}

}  // namespace

MacaulayDegree macaulay_degree(const std::vector<int>& sizes) {
  static std::mutex mu;
  static std::map<std::vector<int>, MacaulayDegree> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(sizes);
    if (it != cache.end()) return it->second;
  }
  const int r = static_cast<int>(sizes.size());
  std::vector<int> dims;
  for (int s : sizes) dims.push_back(s - 1);
  Integer dl = delta(dims);
  if (dl == 0) throw std::invalid_argument("macaulay_degree: infeasible shape");
  const long dlt = dl.get_si();
  const auto degs = structure_degrees(sizes);

  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(r));
  ModP F{random_prime(rng)};
  std::vector<std::vector<std::uint64_t>> sys;
  for (const auto& v : degs) {
    std::vector<std::uint64_t> c(tensor_size(sizes, v));
    for (auto& x : c) x = rng() % F.p;
    sys.push_back(std::move(c));
  }
  std::vector<std::uint64_t> f0(tensor_size(sizes, d0(r)));
  for (auto& x : f0) x = rng() % F.p;

  constexpr int kMaxDeg = 5;
  constexpr std::size_t kMaxCols = 6000;
  std::vector<std::pair<std::size_t, std::vector<int>>> cands;
  std::vector<int> d(static_cast<std::size_t>(r), 1);
  while (true) {
    std::size_t nc = 1;
    for (int g = 0; g < r; ++g) nc *= binom(d[static_cast<std::size_t>(g)] + sizes[static_cast<std::size_t>(g)] - 1,
                                            sizes[static_cast<std::size_t>(g)] - 1);
    if (nc <= kMaxCols) cands.emplace_back(nc, d);
    int g = r - 1;
    for (; g >= 0; --g) {
      if (++d[static_cast<std::size_t>(g)] <= kMaxDeg) break;
      d[static_cast<std::size_t>(g)] = 1;
    }
    if (g < 0) break;
  }
  std::sort(cands.begin(), cands.end());
  for (const auto& [nc, dd] : cands) {
    if (nc < static_cast<std::size_t>(dlt)) continue;
    MacaulayPlan plan = make_macaulay_plan(sizes, degs, dd);
    if (plan.f_rows.size() + static_cast<std::size_t>(dlt) < nc) continue;
    if (f_rank(plan, sys, F, nc) != nc - static_cast<std::size_t>(dlt)) continue;
    std::vector<int> dm(dd);
    for (int& x : dm) --x;
    MacaulayPlan low = make_macaulay_plan(sizes, degs, dm);
    if (low.ncols < static_cast<std::size_t>(dlt)) continue;
    if (f_rank(low, sys, F, low.ncols) != low.ncols - static_cast<std::size_t>(dlt)) continue;
    if (!select_square(plan, sys, f0, F)) continue;
    MacaulayDegree out{dd, nc, dlt};
    std::lock_guard<std::mutex> lock(mu);
    cache[sizes] = out;
    return out;
  }
  throw std::runtime_error("macaulay_degree: no admissible multidegree within limits");
}

std::optional<MacaulaySelection> select_square(const MacaulayPlan& plan,
                                               const std::vector<std::vector<std::uint64_t>>& sys,
                                               const std::vector<std::uint64_t>& f0, const ModP& F) {
  IncrementalRank R(F, plan.ncols);
  MacaulaySelection sel;
  for (std::size_t k = 0; k < plan.f_rows.size() && R.rank() < plan.ncols; ++k) {
    const auto& row = plan.f_rows[k];
    if (R.insert(dense_row_mod(row, sys[static_cast<std::size_t>(row.poly)], plan.ncols))) sel.f_sel.push_back(k);
  }
  for (std::size_t k = 0; k < plan.f0_rows.size() && R.rank() < plan.ncols; ++k)
    if (R.insert(dense_row_mod(plan.f0_rows[k], f0, plan.ncols))) sel.f0_sel.push_back(k);
  if (R.rank() < plan.ncols) return std::nullopt;
  return sel;
}

QMatrix square_matrix(const MacaulayPlan& plan, const MacaulaySelection& sel,
                      const std::vector<std::vector<Rational>>& sys, const std::vector<Rational>& f0) {
  QMatrix M(plan.ncols, plan.ncols);
  std::size_t r = 0;
  for (std::size_t k : sel.f_sel) {
    const auto& row = plan.f_rows[k];
    const auto& c = sys[static_cast<std::size_t>(row.poly)];
    for (auto [col, pos] : row.entries) M(r, col) = c[pos];
    ++r;
  }
  for (std::size_t k : sel.f0_sel) {
    for (auto [col, pos] : plan.f0_rows[k].entries) M(r, col) = f0[pos];
    ++r;
  }
  return M;
}

QMatrix square_matrix_f0_only(const MacaulayPlan& plan, const MacaulaySelection& sel,
                              const std::vector<Rational>& f0) {
  QMatrix M(plan.ncols, plan.ncols);
  std::size_t r = sel.f_sel.size();
  for (std::size_t k : sel.f0_sel) {
    for (auto [col, pos] : plan.f0_rows[k].entries) M(r, col) = f0[pos];
    ++r;
  }
  return M;
}

}  // namespace tmne
