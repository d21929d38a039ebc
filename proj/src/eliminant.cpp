#include "tmne/eliminant.hpp"

#include "tmne/bezout.hpp"
#include "tmne/mpoly.hpp"
#include "tmne/qmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tmne {

std::string chart_var_name(const ChartVar& v) {
  return "u[" + std::to_string(v.first + 1) + "," + std::to_string(v.second) + "]";
}

std::vector<ChartVar> chart_variables(const std::vector<int>& sizes, const std::vector<int>& group_order) {
  std::vector<int> order = group_order;
  if (order.empty()) {
    order.resize(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)]; });
  }
  std::vector<ChartVar> vars;
  for (int g : order)
    for (int j = 1; j < sizes.at(static_cast<std::size_t>(g)); ++j) vars.emplace_back(g, j);
  return vars;
}

std::vector<int> parse_group_order(const std::string& text, int groups) {
  std::vector<int> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid group order: " + text);
    }
    if (used != item.size() || g < 1 || g > groups) throw std::invalid_argument("invalid group order: " + text);
    order.push_back(g - 1);
  }
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(sorted.size()) != groups || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("group order must be a permutation of 1.." + std::to_string(groups));
  return order;
}

namespace {

std::vector<MPoly> chart_polys(const MultilinearSystem& sys, const std::vector<ChartVar>& vars) {
  const int nv = static_cast<int>(vars.size());
  if (nv > kMaxVars) throw std::invalid_argument("too many chart variables");
  std::map<ChartVar, int> index;
  for (int k = 0; k < nv; ++k) index[vars[static_cast<std::size_t>(k)]] = k;
  std::vector<MPoly> out;
  for (const auto& F : sys.polys) {
    std::vector<Term> terms;
    F.for_each([&](const std::vector<int>& idx, const Rational& c) {
      if (c == 0) return;
      Mono m;
      for (std::size_t g = 0; g < idx.size(); ++g)
        if (idx[g] > 0) m = mono_mul(m, mono_var(index.at({static_cast<int>(g), idx[g]})));
      terms.push_back({m, c});
    });
    out.push_back(MPoly::from_terms(nv, std::move(terms)));
  }
  return out;
}

QMatrix mono_matrix(const Mono& m, const std::vector<QMatrix>& Mv, std::size_t N) {
  QMatrix R = QMatrix::identity(N);
  for (std::size_t v = 0; v < Mv.size(); ++v)
    for (int e = 0; e < m.e[v]; ++e) R = R * Mv[v];
  return R;
}

}  // namespace

NormalFormData normal_form_data(const MultilinearSystem& sys, const LinearForm& l, const EliminantOptions& opts) {
  NormalFormData out;
  out.vars = chart_variables(sys.sizes, opts.group_order);
  const int nv = static_cast<int>(out.vars.size());
  GroebnerBasis G(nv, chart_polys(sys, out.vars));
  out.basis_size = G.basis().size();
  if (G.is_unit()) {
    out.unit = true;
    out.chi = UniPoly::constant(1);
    out.dchi.assign(out.vars.size(), UniPoly());
    return out;
  }
  if (!G.zero_dimensional()) throw PositiveDimensional("affine solution set is not finite");
  const auto& B = G.standard_monomials();
  const std::size_t N = B.size();
  out.quotient_dim = N;
  std::vector<QMatrix> Mv;
  for (int v = 0; v < nv; ++v) Mv.push_back(G.multiplication_matrix(v));
  QMatrix Ml(N, N);
  for (const auto& [key, c] : l) {
    auto it = std::find(out.vars.begin(), out.vars.end(), key);
    if (it == out.vars.end()) throw std::invalid_argument("linear form uses an unknown variable");
    Ml = Ml + c * Mv[static_cast<std::size_t>(it - out.vars.begin())];
  }
  out.chi = berkowitz_charpoly(Ml);
  for (int v = 0; v < nv; ++v) {
    std::vector<Dual<Rational>> A(N * N);
    for (std::size_t k = 0; k < N * N; ++k) A[k] = Dual<Rational>(Ml.entries[k], Mv[static_cast<std::size_t>(v)].entries[k]);
    auto c = berkowitz(A, N);
    std::vector<Rational> b(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) b[k] = c[k].b;
    out.dchi.push_back(UniPoly(b));
  }
  // number of distinct points = rank of the trace form
  std::vector<QMatrix> MB;
  for (const auto& m : B) MB.push_back(mono_matrix(m, Mv, N));
  QMatrix Tr(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      Rational t = (MB[a] * MB[b]).trace();
      Tr(a, b) = t;
      Tr(b, a) = t;
    }
  out.distinct_points = rank(Tr);
  return out;
}

std::vector<Rational> f0_tensor(const std::vector<int>& sizes, const Rational& A0, const LinearForm& l) {
  return homogenize_linear_form(sizes, A0, l).coeffs();
}

MacaulayResultant::MacaulayResultant(const MultilinearSystem& sys, std::uint64_t seed) : sys_(sys), rng_(seed) {
  std::vector<Multidegree> degs;
  for (const auto& F : sys.polys) {
    degs.push_back(F.multidegree());
    coeffs_.push_back(F.coeffs());
  }
  plan_ = make_macaulay_plan(sys.sizes, degs, macaulay_degree(sys.sizes).d);
}

bool MacaulayResultant::choose_selection(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    ModP F{random_prime(rng_)};
    std::vector<std::vector<std::uint64_t>> sys;
    bool ok = true;
    for (const auto& c : coeffs_) {
      std::vector<std::uint64_t> v;
      for (const auto& x : c) {
        auto r = F.reduce(x);
        if (!r) ok = false;
        v.push_back(r.value_or(0));
      }
      sys.push_back(std::move(v));
    }
    std::uint64_t s0 = rng_() % F.p;
    std::vector<std::uint64_t> f0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      auto x = F.reduce(a[k]);
      auto y = F.reduce(b[k]);
      if (!x || !y) ok = false;
      f0.push_back(F.add(x.value_or(0), F.mul(s0, y.value_or(0))));
    }
    if (!ok) continue;
    sel_ = select_square(plan_, sys, f0, F);
    return sel_.has_value();
  }
  return false;
}

Rational MacaulayResultant::det(const std::vector<Rational>& f0) const {
  if (!sel_) throw std::logic_error("MacaulayResultant: no selection");
  return determinant(square_matrix(plan_, *sel_, coeffs_, f0));
}

UniPoly MacaulayResultant::along_line(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (!sel_ && !choose_selection(a, b)) return UniPoly();
  const std::size_t deg = sel_->f0_sel.size();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= deg; ++k) {
    Rational s(static_cast<long>(k));
    std::vector<Rational> f0(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) f0[t] = a[t] + s * b[t];
    xs.push_back(s);
    ys.push_back(det(f0));
  }
  return interpolate(xs, ys);
}

Eliminant eliminant_with_linear_form(const MultilinearSystem& sys, const LinearForm& l, std::uint64_t seed,
                                     const EliminantOptions& opts) {
  std::vector<int> dims;
  for (int s : sys.sizes) dims.push_back(s - 1);
  if (delta(dims) == 0) throw std::invalid_argument("infeasible shape");
  Eliminant E;
  if (opts.engine == EliminantEngine::NormalForm) {
    NormalFormData nf = normal_form_data(sys, l, opts);
    for (const auto& v : nf.vars) E.variable_order.push_back(chart_var_name(v));
    E.polynomial = nf.chi;
    E.provenance.push_back("groebner basis (grevlex), " + std::to_string(nf.basis_size) + " elements");
    E.provenance.push_back("quotient dimension " + std::to_string(nf.quotient_dim));
    E.provenance.push_back("characteristic polynomial of multiplication by the linear form");
    return E;
  }
  MacaulayResultant R(sys, seed);
  for (const auto& v : chart_variables(sys.sizes, opts.group_order)) E.variable_order.push_back(chart_var_name(v));
  auto a = f0_tensor(sys.sizes, 0, l);
  auto b = f0_tensor(sys.sizes, 1, {});
  UniPoly inA0 = R.along_line(a, b);
  if (inA0.is_zero()) throw PositiveDimensional("eliminant vanishes identically");
  E.polynomial = inA0.reflect();
  std::ostringstream d;
  d << "macaulay matrix at multidegree (";
  for (std::size_t g = 0; g < R.plan().d.size(); ++g) d << (g ? "," : "") << R.plan().d[g];
  d << "), " << R.plan().ncols << " columns";
  E.provenance.push_back(d.str());
  E.provenance.push_back("determinant interpolated in A0 at " + std::to_string(R.selection()->f0_sel.size() + 1) +
                         " points, T = -A0");
  return E;
}

Eliminant affine_part(const Eliminant& E) {
  if (E.polynomial.is_zero()) throw std::invalid_argument("affine_part: zero eliminant");
  Eliminant out = E;
  out.polynomial = E.polynomial.monic();
  out.provenance.push_back("divided by the leading coefficient in T");
  return out;
}

const char* to_string(ZeroDimVerdict v) {
  return v == ZeroDimVerdict::ZeroDimensionalOrEmpty ? "zero-dimensional-or-empty" : "likely-positive-dimensional";
}

namespace {

bool full_rank_at_some_point(const MacaulayPlan& plan, const MultilinearSystem& sys, const ModP& F,
                             std::size_t npoints, bool* reduced) {
  std::vector<std::vector<std::uint64_t>> coeffs;
  for (const auto& P : sys.polys) {
    std::vector<std::uint64_t> v;
    for (const auto& x : P.coeffs()) {
      auto r = F.reduce(x);
      if (!r) {
        *reduced = false;
        return false;
      }
      v.push_back(*r);
    }
    coeffs.push_back(std::move(v));
  }
  *reduced = true;
  IncrementalRank base(F, plan.ncols);
  for (const auto& row : plan.f_rows) base.insert(dense_row_mod(row, coeffs[static_cast<std::size_t>(row.poly)], plan.ncols));
  // exponent of t per F_0 tensor position: j_1 + (n_1+1) j_2 + ...
  const std::size_t r = sys.sizes.size();
  std::size_t tsize = 1;
  for (int s : sys.sizes) tsize *= static_cast<std::size_t>(s);
  std::vector<std::uint64_t> expo(tsize);
  std::vector<int> idx(r, 0);
  for (std::size_t pos = 0; pos < tsize; ++pos) {
    std::uint64_t e = 0, w = 1;
    for (std::size_t g = 0; g < r; ++g) {
      e += static_cast<std::uint64_t>(idx[g]) * w;
      w *= static_cast<std::uint64_t>(sys.sizes[g]);
    }
    expo[pos] = e;
    for (std::size_t g = r; g-- > 0;) {
      if (++idx[g] < sys.sizes[g]) break;
      idx[g] = 0;
    }
  }
  for (std::size_t t0 = 1; t0 <= npoints; ++t0) {
    std::vector<std::uint64_t> f0(tsize);
    for (std::size_t pos = 0; pos < tsize; ++pos) f0[pos] = F.pow(t0 % F.p, expo[pos]);
    IncrementalRank R = base;
    for (const auto& row : plan.f0_rows) {
      R.insert(dense_row_mod(row, f0, plan.ncols));
      if (R.rank() == plan.ncols) return true;
    }
  }
  return false;
}

}  // namespace

ZeroDimVerdict zero_dim_test(const MultilinearSystem& sys, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::vector<int> dims;
  for (int s : sys.sizes) dims.push_back(s - 1);
  Integer dl = delta(dims);
  if (dl == 0) throw std::invalid_argument("infeasible shape");
  std::size_t npoints = static_cast<std::size_t>(dl.get_si());
  for (int s : sys.sizes) npoints *= static_cast<std::size_t>(s);
  std::vector<Multidegree> degs;
  for (const auto& P : sys.polys) degs.push_back(P.multidegree());

  std::vector<std::vector<int>> ds{macaulay_degree(sys.sizes).d};
  {
    // a larger multidegree covers special systems with higher regularity
    auto up = ds.front();
    for (int& x : up) ++x;
    if (make_macaulay_plan(sys.sizes, {}, up).ncols <= 800) ds.push_back(up);
  }
  std::mt19937_64 rng(seed);
  const int passes = (trials + 39) / 40;
  for (const auto& d : ds) {
    MacaulayPlan plan = make_macaulay_plan(sys.sizes, degs, d);
    for (int pass = 0; pass < passes; ++pass) {
      bool reduced = false;
      ModP F{random_prime(rng)};
      if (full_rank_at_some_point(plan, sys, F, npoints, &reduced)) return ZeroDimVerdict::ZeroDimensionalOrEmpty;
      if (!reduced) --pass;
    }
  }
  return ZeroDimVerdict::LikelyPositiveDimensional;
}

}  // namespace tmne
