#include "tmne/deformation.hpp"

#include "tmne/bezout.hpp"
#include "tmne/macaulay.hpp"

#include <random>

namespace tmne {

namespace {

constexpr int kDirectionAttempts = 5;

std::vector<std::vector<std::uint64_t>> reduce_all(const std::vector<std::vector<Rational>>& c, const ModP& F,
                                                   bool* ok) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& t : c) {
    std::vector<std::uint64_t> v;
    for (const auto& x : t) {
      auto r = F.reduce(x);
      if (!r) *ok = false;
      v.push_back(r.value_or(0));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Rational>> mix(const std::vector<std::vector<Rational>>& a,
                                       const std::vector<std::vector<Rational>>& b, const Rational& tau) {
  auto out = a;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t t = 0; t < a[k].size(); ++t) out[k][t] = a[k][t] + tau * (b[k][t] - a[k][t]);
  return out;
}

// One deformation direction. Returns false if the form l needs replacing.
bool run_pass(const MultilinearSystem& sys, const MacaulayPlan& plan, const LinearForm& l,
              const std::vector<ChartVar>& vars, std::mt19937_64& rng, DeformationPass& pass) {
  std::vector<std::vector<Rational>> a;
  for (const auto& F : sys.polys) a.push_back(F.coeffs());
  const auto f0_l = f0_tensor(sys.sizes, 0, l);
  const auto f0_one = f0_tensor(sys.sizes, 1, {});

  std::optional<MacaulaySelection> sel;
  for (int attempt = 0; attempt < kDirectionAttempts && !sel; ++attempt) {
    pass.b_attempts = attempt + 1;
    pass.b.clear();
    for (const auto& t : a) {
      std::vector<Rational> v;
      for (std::size_t k = 0; k < t.size(); ++k) v.emplace_back(static_cast<long>(rng() % 101) - 50);
      pass.b.push_back(std::move(v));
    }
    ModP F{random_prime(rng)};
    bool ok = true;
    auto am = reduce_all(a, F, &ok);
    auto bm = reduce_all(pass.b, F, &ok);
    std::vector<std::uint64_t> f0m;
    std::uint64_t A0 = rng() % F.p;
    for (std::size_t k = 0; k < f0_l.size(); ++k) {
      auto x = F.reduce(f0_l[k]);
      if (!x) ok = false;
      f0m.push_back(F.add(x.value_or(0), f0_one[k] == 0 ? 0 : A0));
    }
    if (!ok) continue;
    // b itself must have a nonvanishing eliminant
    if (!select_square(plan, bm, f0m, F)) continue;
    std::uint64_t tau0 = rng() % F.p;
    auto mixed = am;
    for (std::size_t k = 0; k < am.size(); ++k)
      for (std::size_t t = 0; t < am[k].size(); ++t)
        mixed[k][t] = F.add(am[k][t], F.mul(tau0, F.sub(bm[k][t], am[k][t])));
    sel = select_square(plan, mixed, f0m, F);
  }
  if (!sel) throw std::runtime_error("could not find generic direction");

  const std::size_t degT = sel->f_sel.size();
  const std::size_t degA = sel->f0_sel.size();
  const std::size_t nv = vars.size();
  std::vector<QMatrix> Ys;
  for (const auto& v : vars) {
    LinearForm e{{v, Rational(1)}};
    Ys.push_back(square_matrix_f0_only(plan, *sel, f0_tensor(sys.sizes, 0, e)));
  }
  // per A0 sample: tau-coefficients of E and of each derivative
  std::vector<Rational> A0s;
  std::vector<std::vector<Rational>> Ecoef;
  std::vector<std::vector<std::vector<Rational>>> Dcoef;
  for (long A0 = 1; A0s.size() < degA + 1; ++A0) {
    if (A0 > static_cast<long>(4 * degA + 8)) throw std::runtime_error("deformation: no regular evaluation grid");
    auto f0 = f0_tensor(sys.sizes, Rational(A0), l);
    std::vector<Rational> ts, es;
    std::vector<std::vector<Rational>> ds(nv);
    for (long t = 1; ts.size() < degT + 1 && t <= static_cast<long>(3 * degT + 6); ++t) {
      Rational tau(t, 3);
      QMatrix X = square_matrix(plan, *sel, mix(a, pass.b, tau), f0);
      Rational det;
      std::vector<Rational> dd;
      if (!determinant_with_derivatives(X, Ys, det, dd)) continue;
      ts.push_back(tau);
      es.push_back(det);
      for (std::size_t k = 0; k < nv; ++k) ds[k].push_back(dd[k]);
    }
    if (ts.size() < degT + 1) continue;
    A0s.emplace_back(A0);
    Ecoef.push_back(interpolate(ts, es).coeffs());
    std::vector<std::vector<Rational>> dc;
    for (std::size_t k = 0; k < nv; ++k) dc.push_back(interpolate(ts, ds[k]).coeffs());
    Dcoef.push_back(std::move(dc));
  }
  auto coeff = [](const std::vector<Rational>& c, std::size_t k) { return k < c.size() ? c[k] : Rational(0); };
  std::size_t eps = degT + 1;
  for (const auto& c : Ecoef)
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) {
        eps = std::min(eps, k);
        break;
      }
  if (eps > degT) throw std::logic_error("deformed eliminant vanishes identically");
  for (std::size_t j = 0; j < Dcoef.size(); ++j)
    for (const auto& c : Dcoef[j])
      for (std::size_t k = 0; k < eps; ++k)
        if (coeff(c, k) != 0) return false;
  pass.epsilon = static_cast<int>(eps);
  std::vector<Rational> ev;
  for (const auto& c : Ecoef) ev.push_back(coeff(c, eps));
  UniPoly Et = interpolate(A0s, ev).reflect();
  std::map<ChartVar, UniPoly> D;
  for (std::size_t k = 0; k < nv; ++k) {
    std::vector<Rational> dv;
    for (const auto& c : Dcoef) dv.push_back(coeff(c[k], eps));
    D[vars[k]] = interpolate(A0s, dv).reflect();
  }
  pass.candidate_P = Et;
  Parametrization par = parametrize(Et, D);
  GeometricResolution& R = pass.pruned;
  R.sizes = sys.sizes;
  R.separating_form = l;
  R.P = par.P;
  R.P_prime = R.P.degree() > 0 ? R.P.derivative() : UniPoly();
  R.W = std::move(par.W);
  R.provenance.push_back("deformation, epsilon = " + std::to_string(eps) + ", candidate degree " +
                         std::to_string(Et.degree()));
  prune(R, sys);
  return true;
}

GeometricResolution intersect(const GeometricResolution& A, const GeometricResolution& B) {
  GeometricResolution R = A;
  R.provenance.push_back("intersected with a second deformation direction");
  if (A.P.degree() <= 0 || B.P.degree() <= 0) {
    R.P = UniPoly::constant(1);
    R.P_prime = UniPoly();
    R.W.clear();
    return R;
  }
  UniPoly G = gcd(A.P, B.P);
  for (const auto& [v, w] : A.W) {
    if (G.degree() <= 0) break;
    UniPoly h = (w * B.P_prime - B.W.at(v) * A.P_prime) % G;
    G = gcd(G, h);
  }
  if (G.degree() <= 0) {
    R.P = UniPoly::constant(1);
    R.P_prime = UniPoly();
    R.W.clear();
    return R;
  }
  UniPoly P = G.primitive();
  UniPoly dP = P.derivative();
  UniPoly inv = inverse_mod(A.P_prime % P, P);
  for (auto& [v, w] : R.W) w = (w % P) * inv % P * dP % P;
  R.P = P;
  R.P_prime = dP;
  return R;
}

}  // namespace

DeformationTrace isolated_solutions(const MultilinearSystem& sys, std::uint64_t seed, int trials) {
  DeformationTrace trace;
  trace.verdict = zero_dim_test(sys, trials, seed);
  if (trace.verdict == ZeroDimVerdict::ZeroDimensionalOrEmpty) {
    trace.pruned = resolve_system(sys, seed);
    trace.candidate_P = trace.pruned.P;
    return trace;
  }
  const auto vars = chart_variables(sys.sizes, {});
  const MacaulayPlan plan = [&] {
    std::vector<Multidegree> degs;
    for (const auto& F : sys.polys) degs.push_back(F.multidegree());
    return make_macaulay_plan(sys.sizes, degs, macaulay_degree(sys.sizes).d);
  }();
  std::mt19937_64 rng(seed);
  for (int form = 0; form < 4; ++form) {
    LinearForm l;
    for (const auto& v : vars) l[v] = Rational(static_cast<long>(1 + rng() % 100003));
    std::vector<DeformationPass> passes(2);
    bool ok = true;
    for (auto& p : passes) {
      if (!run_pass(sys, plan, l, vars, rng, p)) {
        ok = false;
        break;
      }
      if (!verify_resolution(p.pruned, sys)) throw std::logic_error("pruned candidates failed back-substitution");
    }
    if (!ok) continue;
    trace.epsilon = passes[0].epsilon;
    trace.candidate_P = passes[0].candidate_P;
    trace.pruned = intersect(passes[0].pruned, passes[1].pruned);
    trace.passes = std::move(passes);
    if (!verify_resolution(trace.pruned, sys)) throw std::logic_error("intersected resolution failed back-substitution");
    return trace;
  }
  throw std::runtime_error("deformation: no admissible linear form");
}

IsolatedResult isolated_quasi_equilibria(const Game& game, std::uint64_t seed, int trials) {
  if (delta(game.shape.dims()) == 0) throw std::invalid_argument("infeasible shape");
  IsolatedResult out;
  out.trace = isolated_solutions(indifference_system(game), seed, trials);
  out.report = extract_tmne(out.trace.pruned, game);
  return out;
}

}  // namespace tmne
