#include "tmne/solver.hpp"

#include "tmne/bezout.hpp"
#include "tmne/qmatrix.hpp"

#include <random>
#include <sstream>

namespace tmne {

Parametrization parametrize(const UniPoly& E, const std::map<ChartVar, UniPoly>& D) {
  if (E.is_zero()) throw std::invalid_argument("parametrize: zero eliminant");
  Parametrization out;
  if (E.degree() == 0) {
    out.P = UniPoly::constant(1);
    return out;
  }
  const UniPoly dE = E.derivative();
  const UniPoly g = gcd(E, dE);
  const UniPoly P0 = (E / g).monic();
  const UniPoly dP0 = P0.derivative();
  const UniPoly Eg = dE / g;
  const UniPoly inv = inverse_mod(Eg % P0, P0);
  const UniPoly Pp = P0.primitive();
  const Rational c = Pp.lc() / P0.lc();
  out.P = Pp;
  for (const auto& [v, d] : D) {
    UniPoly Dg = d / g;
    UniPoly w = ((-(Dg % P0)) * dP0 % P0) * inv % P0;
    out.W[v] = c * w;
  }
  return out;
}

namespace {

// prod over groups of X_g[idx_g], X_g = (P', W_g1, ...), mod P
UniPoly compose_mod(const MultilinearPoly& F, const UniPoly& P, const UniPoly& dP,
                    const std::map<ChartVar, UniPoly>& W) {
  UniPoly acc;
  F.for_each([&](const std::vector<int>& idx, const Rational& c) {
    if (c == 0) return;
    UniPoly term = UniPoly::constant(c);
    for (std::size_t g = 0; g < idx.size(); ++g) {
      if (idx[g] < 0) continue;
      const UniPoly& f = idx[g] == 0 ? dP : W.at({static_cast<int>(g), idx[g]});
      term = term * f % P;
    }
    acc += term;
  });
  return acc % P;
}

}  // namespace

UniPoly composed_numerator(const MultilinearPoly& F, const GeometricResolution& R) {
  if (R.P.degree() <= 0) return UniPoly();
  return compose_mod(F, R.P, R.P_prime, R.W);
}

void prune(GeometricResolution& R, const MultilinearSystem& sys) {
  if (R.P.degree() <= 0) return;
  UniPoly Pn = R.P.monic();
  for (const auto& F : sys.polys) {
    if (Pn.degree() <= 0) break;
    UniPoly N = compose_mod(F, Pn, R.P_prime % Pn, R.W);
    Pn = gcd(Pn, N);
  }
  if (Pn.degree() == R.P.degree()) return;
  R.provenance.push_back("pruned degree " + std::to_string(R.P.degree()) + " -> " + std::to_string(Pn.degree()));
  if (Pn.degree() <= 0) {
    R.P = UniPoly::constant(1);
    R.P_prime = UniPoly();
    R.W.clear();
    return;
  }
  UniPoly Pnew = Pn.primitive();
  UniPoly dnew = Pnew.derivative();
  UniPoly inv = inverse_mod(R.P_prime % Pnew, Pnew);
  for (auto& [v, w] : R.W) w = (w % Pnew) * inv % Pnew * dnew % Pnew;
  R.P = Pnew;
  R.P_prime = dnew;
}

bool verify_resolution(const GeometricResolution& R, const MultilinearSystem& sys) {
  if (R.P.is_zero()) return false;
  if (R.P.degree() <= 0) return true;
  if (gcd(R.P, R.P_prime).degree() != 0) return false;
  for (const auto& [v, w] : R.W)
    if (w.degree() >= R.P.degree()) return false;
  for (const auto& F : sys.polys)
    if (!composed_numerator(F, R).is_zero()) return false;
  UniPoly l;
  for (const auto& [v, c] : R.separating_form) l += c * R.W.at(v);
  return ((l - UniPoly::x() * R.P_prime) % R.P).is_zero();
}

GeometricResolution resolve_system(const MultilinearSystem& sys, std::uint64_t seed, const SolverOptions& opts) {
  std::vector<int> dims;
  for (int s : sys.sizes) dims.push_back(s - 1);
  if (delta(dims) == 0) throw std::invalid_argument("infeasible shape");
  const auto vars = chart_variables(sys.sizes, opts.elim.group_order);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < opts.max_form_attempts; ++attempt) {
    LinearForm l;
    if (attempt == 0) {
      for (std::size_t g = 0; g < sys.sizes.size(); ++g) l[{static_cast<int>(g), 1}] = 1;
    } else {
      Rational tau(static_cast<long>(2 + rng() % 97));
      Rational pw(1);
      // coefficients -tau^k along the chart variables in index order
      for (std::size_t g = 0; g < sys.sizes.size(); ++g)
        for (int j = 1; j < sys.sizes[g]; ++j) {
          l[{static_cast<int>(g), j}] = -pw;
          pw *= tau;
        }
    }
    NormalFormData nf = normal_form_data(sys, l, opts.elim);
    GeometricResolution R;
    R.sizes = sys.sizes;
    R.separating_form = l;
    R.quotient_dim = nf.quotient_dim;
    R.form_attempts = attempt + 1;
    R.provenance.push_back("normal form engine, quotient dimension " + std::to_string(nf.quotient_dim) + ", " +
                           std::to_string(nf.distinct_points) + " distinct points");
    if (nf.unit) {
      R.P = UniPoly::constant(1);
      return R;
    }
    if (squarefree_part(nf.chi).degree() != static_cast<int>(nf.distinct_points)) continue;  // not separating
    std::map<ChartVar, UniPoly> D;
    for (std::size_t k = 0; k < vars.size(); ++k) D[nf.vars[k]] = nf.dchi[k];
    Parametrization par = parametrize(nf.chi, D);
    R.P = par.P;
    R.P_prime = R.P.derivative();
    R.W = std::move(par.W);
    prune(R, sys);
    if (!verify_resolution(R, sys)) throw std::logic_error("resolution failed back-substitution");
    return R;
  }
  throw std::runtime_error("no separating linear form found");
}

GeometricResolution geometric_resolution(const Game& game, std::uint64_t seed, const SolverOptions& opts) {
  return resolve_system(indifference_system(game), seed, opts);
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval r{c[0], c[0]};
  for (const auto& x : c) {
    if (x < r.lo) r.lo = x;
    if (x > r.hi) r.hi = x;
  }
  return r;
}

Interval ieval(const UniPoly& p, const Interval& x) {
  Interval acc{0, 0};
  for (int k = p.degree(); k >= 0; --k) {
    acc = imul(acc, x);
    acc.lo += p.coeff(k);
    acc.hi += p.coeff(k);
  }
  return acc;
}

}  // namespace

TMNEReport extract_tmne(const GeometricResolution& R, const Game& game, const Rational& width) {
  TMNEReport rep;
  if (R.P.degree() <= 0) return rep;
  const auto& sizes = R.sizes;
  std::vector<UniPoly> qs{R.P_prime};
  std::vector<ChartVar> order;
  for (const auto& [v, w] : R.W) {
    qs.push_back(w);
    order.push_back(v);
  }
  SignedRootCount sc = count_real_roots_with_signs(R.P, qs);
  rep.count = sc.pos_count + sc.neg_count;
  for (std::size_t k = 0; k < sc.roots.size(); ++k) {
    EquilibriumRecord e;
    e.root = sc.roots[k];
    e.signs = sc.signs[k];
    e.rational = rational_root(R.P, e.root, e.t);
    e.profile.resize(sizes.size());
    if (e.rational) {
      const Rational dp = R.P_prime(e.t);
      for (std::size_t g = 0; g < sizes.size(); ++g) {
        std::vector<Rational> v{dp};
        for (int j = 1; j < sizes[g]; ++j) v.push_back(R.W.at({static_cast<int>(g), j})(e.t));
        Rational S = 0;
        for (const auto& x : v) S += x;
        if (S == 0) throw std::runtime_error("coordinate sum vanishes at root t = " + to_string(e.t));
        for (const auto& x : v) e.profile[g].push_back({true, x / S, x / S, x / S});
      }
      MixedProfile prof;
      exact_profile(e, prof);
      if (!is_tmne(game, prof)) throw std::logic_error("extracted profile is not a totally mixed equilibrium");
    } else {
      for (int round = 0; round < 64; ++round) {
        Interval t{e.root.lo, e.root.hi};
        bool good = true;
        std::vector<std::vector<Coordinate>> prof(sizes.size());
        for (std::size_t g = 0; g < sizes.size() && good; ++g) {
          std::vector<Interval> v{ieval(R.P_prime, t)};
          for (int j = 1; j < sizes[g]; ++j) v.push_back(ieval(R.W.at({static_cast<int>(g), j}), t));
          Interval S{0, 0};
          for (const auto& x : v) S.lo += x.lo, S.hi += x.hi;
          if (S.lo <= 0 && S.hi >= 0) {
            good = false;
            break;
          }
          for (const auto& x : v) {
            Interval inv{1 / S.hi, 1 / S.lo};
            Interval q = imul(x, inv);
            if (q.hi - q.lo > width) good = false;
            prof[g].push_back({false, 0, q.lo, q.hi});
          }
        }
        if (good) {
          e.profile = std::move(prof);
          break;
        }
        if (round == 63) {
          std::ostringstream msg;
          msg << "coordinate sum vanishes at root in [" << to_string(e.root.lo) << ", " << to_string(e.root.hi) << "]";
          throw std::runtime_error(msg.str());
        }
        refine_to(R.P, e.root, (e.root.hi - e.root.lo) / 65536);
      }
    }
    rep.equilibria.push_back(std::move(e));
  }
  return rep;
}

bool exact_profile(const EquilibriumRecord& e, MixedProfile& out) {
  out.clear();
  for (const auto& grp : e.profile) {
    std::vector<Rational> v;
    for (const auto& c : grp) {
      if (!c.exact) return false;
      v.push_back(c.value);
    }
    out.push_back(std::move(v));
  }
  return true;
}

int count_tmne(const Game& game, std::uint64_t seed, const SolverOptions& opts) {
  return extract_tmne(geometric_resolution(game, seed, opts), game).count;
}

MaxCertificate certify_from_resolution(const GeometricResolution& R, const Game& game) {
  MaxCertificate cert;
  const Integer dl = delta(game.shape.dims());
  if (dl == 0) throw std::invalid_argument("infeasible shape");
  cert.delta = dl.get_si();
  const int d = R.P.degree();
  if (d >= 1) cert.S0_value = resultant_uni(R.P, R.P_prime);
  if (d < cert.delta) {
    cert.verdict = false;
    cert.reason = "non-generic payoffs";
    return cert;
  }
  bool all_positive = true;
  for (const auto& [v, w] : R.W) {
    QMatrix H = scaled_trace_matrix(R.P, R.P_prime * w, nullptr, 4 * d - 4);
    UniPoly chi = berkowitz_charpoly(H);
    std::vector<Rational> S;
    std::vector<int> sg;
    for (int h = 0; h < d; ++h) {
      Rational s = ((d - h) % 2 == 0) ? chi.coeff(h) : Rational(-chi.coeff(h));
      sg.push_back(sign(s));
      if (sign(s) <= 0) all_positive = false;
      S.push_back(std::move(s));
    }
    cert.charpoly_coeffs[v] = std::move(S);
    cert.signs[v] = std::move(sg);
  }
  if (cert.S0_value == 0) {
    cert.reason = "S0 vanishes";
  } else if (!all_positive) {
    cert.reason = "sign condition fails";
  } else {
    cert.verdict = true;
    cert.reason = "certified";
  }
  if (cert.verdict && extract_tmne(R, game).count != cert.delta)
    throw std::logic_error("certificate holds but the equilibrium count differs from delta");
  return cert;
}

MaxCertificate certify_max(const Game& game, std::uint64_t seed, const SolverOptions& opts) {
  if (delta(game.shape.dims()) == 0) throw std::invalid_argument("infeasible shape");
  return certify_from_resolution(geometric_resolution(game, seed, opts), game);
}

}  // namespace tmne
