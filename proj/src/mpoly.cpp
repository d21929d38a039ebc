#include "tmne/mpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tmne {

Mono mono_var(int v) {
  Mono m;
  m.e[static_cast<std::size_t>(v)] = 1;
  m.deg = 1;
  return m;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a.e[static_cast<std::size_t>(i)] + b.e[static_cast<std::size_t>(i)]);
  m.deg = a.deg + b.deg;
  return m;
}

Mono mono_lcm(const Mono& a, const Mono& b, int n) {
  Mono m;
  for (int i = 0; i < n; ++i) {
    auto is = static_cast<std::size_t>(i);
    m.e[is] = std::max(a.e[is], b.e[is]);
    m.deg += m.e[is];
  }
  return m;
}

bool mono_divides(const Mono& a, const Mono& b, int n) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < n; ++i)
    if (a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)]) return false;
  return true;
}

Mono mono_div(const Mono& b, const Mono& a, int n) {
  Mono m;
  for (int i = 0; i < n; ++i) {
    auto is = static_cast<std::size_t>(i);
    m.e[is] = static_cast<std::uint8_t>(b.e[is] - a.e[is]);
  }
  m.deg = b.deg - a.deg;
  return m;
}

int grevlex_cmp(const Mono& a, const Mono& b, int n) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = n - 1; i >= 0; --i) {
    auto is = static_cast<std::size_t>(i);
    if (a.e[is] != b.e[is]) return a.e[is] < b.e[is] ? 1 : -1;
  }
  return 0;
}

MPoly MPoly::from_terms(int nvars, std::vector<Term> terms) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
  std::sort(terms.begin(), terms.end(), [nvars](const Term& x, const Term& y) { return grevlex_cmp(x.m, y.m, nvars) > 0; });
  MPoly p(nvars);
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) p.t_.back().c += t.c;
    else p.t_.push_back(std::move(t));
    if (sgn(p.t_.back().c) == 0) p.t_.pop_back();
  }
  return p;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  MPoly p = *this;
  Rational inv = 1 / t_.front().c;
  for (auto& t : p.t_) t.c *= inv;
  return p;
}

MPoly MPoly::mul_term(const Mono& m, const Rational& c) const {
  MPoly p(n_);
  if (sgn(c) == 0) return p;
  p.t_.reserve(t_.size());
  for (const auto& t : t_) p.t_.push_back({mono_mul(t.m, m), t.c * c});
  return p;
}

MPoly MPoly::sub_mul(const Rational& c, const Mono& m, const MPoly& g) const {
  MPoly out(n_);
  out.t_.reserve(t_.size() + g.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < g.t_.size()) {
    if (j == g.t_.size()) {
      out.t_.push_back(t_[i++]);
      continue;
    }
    Mono gm = mono_mul(g.t_[j].m, m);
    int cmp = i == t_.size() ? -1 : grevlex_cmp(t_[i].m, gm, n_);
    if (cmp > 0) {
      out.t_.push_back(t_[i++]);
    } else if (cmp < 0) {
      out.t_.push_back({gm, -c * g.t_[j].c});
      ++j;
    } else {
      Rational v = t_[i].c - c * g.t_[j].c;
      if (sgn(v) != 0) out.t_.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Rational MPoly::evaluate(const std::vector<Rational>& x) const {
  Rational acc = 0;
  for (const auto& t : t_) {
    Rational v = t.c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < t.m.e[static_cast<std::size_t>(i)]; ++k) v *= x[static_cast<std::size_t>(i)];
    acc += v;
  }
  return acc;
}

MPoly operator+(const MPoly& a, const MPoly& b) { return a.sub_mul(Rational(-1), Mono{}, b); }
MPoly operator-(const MPoly& a, const MPoly& b) { return a.sub_mul(Rational(1), Mono{}, b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly acc(a.n_);
  for (const auto& t : b.t_) acc = acc.sub_mul(-t.c, t.m, a);
  return acc;
}

namespace {

// Full reduction of f by the polynomials G (all with leading coefficient 1).
MPoly reduce(const MPoly& f, const std::vector<const MPoly*>& G, int n) {
  std::vector<Term> rem;
  MPoly p = f;
  while (!p.is_zero()) {
    const Term& lt = p.lt();
    const MPoly* div = nullptr;
    for (const MPoly* g : G)
      if (mono_divides(g->lt().m, lt.m, n)) {
        div = g;
        break;
      }
    if (div) {
      Rational c = lt.c;  // divisor is monic
      Mono q = mono_div(lt.m, div->lt().m, n);
      p = p.sub_mul(c, q, *div);
    } else {
      rem.push_back(lt);
      p.drop_lt();
    }
  }
  return MPoly::from_terms(n, std::move(rem));
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
};

}  // namespace

GroebnerBasis::GroebnerBasis(int nvars, const std::vector<MPoly>& gens) : n_(nvars) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
  std::vector<MPoly> polys;  // every polynomial ever added
  std::vector<std::size_t> G;  // indices of the current basis
  std::vector<Pair> B;

  auto lm = [&](std::size_t k) -> const Mono& { return polys[k].lt().m; };
  auto coprime = [&](const Mono& a, const Mono& b) {
    for (int v = 0; v < n_; ++v)
      if (a.e[static_cast<std::size_t>(v)] && b.e[static_cast<std::size_t>(v)]) return false;
    return true;
  };

  // Gebauer-Moeller update with the new polynomial h.
  auto update = [&](std::size_t h) {
    const Mono& mh = lm(h);
    std::vector<Pair> C;
    for (std::size_t g : G) C.push_back({g, h, mono_lcm(lm(g), mh, n_)});
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(lm(p.i), mh);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < C.size() && keep; ++b)
          if (b > a && mono_divides(C[b].lcm, p.lcm, n_)) keep = false;
        for (const Pair& q : D)
          if (keep && mono_divides(q.lcm, p.lcm, n_)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (const Pair& p : D)
      if (!coprime(lm(p.i), mh)) E.push_back(p);
    std::vector<Pair> Bn;
    for (const Pair& p : B) {
      bool drop = mono_divides(mh, p.lcm, n_) && !(mono_lcm(lm(p.i), mh, n_) == p.lcm) &&
                  !(mono_lcm(lm(p.j), mh, n_) == p.lcm);
      if (!drop) Bn.push_back(p);
    }
    for (auto& p : E) Bn.push_back(p);
    B = std::move(Bn);
    std::vector<std::size_t> Gn;
    for (std::size_t g : G)
      if (!mono_divides(mh, lm(g), n_)) Gn.push_back(g);
    Gn.push_back(h);
    G = std::move(Gn);
  };

  auto current = [&]() {
    std::vector<const MPoly*> v;
    for (std::size_t g : G) v.push_back(&polys[g]);
    return v;
  };

  // Insert generators in increasing order of leading monomial.
  std::vector<MPoly> init;
  for (const auto& f : gens)
    if (!f.is_zero()) init.push_back(f.monic());
  std::sort(init.begin(), init.end(), [&](const MPoly& a, const MPoly& b) { return grevlex_cmp(a.lt().m, b.lt().m, n_) < 0; });
  for (auto& f : init) {
    MPoly h = reduce(f, current(), n_);
    if (h.is_zero()) continue;
    polys.push_back(h.monic());
    update(polys.size() - 1);
  }

  while (!B.empty()) {
    // normal selection strategy
    auto it = std::min_element(B.begin(), B.end(), [&](const Pair& a, const Pair& b) { return grevlex_cmp(a.lcm, b.lcm, n_) < 0; });
    Pair p = *it;
    B.erase(it);
    const MPoly& f = polys[p.i];
    const MPoly& g = polys[p.j];
    MPoly s = f.mul_term(mono_div(p.lcm, f.lt().m, n_), Rational(1))
                  .sub_mul(Rational(1), mono_div(p.lcm, g.lt().m, n_), g);
    ++stats_.pairs_reduced;
    MPoly h = reduce(s, current(), n_);
    if (h.is_zero()) {
      ++stats_.zero_reductions;
      continue;
    }
    polys.push_back(h.monic());
    update(polys.size() - 1);
    if (polys.back().lt().m.deg == 0) break;  // unit ideal
  }

  // Interreduce the minimal basis.
  std::vector<MPoly> minimal;
  for (std::size_t g : G) minimal.push_back(polys[g]);
  if (std::any_of(minimal.begin(), minimal.end(), [](const MPoly& q) { return q.lt().m.deg == 0; })) {
    G_ = {MPoly::from_terms(n_, {Term{Mono{}, Rational(1)}})};
    return;
  }
  std::sort(minimal.begin(), minimal.end(), [&](const MPoly& a, const MPoly& b) { return grevlex_cmp(a.lt().m, b.lt().m, n_) < 0; });
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const MPoly*> others;
    for (std::size_t t = 0; t < minimal.size(); ++t)
      if (t != k) others.push_back(&minimal[t]);
    // reduce only the tail
    MPoly tail = minimal[k];
    tail.drop_lt();
    MPoly red = reduce(tail, others, n_);
    std::vector<Term> terms{minimal[k].lt()};
    terms.insert(terms.end(), red.terms().begin(), red.terms().end());
    minimal[k] = MPoly::from_terms(n_, std::move(terms));
  }
  G_ = std::move(minimal);
}

bool GroebnerBasis::is_unit() const { return G_.size() == 1 && G_[0].lt().m.deg == 0; }

bool GroebnerBasis::zero_dimensional() const {
  if (is_unit()) return true;
  for (int v = 0; v < n_; ++v) {
    bool found = false;
    for (const auto& g : G_) {
      const Mono& m = g.lt().m;
      if (m.deg > 0 && m.e[static_cast<std::size_t>(v)] == m.deg) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

MPoly GroebnerBasis::normal_form(const MPoly& f) const {
  std::vector<const MPoly*> v;
  for (const auto& g : G_) v.push_back(&g);
  return reduce(f, v, n_);
}

const std::vector<Mono>& GroebnerBasis::standard_monomials() const {
  if (std_ready_) return std_;
  if (!zero_dimensional()) throw std::logic_error("standard monomials of a positive-dimensional ideal");
  std_.clear();
  if (!is_unit()) {
    // breadth-first over monomials not divisible by any leading monomial
    std::vector<Mono> frontier{Mono{}};
    std::vector<Mono> seen;
    auto standard = [&](const Mono& m) {
      for (const auto& g : G_)
        if (mono_divides(g.lt().m, m, n_)) return false;
      return true;
    };
    while (!frontier.empty()) {
      std::vector<Mono> next;
      for (const auto& m : frontier) {
        if (!standard(m)) continue;
        if (std::find(std_.begin(), std_.end(), m) != std_.end()) continue;
        std_.push_back(m);
        for (int v = 0; v < n_; ++v) next.push_back(mono_mul(m, mono_var(v)));
      }
      frontier = std::move(next);
    }
    std::sort(std_.begin(), std_.end(), [&](const Mono& a, const Mono& b) { return grevlex_cmp(a, b, n_) < 0; });
  }
  std_ready_ = true;
  return std_;
}

std::vector<Rational> GroebnerBasis::coordinates(const MPoly& f) const {
  const auto& S = standard_monomials();
  std::vector<Rational> c(S.size());
  MPoly r = normal_form(f);
  for (const auto& t : r.terms()) {
    auto it = std::lower_bound(S.begin(), S.end(), t.m, [&](const Mono& a, const Mono& b) { return grevlex_cmp(a, b, n_) < 0; });
    if (it == S.end() || !(*it == t.m)) throw std::logic_error("normal form left the standard monomials");
    c[static_cast<std::size_t>(it - S.begin())] = t.c;
  }
  return c;
}

QMatrix GroebnerBasis::multiplication_matrix(int v) const {
  const auto& S = standard_monomials();
  QMatrix M(S.size(), S.size());
  for (std::size_t b = 0; b < S.size(); ++b) {
    MPoly f = MPoly::from_terms(n_, {Term{mono_mul(S[b], mono_var(v)), Rational(1)}});
    auto c = coordinates(f);
    for (std::size_t a = 0; a < S.size(); ++a) M(a, b) = c[a];
  }
  return M;
}

}  // namespace tmne
