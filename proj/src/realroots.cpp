#include "tmne/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmne {

namespace {

Rational cauchy_bound(const UniPoly& p) {
  Rational m = 0;
  Rational l = abs(p.lc());
  for (int k = 0; k < p.degree(); ++k) m = std::max<Rational>(m, abs(p.coeff(k)) / l);
  // power of two strictly above 1 + m
  Rational b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

}  // namespace

int descartes_bound(const UniPoly& p, const Rational& a, const Rational& b) {
  // q(y) = p(a + (b - a) y); r(x) = (1 + x)^d q(1 / (1 + x)) = rev(q)(x + 1)
  UniPoly q = p.compose_linear(a, b - a);
  std::vector<Rational> rc(q.coeffs().rbegin(), q.coeffs().rend());
  UniPoly r = UniPoly(rc).compose_linear(1, 1);
  return sign_changes(r.coeffs());
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p0) {
  if (p0.is_zero()) throw std::invalid_argument("zero input");
  UniPoly p = squarefree_part(p0);
  std::vector<IsolatingInterval> out;
  if (p.degree() <= 0) return out;
  Rational B = cauchy_bound(p);
  std::vector<std::pair<Rational, Rational>> stack{{-B, B}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int v = descartes_bound(p, a, b);
    if (v == 0) continue;
    // an exact root found earlier may sit on an endpoint; split until it does not
    if (v == 1 && sgn(p(a)) != 0 && sgn(p(b)) != 0) {
      out.push_back({a, b, true});
      continue;
    }
    Rational m = (a + b) / 2;
    if (sgn(p(m)) == 0) out.push_back({m, m, true});
    stack.push_back({a, m});
    stack.push_back({m, b});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return out;
}

void refine(const UniPoly& p, IsolatingInterval& iv) {
  if (iv.exact()) return;
  Rational m = (iv.lo + iv.hi) / 2;
  int sm = sgn(p(m));
  if (sm == 0) {
    iv.lo = iv.hi = m;
    return;
  }
  if (sm == sgn(p(iv.lo))) iv.lo = m;
  else iv.hi = m;
}

void refine_to(const UniPoly& p, IsolatingInterval& iv, const Rational& width) {
  while (!iv.exact() && iv.hi - iv.lo > width) refine(p, iv);
}

int sign_at_root(const UniPoly& p, IsolatingInterval& iv, const UniPoly& q) {
  if (q.is_zero()) return 0;
  if (iv.exact()) return sgn(q(iv.lo));
  UniPoly g = gcd(p, q);
  if (g.degree() > 0 && sgn(g(iv.lo)) * sgn(g(iv.hi)) < 0) return 0;
  while (!iv.exact() && descartes_bound(q, iv.lo, iv.hi) > 0) refine(p, iv);
  if (iv.exact()) return sgn(q(iv.lo));
  return sgn(q((iv.lo + iv.hi) / 2));
}

bool rational_root(const UniPoly& p0, IsolatingInterval& iv, Rational& root) {
  if (iv.exact()) {
    root = iv.lo;
    return true;
  }
  // A rational root u/v of the primitive integer p has v | lc(p); two distinct
  // such rationals differ by at least 1/lc^2, so the simplest rational in a
  // short enough interval is the only candidate.
  UniPoly p = p0.primitive();
  Rational l = abs(p.lc());
  Rational w = 1 / (l * l * 2);
  refine_to(p, iv, w);
  if (iv.exact()) {
    root = iv.lo;
    return true;
  }
  // simplest rational in [lo, hi] via continued fractions
  auto simplest = [](Rational lo, Rational hi) {
    // Stern-Brocot descent expressed with floor operations.
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // convergent bookkeeping
    std::vector<Integer> terms;
    while (true) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      if (Rational(fl) == lo) {
        terms.push_back(fl);
        break;
      }
      Integer fh;
      mpz_fdiv_q(fh.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
      if (fl < fh) {
        terms.push_back(fl + 1);
        break;
      }
      terms.push_back(fl);
      Rational nlo = 1 / (hi - Rational(fl)), nhi = 1 / (lo - Rational(fl));
      lo = nlo;
      hi = nhi;
    }
    for (const auto& a : terms) {
      Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
    }
    Rational r(p1, q1);
    r.canonicalize();
    return r;
  };
  Rational c = simplest(iv.lo, iv.hi);
  if (sgn(p(c)) == 0) {
    root = c;
    iv.lo = iv.hi = c;
    return true;
  }
  return false;
}

SignedRootCount count_real_roots_with_signs(const UniPoly& p0, const std::vector<UniPoly>& qs) {
  if (p0.is_zero()) throw std::invalid_argument("zero input");
  UniPoly p = squarefree_part(p0);
  SignedRootCount out;
  for (auto iv : isolate_real_roots(p)) {
    std::vector<int> s;
    s.reserve(qs.size());
    bool all_pos = true, all_neg = true;
    for (const auto& q : qs) {
      int v = sign_at_root(p, iv, q);
      s.push_back(v);
      all_pos = all_pos && v > 0;
      all_neg = all_neg && v < 0;
    }
    if (qs.empty()) all_neg = false;
    if (all_pos) ++out.pos_count;
    if (all_neg) ++out.neg_count;
    if (all_pos || all_neg) {
      out.roots.push_back(iv);
      out.signs.push_back(std::move(s));
    }
  }
  return out;
}

QMatrix scaled_trace_matrix(const UniPoly& p, const UniPoly& q, int* Kout, int K_min) {
  int d = p.degree();
  if (d < 1) throw std::invalid_argument("trace form needs deg p >= 1");
  const Rational& pd = p.lc();
  // M = matrix of multiplication by p_d*T on the monomial basis of Q[T]/(p).
  QMatrix M(static_cast<size_t>(d), static_cast<size_t>(d));
  for (int i = 0; i + 1 < d; ++i) M(static_cast<size_t>(i + 1), static_cast<size_t>(i)) = pd;
  for (int i = 0; i < d; ++i) M(static_cast<size_t>(i), static_cast<size_t>(d - 1)) = -p.coeff(i);
  int maxdeg = 2 * d - 2 + std::max(q.degree(), 0);
  int K = std::max(maxdeg, K_min);
  if (K % 2 != 0) ++K;
  if (Kout) *Kout = K;
  std::vector<Rational> tr(static_cast<size_t>(maxdeg) + 1);
  QMatrix P = QMatrix::identity(static_cast<size_t>(d));
  for (int h = 0; h <= maxdeg; ++h) {
    tr[static_cast<size_t>(h)] = P.trace();
    if (h < maxdeg) P = P * M;
  }
  std::vector<Rational> pdpow(static_cast<size_t>(K) + 1);
  pdpow[0] = 1;
  for (int k = 1; k <= K; ++k) pdpow[static_cast<size_t>(k)] = pdpow[static_cast<size_t>(k - 1)] * pd;
  QMatrix H(static_cast<size_t>(d), static_cast<size_t>(d));
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      Rational s = 0;
      for (int k = 0; k <= q.degree(); ++k) {
        const Rational& bh = q.coeffs()[static_cast<size_t>(k)];
        if (sgn(bh) == 0) continue;
        int h = a + b + k;
        s += pdpow[static_cast<size_t>(K - h)] * bh * tr[static_cast<size_t>(h)];
      }
      H(static_cast<size_t>(a), static_cast<size_t>(b)) = s;
      H(static_cast<size_t>(b), static_cast<size_t>(a)) = s;
    }
  return H;
}

int signature_from_charpoly(const UniPoly& chi) {
  return sign_changes(chi.coeffs()) - sign_changes(chi.reflect().coeffs());
}

int hermite_signature(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero()) throw std::invalid_argument("zero input");
  if (!is_squarefree(p)) throw std::invalid_argument("requires square-free modulus");
  if (p.degree() == 0 || q.is_zero()) return 0;
  QMatrix H = scaled_trace_matrix(p, q);
  return signature_from_charpoly(berkowitz_charpoly(H));
}

}  // namespace tmne
