#include "tmne/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tmne {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<size_t>(k) + 1);
  v[static_cast<size_t>(k)] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<size_t>(k)];
}

const Rational& UniPoly::lc() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  Rational inv = 1 / lc();
  r *= inv;
  return r;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  Integer l = 1, g = 0;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> v(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) {
    v[k] = c_[k] * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[k].get_num_mpz_t());
  }
  if (sgn(v.back()) < 0) g = -g;
  for (auto& c : v) c /= g;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::reflect() const {
  UniPoly r = *this;
  for (size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
  // Horner in the linear polynomial a + bT.
  UniPoly lin{a, b};
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly::constant(*it);
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + UniPoly::constant(*it);
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool unit = a == 1;
    if (!unit || k == 0) os << a.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  std::vector<Rational> q(static_cast<size_t>(a.degree() - db + 1));
  Rational inv = 1 / b.lc();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<size_t>(k)] * inv;
    if (sgn(f) == 0) continue;
    q[static_cast<size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= f * bc[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly prem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  Rational f = 1;
  Rational l = b.lc();
  for (int k = 0; k < a.degree() - b.degree() + 1; ++k) f *= l;
  return (a * f) % b;
}

SubresultantGcd subresultant_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (q.is_zero()) return {p.monic(), {p.degree()}};
  if (p.is_zero()) return {q.monic(), {q.degree()}};
  UniPoly a = p.primitive(), b = q.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  SubresultantGcd out;
  out.degree_sequence = {a.degree(), b.degree()};
  Rational g = 1, h = 1;
  while (b.degree() > 0) {
    int d = a.degree() - b.degree();
    UniPoly r = prem(a, b);
    if (r.is_zero()) break;
    out.degree_sequence.push_back(r.degree());
    Rational hd = 1;
    for (int k = 0; k < d; ++k) hd *= h;
    a = std::move(b);
    b = r * (1 / (g * hd));
    g = a.lc();
    // h <- g^d / h^(d-1)
    Rational gd = 1;
    for (int k = 0; k < d; ++k) gd *= g;
    if (d == 0) {
      // h unchanged
    } else {
      Rational hd1 = 1;
      for (int k = 0; k < d - 1; ++k) hd1 *= h;
      h = gd / hd1;
    }
  }
  out.gcd = b.degree() == 0 ? UniPoly::constant(1) : b.monic();
  return out;
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) { return subresultant_gcd(p, q).gcd; }

ExtGcd ext_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  UniPoly r0 = p, r1 = q, s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [qq, rr] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rr);
    UniPoly s2 = s0 - qq * s1, t2 = t0 - qq * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  ExtGcd e = ext_gcd(a % m, m);
  if (e.g.degree() != 0) throw std::domain_error("polynomial not invertible modulo m");
  return e.s % m;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero input");
  if (p.degree() == 0) return UniPoly::constant(1);
  UniPoly g = gcd(p, p.derivative());
  return (p / g).primitive();
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

Rational resultant_uni(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("zero input");
  // Euclidean recursion over Q:
  //   Res(p, q) = (-1)^(mn) lc(q)^(m - deg r) Res(q, r),  r = p mod q.
  Rational acc = 1;
  UniPoly a = p, b = q;
  while (true) {
    int m = a.degree(), n = b.degree();
    if (n == 0) {
      Rational c = b.lc();
      for (int k = 0; k < m; ++k) acc *= c;
      return acc;
    }
    if (m == 0) {
      Rational c = a.lc();
      for (int k = 0; k < n; ++k) acc *= c;
      return acc;
    }
    UniPoly r = a % b;
    if (r.is_zero()) return 0;
    if ((m * n) % 2 == 1) acc = -acc;
    Rational l = b.lc();
    for (int k = 0; k < m - r.degree(); ++k) acc *= l;
    a = std::move(b);
    b = std::move(r);
  }
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation: size mismatch");
  size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      Rational den = xs[i] - xs[i - j];
      if (sgn(den) == 0) throw std::invalid_argument("interpolation: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
      if (i == j) break;
    }
  UniPoly acc;
  for (size_t k = n; k-- > 0;) acc = acc * UniPoly{-xs[k], Rational(1)} + UniPoly::constant(dd[k]);
  return acc;
}

}  // namespace tmne
