#pragma once

#include "tmne/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace tmne {

// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of T^k.
// The zero polynomial has no coefficients and degree kZeroDegree.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int k);
  static UniPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& lc() const;

  Rational operator()(const Rational& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  UniPoly primitive() const;
  // p(-T)
  UniPoly reflect() const;
  // p(a + b T)
  UniPoly compose_linear(const Rational& a, const Rational& b) const;
  UniPoly compose(const UniPoly& q) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const char* var = "T") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder over Q. Throws std::domain_error on zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact; throws if remainder != 0
UniPoly operator%(const UniPoly& a, const UniPoly& b);
// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly prem(const UniPoly& a, const UniPoly& b);

struct SubresultantGcd {
  UniPoly gcd;                      // monic
  std::vector<int> degree_sequence; // degrees of the nonzero PRS members, ending at deg(gcd)
};

SubresultantGcd subresultant_gcd(const UniPoly& p, const UniPoly& q);
UniPoly gcd(const UniPoly& p, const UniPoly& q);
// Returns (g, s, t) with s*p + t*q = g, g monic.
struct ExtGcd {
  UniPoly g, s, t;
};
ExtGcd ext_gcd(const UniPoly& p, const UniPoly& q);
// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);
Rational resultant_uni(const UniPoly& p, const UniPoly& q);

// Unique polynomial of degree < xs.size() through the points.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace tmne
