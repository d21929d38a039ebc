#pragma once

#include "tmne/qmatrix.hpp"
#include "tmne/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tmne {

constexpr int kMaxVars = 32;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  int deg = 0;
  friend bool operator==(const Mono& a, const Mono& b) { return a.deg == b.deg && a.e == b.e; }
};

Mono mono_var(int v);
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_lcm(const Mono& a, const Mono& b, int n);
bool mono_divides(const Mono& a, const Mono& b, int n);  // a | b
Mono mono_div(const Mono& b, const Mono& a, int n);        // b / a
// Graded reverse lexicographic order on the first n variables: -1, 0, 1.
int grevlex_cmp(const Mono& a, const Mono& b, int n);

struct Term {
  Mono m;
  Rational c;
};

// Sparse polynomial in n variables, terms sorted by decreasing grevlex.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int nvars) : n_(nvars) {}
  static MPoly from_terms(int nvars, std::vector<Term> terms);  // sorts and combines

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lt() const { return t_.front(); }
  MPoly monic() const;
  void drop_lt() { t_.erase(t_.begin()); }
  MPoly mul_term(const Mono& m, const Rational& c) const;
  // this - c * m * g
  MPoly sub_mul(const Rational& c, const Mono& m, const MPoly& g) const;
  Rational evaluate(const std::vector<Rational>& x) const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);

 private:
  int n_ = 0;
  std::vector<Term> t_;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

// Reduced Groebner basis for grevlex.
class GroebnerBasis {
 public:
  GroebnerBasis(int nvars, const std::vector<MPoly>& gens);

  int nvars() const { return n_; }
  const std::vector<MPoly>& basis() const { return G_; }
  bool is_unit() const;        // ideal is (1)
  bool zero_dimensional() const;  // finite affine variety (includes the empty case)
  MPoly normal_form(const MPoly& f) const;
  // Standard monomials; requires zero_dimensional().
  const std::vector<Mono>& standard_monomials() const;
  // Matrix of multiplication by x_v on the quotient, columns indexed by the
  // standard monomials (column b holds the coordinates of NF(x_v * b)).
  QMatrix multiplication_matrix(int v) const;
  // Coordinates of NF(f) on the standard monomials.
  std::vector<Rational> coordinates(const MPoly& f) const;
  const GroebnerStats& stats() const { return stats_; }

 private:
  int n_;
  std::vector<MPoly> G_;
  mutable std::vector<Mono> std_;
  mutable bool std_ready_ = false;
  GroebnerStats stats_;
};

}  // namespace tmne
