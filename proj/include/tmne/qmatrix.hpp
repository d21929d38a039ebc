#pragma once

#include "tmne/rational.hpp"
#include "tmne/unipoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tmne {

struct QMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> entries;  // row-major

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  static QMatrix identity(std::size_t n);

  Rational& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  bool is_square() const { return rows == cols; }
  Rational trace() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

// Element of R[s]/(s^2). Used to carry one directional derivative through
// division-free computations.
template <class R>
struct Dual {
  R a{}, b{};
  Dual() = default;
  Dual(R x) : a(std::move(x)) {}
  Dual(R x, R y) : a(std::move(x)), b(std::move(y)) {}
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator-(const Dual& x) { return {-x.a, -x.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
  Dual& operator+=(const Dual& y) { return *this = *this + y; }
  Dual& operator-=(const Dual& y) { return *this = *this - y; }
};

// Berkowitz: coefficients of det(T*I - A), index = degree, using only ring
// operations. A is given as a dense row-major n x n array.
template <class R>
std::vector<R> berkowitz(const std::vector<R>& A, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> const R& { return A[i * n + j]; };
  // vect holds coefficients of the leading r x r charpoly, highest degree first.
  std::vector<R> vect{R(Rational(1))};
  for (std::size_t r = 0; r < n; ++r) {
    // q_0 = 1, q_1 = -a_rr, q_k = -R A_r^(k-2) S
    std::vector<R> q(r + 2);
    q[0] = R(Rational(1));
    q[1] = -at(r, r);
    std::vector<R> v(r);  // A_r^k S
    for (std::size_t i = 0; i < r; ++i) v[i] = at(i, r);
    for (std::size_t k = 2; k < r + 2; ++k) {
      R s{};
      for (std::size_t j = 0; j < r; ++j) s += at(r, j) * v[j];
      q[k] = -s;
      if (k + 1 < r + 2) {
        std::vector<R> w(r);
        for (std::size_t i = 0; i < r; ++i) {
          R t{};
          for (std::size_t j = 0; j < r; ++j) t += at(i, j) * v[j];
          w[i] = t;
        }
        v = std::move(w);
      }
    }
    std::vector<R> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      R s{};
      for (std::size_t j = 0; j <= i && j < vect.size(); ++j) s += q[i - j] * vect[j];
      next[i] = s;
    }
    vect = std::move(next);
  }
  std::vector<R> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = vect[n - k];
  return out;
}

UniPoly berkowitz_charpoly(const QMatrix& M);

// Exact linear algebra over Q by fraction-full Gaussian elimination.
Rational determinant(const QMatrix& M);
std::size_t rank(const QMatrix& M);
// det(X) and d/ds det(X + sY) at s = 0, i.e. tr(adj(X) Y). Requires det(X) != 0;
// returns false otherwise.
bool determinant_with_derivatives(const QMatrix& X, const std::vector<QMatrix>& Ys, Rational& det,
                                  std::vector<Rational>& ddet);
// Characteristic polynomial through Gaussian elimination on T*I - M over Q(T)
// evaluated at deg+1 points. Independent of Berkowitz; used as a cross-check.
UniPoly charpoly_by_interpolation(const QMatrix& M);

// Number of sign changes in a coefficient sequence, zeros skipped.
int sign_changes(const std::vector<Rational>& coeffs);

}  // namespace tmne
