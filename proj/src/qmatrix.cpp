#include "tmne/qmatrix.hpp"

namespace tmne {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

Rational QMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows; ++i) t += (*this)(i, i);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product: dimension mismatch");
  QMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix sum: dimension mismatch");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] += b.entries[i];
  return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix c = a;
  for (auto& e : c.entries) e *= s;
  return c;
}

UniPoly berkowitz_charpoly(const QMatrix& M) {
  if (!M.is_square()) throw std::invalid_argument("berkowitz_charpoly: non-square matrix");
  return UniPoly(berkowitz<Rational>(M.entries, M.rows));
}

namespace {

// Row echelon form in place; returns rank and the sign/product needed for det.
std::size_t eliminate(QMatrix& A, Rational* det) {
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t piv = r;
    while (piv < A.rows && sgn(A(piv, c)) == 0) ++piv;
    if (piv == A.rows) {
      d = 0;
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(piv, j), A(r, j));
      d = -d;
    }
    Rational inv = 1 / A(r, c);
    d *= A(r, c);
    for (std::size_t i = r + 1; i < A.rows; ++i) {
      if (sgn(A(i, c)) == 0) continue;
      Rational f = A(i, c) * inv;
      for (std::size_t j = c; j < A.cols; ++j) A(i, j) -= f * A(r, j);
    }
    ++r;
  }
  if (det) *det = r == A.rows && A.rows == A.cols ? d : Rational(0);
  return r;
}

}  // namespace

Rational determinant(const QMatrix& M) {
  if (!M.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  if (M.rows == 0) return 1;
  QMatrix A = M;
  Rational d;
  eliminate(A, &d);
  return d;
}

std::size_t rank(const QMatrix& M) {
  QMatrix A = M;
  return eliminate(A, nullptr);
}

bool determinant_with_derivatives(const QMatrix& X, const std::vector<QMatrix>& Ys, Rational& det,
                                  std::vector<Rational>& ddet) {
  std::size_t n = X.rows;
  if (!X.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  // Gauss-Jordan on [X | I] to get det(X) and X^{-1}.
  QMatrix A(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = X(i, j);
    A(i, n + i) = 1;
  }
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(A(piv, c)) == 0) ++piv;
    if (piv == n) return false;
    if (piv != c) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(A(piv, j), A(c, j));
      d = -d;
    }
    d *= A(c, c);
    Rational inv = 1 / A(c, c);
    for (std::size_t j = c; j < 2 * n; ++j) A(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(A(i, c)) == 0) continue;
      Rational f = A(i, c);
      for (std::size_t j = c; j < 2 * n; ++j) A(i, j) -= f * A(c, j);
    }
  }
  det = d;
  ddet.assign(Ys.size(), Rational(0));
  for (std::size_t k = 0; k < Ys.size(); ++k) {
    const QMatrix& Y = Ys[k];
    Rational t = 0;
    // tr(X^{-1} Y) = sum_{a,b} inv(a,b) Y(b,a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a) {
        const Rational& y = Y(b, a);
        if (sgn(y) == 0) continue;
        t += A(a, n + b) * y;
      }
    ddet[k] = t * d;
  }
  return true;
}

UniPoly charpoly_by_interpolation(const QMatrix& M) {
  if (!M.is_square()) throw std::invalid_argument("charpoly: non-square matrix");
  std::size_t n = M.rows;
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational t(static_cast<long>(k));
    QMatrix A = M;
    for (auto& e : A.entries) e = -e;
    for (std::size_t i = 0; i < n; ++i) A(i, i) += t;
    xs.push_back(t);
    ys.push_back(determinant(A));
  }
  return interpolate(xs, ys);
}

int sign_changes(const std::vector<Rational>& coeffs) {
  int changes = 0, last = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace tmne
