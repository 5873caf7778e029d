#pragma once

#include <stdexcept>
#include <vector>

#include "hessenberg/perm.hpp"
#include "hessenberg/scalars.hpp"

namespace hessenberg {

// Dense n x n matrix over an exact scalar type, 1-based indexing.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, F(0)) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 1; i <= n; ++i) m(i, i) = F(1);
    return m;
  }

  int size() const { return n_; }
  F& operator()(int i, int j) { return a_[static_cast<size_t>(i - 1) * n_ + (j - 1)]; }
  const F& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    const int n = x.n_;
    Matrix r(n);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        const F& xik = x(i, k);
        if (xik == F(0)) continue;
        for (int j = 1; j <= n; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r(x.n_);
    for (size_t t = 0; t < r.a_.size(); ++t) r.a_[t] = x.a_[t] + y.a_[t];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r(x.n_);
    for (size_t t = 0; t < r.a_.size(); ++t) r.a_[t] = x.a_[t] - y.a_[t];
    return r;
  }

  bool operator==(const Matrix&) const = default;

  bool is_upper_triangular() const {
    for (int i = 2; i <= n_; ++i)
      for (int j = 1; j < i; ++j)
        if (!((*this)(i, j) == F(0))) return false;
    return true;
  }
  bool is_unit_upper_triangular() const {
    if (!is_upper_triangular()) return false;
    for (int i = 1; i <= n_; ++i)
      if (!((*this)(i, i) == F(1))) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<F> a_;
};

// Inverse of a unit upper-triangular matrix (back substitution, exact).
template <class F>
Matrix<F> unipotent_inverse(const Matrix<F>& u) {
  const int n = u.size();
  Matrix<F> v = Matrix<F>::identity(n);
  for (int j = 2; j <= n; ++j)
    for (int i = j - 1; i >= 1; --i) {
      F s(0);
      for (int k = i + 1; k <= j; ++k) s += u(i, k) * v(k, j);
      v(i, j) = -s;
    }
  return v;
}

// u^{-1} X u for unit upper-triangular u.
template <class F>
Matrix<F> conjugate(const Matrix<F>& u, const Matrix<F>& x) {
  if (!u.is_unit_upper_triangular())
    throw std::invalid_argument("conjugate: u is not unit upper-triangular");
  return unipotent_inverse(u) * (x * u);
}

// Permutation matrix with row i equal to e_{w(i)}.
template <class F>
Matrix<F> permutation_matrix(const Perm& w) {
  Matrix<F> m(w.size());
  for (int i = 1; i <= w.size(); ++i) m(i, w(i)) = F(1);
  return m;
}

// w^{-1} M w; entry (a,b) of the result is M(w^{-1}(a), w^{-1}(b)).
template <class F>
Matrix<F> conjugate_by_permutation(const Perm& w, const Matrix<F>& m) {
  const Perm winv = w.inverse();
  Matrix<F> r(m.size());
  for (int a = 1; a <= m.size(); ++a)
    for (int b = 1; b <= m.size(); ++b) r(a, b) = m(winv(a), winv(b));
  return r;
}

// The subgroup element of the i-th row group: identity except row i right of
// the diagonal.
template <class F>
Matrix<F> row_matrix(int i, const std::vector<F>& entries, int n) {
  Matrix<F> m = Matrix<F>::identity(n);
  for (int k = i + 1; k <= n; ++k) m(i, k) = entries[k - i - 1];
  return m;
}

}  // namespace hessenberg
