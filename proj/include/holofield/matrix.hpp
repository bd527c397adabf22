#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "holofield/error.hpp"
#include "holofield/poly.hpp"
#include "holofield/rational.hpp"

namespace holofield {

/// Dense row-major matrix over an exact scalar type. Like Poly, it carries a
/// zero element so empty shapes still know their coefficient field.
template <class T>
class Matrix {
 public:
  Matrix()
    requires std::default_initializable<T>
      : Matrix(0, 0, zero_like(T())) {}
  Matrix(std::size_t rows, std::size_t cols)
    requires std::default_initializable<T>
      : Matrix(rows, cols, zero_like(T())) {}
  Matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), a_(rows * cols, zero), zero_(std::move(zero)) {}

  static Matrix identity(std::size_t n, const T& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols, const T& zero) {
    Matrix m(rows.size(), cols, zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, ErrorKind::InvalidInput, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    requires std::default_initializable<T>
  {
    return from_rows(rows, rows.empty() ? 0 : rows[0].size(), zero_like(T()));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> r;
    for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
    return r;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero_matrix() const {
    return std::all_of(a_.begin(), a_.end(), [](const T& x) { return detail::scalar_is_zero(x); });
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    require(x.rows_ == y.rows_ && x.cols_ == y.cols_, ErrorKind::InvalidInput, "matrix shape mismatch");
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    require(x.rows_ == y.rows_ && x.cols_ == y.cols_, ErrorKind::InvalidInput, "matrix shape mismatch");
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    require(x.cols_ == y.rows_, ErrorKind::InvalidInput, "matrix product shape mismatch");
    Matrix r(x.rows_, y.cols_, x.zero_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (detail::scalar_is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a_) v = s * v;
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  /// M * v for a column vector v.
  std::vector<T> apply(const std::vector<T>& v) const {
    require(v.size() == cols_, ErrorKind::InvalidInput, "matrix-vector shape mismatch");
    std::vector<T> r(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  template <class F, class U>
  Matrix<U> map(F&& f, const U& new_zero) const {
    Matrix<U> r(rows_, cols_, new_zero);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> a_;
  T zero_;
};

template <class T>
T trace(const Matrix<T>& m) {
  T t = m.zero();
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned n) {
  Matrix<T> r = Matrix<T>::identity(m.rows(), m.zero());
  Matrix<T> b = m;
  while (n > 0) {
    if (n & 1u) r = r * b;
    n >>= 1u;
    if (n > 0) b = b * b;
  }
  return r;
}

template <class T>
struct RrefResult {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class T>
RrefResult<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && detail::scalar_is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = one_like(m.zero()) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || detail::scalar_is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), r};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rank;
}

template <class T>
T determinant(Matrix<T> m) {
  require(m.is_square(), ErrorKind::InvalidInput, "determinant of a non-square matrix");
  T det = one_like(m.zero());
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && detail::scalar_is_zero(m(p, c))) ++p;
    if (p == n) return m.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = one_like(m.zero()) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (detail::scalar_is_zero(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  require(m.is_square(), ErrorKind::InvalidInput, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n, m.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one_like(m.zero());
  }
  const auto red = rref(std::move(aug));
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n, m.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
  return inv;
}

/// Particular solution of A x = b with every free variable set to zero.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  require(b.size() == a.rows(), ErrorKind::InvalidInput, "right-hand side shape mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1, a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto red = rref(std::move(aug));
  std::vector<T> x(a.cols(), a.zero());
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] == a.cols()) return std::nullopt;
    x[red.pivots[r]] = red.reduced(r, a.cols());
  }
  return x;
}

/// h(A) by Horner's rule.
template <class T>
Matrix<T> poly_of_matrix(const Poly<T>& h, const Matrix<T>& a) {
  require(a.is_square(), ErrorKind::InvalidInput, "polynomial of a non-square matrix");
  Matrix<T> acc(a.rows(), a.cols(), a.zero());
  const Matrix<T> id = Matrix<T>::identity(a.rows(), a.zero());
  for (std::size_t i = h.coeffs().size(); i-- > 0;) acc = acc * a + h[i] * id;
  return acc;
}

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recursion.
template <class T>
Poly<T> charpoly(const Matrix<T>& a) {
  require(a.is_square(), ErrorKind::InvalidInput, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const T zero = a.zero();
  std::vector<T> c(n + 1, zero);
  c[n] = one_like(zero);
  const Matrix<T> id = Matrix<T>::identity(n, zero);
  Matrix<T> m(n, n, zero);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    const T inv_k = one_like(zero) / from_rational(zero, Rational(static_cast<long>(k)));
    c[n - k] = -(trace(a * m) * inv_k);
  }
  return Poly<T>(std::move(c), zero);
}

/// A linear subspace of T^n stored only through its canonical RREF basis, so
/// two subspaces are equal exactly when their stored bases are equal.
template <class T>
class Subspace {
 public:
  Subspace(std::size_t ambient, const T& zero) : basis_(0, ambient, zero) {}

  static Subspace span(const Matrix<T>& rows) {
    auto red = rref(rows);
    Subspace s(rows.cols(), rows.zero());
    Matrix<T> b(red.rank, rows.cols(), rows.zero());
    for (std::size_t i = 0; i < red.rank; ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = red.reduced(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(red.pivots);
    return s;
  }
  static Subspace span(const std::vector<std::vector<T>>& vectors, std::size_t ambient, const T& zero) {
    return span(Matrix<T>::from_rows(vectors, ambient, zero));
  }
  static Subspace full(std::size_t n, const T& zero) { return span(Matrix<T>::identity(n, zero)); }

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<T>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::vector<T>> vectors() const { return basis_.to_rows(); }
  const T& zero() const { return basis_.zero(); }

  /// Coordinates of v in the stored basis; meaningful only when contains(v).
  std::vector<T> coordinates(const std::vector<T>& v) const {
    std::vector<T> c;
    c.reserve(pivots_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  bool contains(const std::vector<T>& v) const {
    require(v.size() == ambient_dim(), ErrorKind::InvalidInput, "vector length does not match ambient dimension");
    std::vector<T> r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const T c = r[pivots_[i]];
      if (detail::scalar_is_zero(c)) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * basis_(i, j);
    }
    return std::all_of(r.begin(), r.end(), [](const T& x) { return detail::scalar_is_zero(x); });
  }
  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Rows a with a . v == 0 for every v in this subspace.
  Matrix<T> equations() const {
    const std::size_t n = ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots_) is_pivot[p] = true;
    Matrix<T> eq(n - dim(), n, zero());
    std::size_t r = 0;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      eq(r, f) = one_like(zero());
      for (std::size_t i = 0; i < pivots_.size(); ++i) eq(r, pivots_[i]) = -basis_(i, f);
      ++r;
    }
    return eq;
  }

  Subspace operator+(const Subspace& other) const {
    check_ambient(other);
    Matrix<T> stacked(dim() + other.dim(), ambient_dim(), zero());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < ambient_dim(); ++j) stacked(i, j) = basis_(i, j);
    for (std::size_t i = 0; i < other.dim(); ++i)
      for (std::size_t j = 0; j < ambient_dim(); ++j) stacked(dim() + i, j) = other.basis_(i, j);
    return span(stacked);
  }

  Subspace intersect(const Subspace& other) const;

  bool is_direct_sum_with(const Subspace& other) const { return (*this + other).dim() == dim() + other.dim(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis_ == b.basis_;
  }

 private:
  void check_ambient(const Subspace& other) const {
    require(ambient_dim() == other.ambient_dim(), ErrorKind::FieldMismatch, "subspaces live in different ambient spaces");
  }

  Matrix<T> basis_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel {v : M v = 0} as a canonical subspace.
template <class T>
Subspace<T> kernel(const Matrix<T>& m) {
  const auto red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  Matrix<T> basis(n - red.rank, n, m.zero());
  std::size_t r = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(r, f) = one_like(m.zero());
    for (std::size_t i = 0; i < red.rank; ++i) basis(r, red.pivots[i]) = -red.reduced(i, f);
    ++r;
  }
  return Subspace<T>::span(basis);
}

template <class T>
Subspace<T> Subspace<T>::intersect(const Subspace& other) const {
  check_ambient(other);
  const Matrix<T> e1 = equations(), e2 = other.equations();
  Matrix<T> stacked(e1.rows() + e2.rows(), ambient_dim(), zero());
  for (std::size_t i = 0; i < e1.rows(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) stacked(i, j) = e1(i, j);
  for (std::size_t i = 0; i < e2.rows(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) stacked(e1.rows() + i, j) = e2(i, j);
  return kernel(stacked);
}

/// Image of the subspace under a linear map given as an n x n matrix acting on columns.
template <class T>
Subspace<T> image_of(const Matrix<T>& map, const Subspace<T>& s) {
  Matrix<T> rows(s.dim(), map.rows(), s.zero());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto w = map.apply(s.basis().row(i));
    for (std::size_t j = 0; j < w.size(); ++j) rows(i, j) = w[j];
  }
  return Subspace<T>::span(rows);
}

template <class T>
bool is_invariant(const Matrix<T>& map, const Subspace<T>& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!s.contains(map.apply(s.basis().row(i)))) return false;
  return true;
}

using QMatrix = Matrix<Rational>;
using QSubspace = Subspace<Rational>;

}  // namespace holofield
