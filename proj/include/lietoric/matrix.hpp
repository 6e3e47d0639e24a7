#pragma once

// Dense matrices over an exact field, with the elimination-based routines the
// rest of the library is built from. Everything here is generic in K; the
// Rational instantiation of rref switches to fraction-free elimination for
// large inputs (see matrix.cpp).

#include "lietoric/field.hpp"
#include "lietoric/rational.hpp"
#include "lietoric/upoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietoric {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, K(0)) {}
  Matrix(size_t rows, size_t cols, std::vector<K> data) : r_(rows), c_(cols), a_(std::move(data)) {
    if (a_.size() != r_ * c_) throw std::invalid_argument("Matrix: data size does not match shape");
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_) throw std::invalid_argument("Matrix: ragged rows");
      for (size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<std::vector<K>>& cols, size_t nrows) {
    Matrix m(nrows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != nrows) throw std::invalid_argument("Matrix: column length mismatch");
      for (size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }
  K& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const K& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  const std::vector<K>& data() const { return a_; }

  std::vector<K> row(size_t i) const { return {a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)}; }
  std::vector<K> column(size_t j) const {
    std::vector<K> v;
    v.reserve(r_);
    for (size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const K& x) { return detail::zero(x); });
  }
  bool is_diagonal() const {
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j)
        if (i != j && !detail::zero((*this)(i, j))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend Matrix operator*(const K& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.a_) x = s * x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("Matrix: incompatible shapes for product");
    Matrix r(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i) {
      for (size_t k = 0; k < a.c_; ++k) {
        const K& x = a(i, k);
        if (detail::zero(x)) continue;
        for (size_t j = 0; j < b.c_; ++j) {
          const K& y = b(k, j);
          if (!detail::zero(y)) r(i, j) = r(i, j) + x * y;
        }
      }
    }
    return r;
  }
  friend std::vector<K> operator*(const Matrix& a, const std::vector<K>& v) {
    if (a.c_ != v.size()) throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<K> r(a.r_, K(0));
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t j = 0; j < a.c_; ++j)
        if (!detail::zero(v[j]) && !detail::zero(a(i, j))) r[i] = r[i] + a(i, j) * v[j];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  /// Rows as "[a, b; c, d]".
  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < r_; ++i) {
      if (i) s += "; ";
      for (size_t j = 0; j < c_; ++j) {
        if (j) s += ", ";
        s += detail::str((*this)(i, j));
      }
    }
    return s + "]";
  }

 private:
  void check_same(const Matrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("Matrix: shape mismatch");
  }
  size_t r_ = 0, c_ = 0;
  std::vector<K> a_;
};

template <class K>
struct RrefResult {
  Matrix<K> rref;               // same shape as the input
  std::vector<size_t> pivots;   // pivot column of each nonzero row
  size_t rank() const { return pivots.size(); }
};

namespace detail {

template <class K>
RrefResult<K> rref_gauss(Matrix<K> m) {
  RrefResult<K> out;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    K inv = K(1) / m(row, col);
    for (size_t j = col; j < m.cols(); ++j)
      if (!zero(m(row, j))) m(row, j) = m(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || zero(m(i, col))) continue;
      K f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (!zero(m(row, j))) m(i, j) = m(i, j) - f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rref = std::move(m);
  return out;
}

}  // namespace detail

/// Reduced row echelon form. Over towers a non-invertible pivot raises
/// SplitEvent, which propagates.
template <class K>
RrefResult<K> rref(const Matrix<K>& m) {
  return detail::rref_gauss(m);
}

/// Rational matrices above a size threshold go through fraction-free
/// (Bareiss) forward elimination on a cleared-denominator integer copy.
template <>
RrefResult<Rational> rref(const Matrix<Rational>& m);

template <class K>
size_t rank(const Matrix<K>& m) {
  return rref(m).rank();
}

/// Kernel basis read off the rref: one vector per free column, with a 1 in
/// that column and zeros in the other free columns.
template <class K>
std::vector<std::vector<K>> kernel_from_rref(const RrefResult<K>& r) {
  const size_t n = r.rref.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(n, K(0));
    v[f] = K(1);
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
std::vector<std::vector<K>> kernel(const Matrix<K>& m) {
  return kernel_from_rref(rref(m));
}

/// Raises std::domain_error for singular input.
template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  auto r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
  Matrix<K> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r.rref(i, n + j);
  return inv;
}

/// Characteristic polynomial det(tI - M) by Berkowitz's division-free
/// recurrence over the leading principal submatrices.
template <class K>
UPoly<K> char_poly(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  const size_t n = m.rows();
  std::vector<K> p{K(1)};  // descending coefficients of the current minor
  for (size_t k = 0; k < n; ++k) {
    // Submatrix A = m[0..k), column C = m[0..k, k], row R = m[k, 0..k).
    std::vector<K> t;
    t.reserve(k + 2);
    t.push_back(K(1));
    t.push_back(-m(k, k));
    std::vector<K> v(k);
    for (size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (size_t s = 0; s < k; ++s) {
      K rv(0);
      for (size_t i = 0; i < k; ++i)
        if (!detail::zero(v[i]) && !detail::zero(m(k, i))) rv = rv + m(k, i) * v[i];
      t.push_back(-rv);
      if (s + 1 == k) break;
      std::vector<K> w(k, K(0));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
          if (!detail::zero(v[j]) && !detail::zero(m(i, j))) w[i] = w[i] + m(i, j) * v[j];
      v = std::move(w);
    }
    std::vector<K> np(k + 2, K(0));
    for (size_t i = 0; i <= k + 1; ++i)
      for (size_t j = 0; j <= std::min(i, k); ++j)
        if (i - j < t.size()) np[i] = np[i] + t[i - j] * p[j];
    p = std::move(np);
  }
  std::reverse(p.begin(), p.end());
  return UPoly<K>(std::move(p));
}

/// p(M) by Horner.
template <class K>
Matrix<K> eval_poly(const UPoly<K>& p, const Matrix<K>& m) {
  const size_t n = m.rows();
  Matrix<K> acc(n, n);
  const auto& c = p.coeffs();
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * m;
    for (size_t d = 0; d < n; ++d) acc(d, d) = acc(d, d) + c[i];
  }
  return acc;
}

/// First linear dependency among I, M, M^2, ...
template <class K>
UPoly<K> min_poly(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("min_poly: matrix is not square");
  const size_t n = m.rows();
  std::vector<std::vector<K>> powers;
  Matrix<K> pw = Matrix<K>::identity(n);
  for (size_t k = 0; k <= n; ++k) {
    powers.push_back(pw.data());
    Matrix<K> sys = Matrix<K>::from_columns(powers, n * n);
    auto ker = kernel(sys);
    if (!ker.empty()) {
      // Earlier powers are independent, so the kernel is a line with a
      // nonzero last coordinate.
      std::vector<K> c = ker.front();
      K inv = K(1) / c.back();
      for (auto& x : c) x = x * inv;
      return UPoly<K>(std::move(c));
    }
    pw = pw * m;
  }
  throw std::logic_error("min_poly: no dependency found (Cayley-Hamilton violated)");
}

template <class K>
bool is_nilpotent(const Matrix<K>& m) {
  Matrix<K> p = m;
  for (size_t k = 1; k < std::max<size_t>(m.rows(), 1); ++k) p = p * m;
  return p.is_zero();
}

template <class K>
struct JordanChevalley {
  Matrix<K> s;  // semisimple part
  Matrix<K> n;  // nilpotent part
};

/// Newton iteration s <- s - q(s) q'(s)^{-1} with q the squarefree part of
/// the characteristic polynomial; converges quadratically from s = M.
template <class K>
JordanChevalley<K> jordan_chevalley(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("jordan_chevalley: matrix is not square");
  const size_t n = m.rows();
  if (n == 0) return {m, m};
  UPoly<K> q = squarefree_part(char_poly(m));
  UPoly<K> dq = q.derivative();
  Matrix<K> s = m;
  for (size_t it = 0; it < 64; ++it) {
    Matrix<K> qs = eval_poly(q, s);
    if (qs.is_zero()) return {s, m - s};
    s = s - qs * inverse(eval_poly(dq, s));
  }
  throw std::logic_error("jordan_chevalley: Newton iteration did not converge");
}

/// Commutator AB - BA.
template <class K>
Matrix<K> bracket(const Matrix<K>& a, const Matrix<K>& b) {
  return a * b - b * a;
}

}  // namespace lietoric
