#include "lietoric/intmatrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace lietoric {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.c_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("IntMatrix: incompatible shapes for product");
  IntMatrix r(a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.c_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

bool IntMatrix::is_diagonal() const {
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < r_; ++i) {
    if (i) os << "; ";
    for (size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BigInt t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst += f * row_src
void add_row(IntMatrix& m, size_t dst, size_t src, const BigInt& f) {
  for (size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void add_col(IntMatrix& m, size_t dst, size_t src, const BigInt& f) {
  for (size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const size_t R = a.rows(), C = a.cols();
  SmithForm s{IntMatrix::identity(R), a, IntMatrix::identity(C)};
  IntMatrix& D = s.D;
  for (size_t t = 0; t < std::min(R, C); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      size_t pi = R, pj = C;
      for (size_t i = t; i < R; ++i)
        for (size_t j = t; j < C; ++j)
          if (D(i, j) != 0 && (pi == R || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == R) return s;
      swap_rows(D, t, pi);
      swap_rows(s.U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(s.V, t, pj);

      bool clean = true;
      for (size_t i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        BigInt f = -q;
        add_row(D, i, t, f);
        add_row(s.U, i, t, f);
        if (D(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        BigInt f = -q;
        add_col(D, j, t, f);
        add_col(s.V, j, t, f);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (size_t i = t + 1; i < R && divides; ++i)
        for (size_t j = t + 1; j < C; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            add_row(D, t, i, BigInt(1));
            add_row(s.U, t, i, BigInt(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      for (size_t j = 0; j < C; ++j) D(t, j) = -D(t, j);
      for (size_t j = 0; j < R; ++j) s.U(t, j) = -s.U(t, j);
    }
  }
  return s;
}

std::vector<BigInt> SmithForm::invariants() const {
  std::vector<BigInt> out;
  for (size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

}  // namespace lietoric
