#include "lietoric/matrix.hpp"

namespace lietoric {

namespace {

// Below this many entries plain Gauss-Jordan is faster than clearing
// denominators.
constexpr size_t kBareissThreshold = 1024;

}  // namespace

template <>
RrefResult<Rational> rref(const Matrix<Rational>& m) {
  const size_t R = m.rows(), C = m.cols();
  if (R * C < kBareissThreshold) return detail::rref_gauss(m);

  std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C));
  for (size_t i = 0; i < R; ++i) {
    BigInt l = 1;
    for (size_t j = 0; j < C; ++j) l = lcm(l, m(i, j).den());
    for (size_t j = 0; j < C; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
  }

  // Fraction-free forward elimination: every division by the previous pivot
  // is exact.
  std::vector<size_t> pivots;
  BigInt prev = 1;
  size_t row = 0;
  BigInt tmp;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t p = row;
    while (p < R && a[p][col] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    const BigInt& piv = a[row][col];
    for (size_t i = row + 1; i < R; ++i) {
      const BigInt f = a[i][col];
      for (size_t j = col + 1; j < C; ++j) {
        mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
        if (f != 0) mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), a[row][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }

  // Back substitution over Q on the echelon rows.
  Matrix<Rational> out(R, C);
  for (size_t i = 0; i < pivots.size(); ++i) {
    Rational inv = Rational(1) / Rational(a[i][pivots[i]]);
    for (size_t j = pivots[i]; j < C; ++j)
      if (a[i][j] != 0) out(i, j) = Rational(a[i][j]) * inv;
  }
  for (size_t r = pivots.size(); r-- > 0;) {
    const size_t pc = pivots[r];
    for (size_t i = 0; i < r; ++i) {
      if (out(i, pc).sign() == 0) continue;
      Rational f = out(i, pc);
      for (size_t j = pc; j < C; ++j)
        if (out(r, j).sign() != 0) out(i, j) -= f * out(r, j);
    }
  }
  RrefResult<Rational> res;
  res.rref = std::move(out);
  res.pivots = std::move(pivots);
  return res;
}

}  // namespace lietoric
