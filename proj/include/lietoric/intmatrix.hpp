#pragma once

// Integer matrices and the Smith normal form.

#include "lietoric/rational.hpp"

#include <string>
#include <vector>

namespace lietoric {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  BigInt& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const BigInt& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  bool is_diagonal() const;
  std::string to_string() const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<BigInt> a_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix U, D, V;  // U * A * V = D
  /// Nonzero diagonal entries of D, each dividing the next.
  std::vector<BigInt> invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace lietoric
