#pragma once

// Exact eigendecomposition of diagonalizable rational matrices. Rational
// eigenvalues are found directly; the remaining squarefree factor of the
// characteristic polynomial is split completely over a tower by adjoining
// one root at a time.

#include "lietoric/matrix.hpp"
#include "lietoric/tower.hpp"

#include <cstdint>
#include <random>

namespace lietoric {

struct EigenSpace {
  AlgNum value;
  std::vector<std::vector<AlgNum>> vectors;  // kernel basis of M - value*I
};

struct EigenDecomposition {
  Tower::Ptr tower;  // null when the spectrum is rational
  std::vector<EigenSpace> spaces;
  int splits = 0;
};

/// Eigenvalues come out ordered by degree over Q (rationals first, ascending),
/// then by order of adjunction. Raises std::domain_error if M is not
/// diagonalizable and std::runtime_error when more than `max_splits` tower
/// splits were needed.
EigenDecomposition eigen_decompose(const Matrix<Rational>& m, int max_splits = 16);

struct Diagonalizer {
  Matrix<AlgNum> S;   // eigenvectors as columns
  Tower::Ptr tower;   // null when S is rational
  int attempts = 0;   // random combinations tried
  int splits = 0;
  bool is_rational() const;
  /// Requires is_rational().
  Matrix<Rational> rational() const;
};

/// S such that S^{-1} A S is diagonal for every A in `family`, built from the
/// eigenvectors of a random combination with integer coefficients in
/// [-8k, 8k] at attempt k, and certified before it is returned.
Diagonalizer simultaneous_diagonalizer(const std::vector<Matrix<Rational>>& family, std::uint64_t seed,
                                       int max_retries = 16);

/// Uniform draw from {0, ±1/2, ±1, ±2}.
Rational small_coefficient(std::mt19937_64& rng);

Matrix<AlgNum> to_algnum(const Matrix<Rational>& m);
Matrix<AlgNum> rebase(const Matrix<AlgNum>& m, const Tower::Ptr& t);
bool all_rational(const Matrix<AlgNum>& m);
Matrix<Rational> to_rational(const Matrix<AlgNum>& m);

/// True when A v is a multiple of v for every column v of S.
bool certify_diagonalizes(const Matrix<AlgNum>& S, const Matrix<Rational>& a);

}  // namespace lietoric
