#pragma once

// Lie algebras of matrices: the stabilizer algebra of a homogeneous ideal,
// Cartan subalgebras and their toral/nilpotent splitting.

#include "lietoric/groebner.hpp"
#include "lietoric/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lietoric {

using QMatrix = Matrix<Rational>;

/// Linearly independent n x n matrices, kept in reduced row echelon form of
/// their row-major vectorizations (so each starts with a 1 and the pivot
/// entries determine coordinates).
class LieAlgebraBasis {
 public:
  LieAlgebraBasis() = default;
  /// Spans `mats` (which may be dependent).
  LieAlgebraBasis(size_t n, const std::vector<QMatrix>& mats);
  static LieAlgebraBasis full(size_t n);

  size_t n() const { return n_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<QMatrix>& basis() const { return basis_; }
  const QMatrix& operator[](size_t i) const { return basis_[i]; }

  /// Coordinates of x in this basis, or nothing when x is outside the span.
  std::optional<std::vector<Rational>> coordinates(const QMatrix& x) const;
  bool contains(const QMatrix& x) const { return coordinates(x).has_value(); }
  bool contains(const LieAlgebraBasis& o) const;
  bool same_span(const LieAlgebraBasis& o) const { return dim() == o.dim() && contains(o); }
  QMatrix combination(const std::vector<Rational>& coeffs) const;
  /// [b_i, b_j] in the span for all pairs.
  bool is_closed() const;
  bool is_abelian() const;

 private:
  size_t n_ = 0;
  std::vector<QMatrix> basis_;
  std::vector<size_t> pivots_;  // flat index of each basis element's leading 1
};

struct StabilizerStats {
  size_t equations = 0;     // rank of the linear system
  size_t generators_used = 0;
  bool stopped_early = false;
};

/// Matrices g with g * I_d contained in I_d for every generator degree d,
/// grading by generators of degree <= d. `extra` adds linear conditions on
/// the row-major entries of g. Requires homogeneous generators.
LieAlgebraBasis stabilizer_lie_algebra(const Ideal<Rational>& I, StabilizerStats* stats = nullptr,
                                       const std::vector<std::vector<std::pair<std::uint32_t, Rational>>>& extra = {});

struct AffineStabilizer {
  Ideal<Rational> homogenized;  // I^h, homogenizing variable first
  LieAlgebraBasis algebra;      // stabilizer of I^h with row 0 = (lambda, 0, ..., 0)
};

AffineStabilizer affine_stabilizer_lie_algebra(const Ideal<Rational>& I, StabilizerStats* stats = nullptr);

/// y -> [x, y] in the coordinates of g; x must lie in g.
QMatrix ad_matrix(const QMatrix& x, const LieAlgebraBasis& g);

/// Combination of g's basis with coefficients from {0, ±1/2, ±1, ±2}, never zero.
QMatrix random_element(const LieAlgebraBasis& g, std::uint64_t seed);

/// Generalized null space ker(ad(x)^dim g), as a subalgebra of g.
LieAlgebraBasis fitting_null_component(const QMatrix& x, const LieAlgebraBasis& g);

/// Nilpotent and self-normalizing inside g.
bool certify_cartan(const LieAlgebraBasis& c, const LieAlgebraBasis& g);

/// Certified Cartan subalgebra together with how it was found.
struct CartanResult {
  LieAlgebraBasis cartan;
  QMatrix seed_element;
  int attempts = 0;             // elements tried in total
  bool from_basis_element = false;
  bool from_split_torus = false;
};

/// Tries, each with certification: basis elements with squarefree
/// characteristic polynomial and rational eigenvalues, a generic element of a
/// split torus assembled from semisimple parts of basis elements, the other
/// squarefree basis elements, and finally random combinations. Throws after
/// `max_retries` random draws fail.
CartanResult find_cartan(const LieAlgebraBasis& g, std::uint64_t seed, int max_retries = 16);

struct CartanDecomposition {
  LieAlgebraBasis cartan;
  LieAlgebraBasis toral;
  LieAlgebraBasis nilpotent;
};

/// Splits c by Jordan-Chevalley of its basis; throws std::logic_error when the
/// pieces do not decompose c.
CartanDecomposition toral_decomposition(const LieAlgebraBasis& c);

}  // namespace lietoric
