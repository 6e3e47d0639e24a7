#pragma once

// Deciding whether a linear (or affine-linear) change of coordinates makes
// an ideal binomial and prime.

#include "lietoric/eigen.hpp"
#include "lietoric/groebner.hpp"
#include "lietoric/intmatrix.hpp"
#include "lietoric/liestab.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lietoric {

using AMatrix = Matrix<AlgNum>;

/// Columns u - v of the binomials x^u - a x^v (a != 0) of a basis.
struct ExponentLattice {
  size_t ambient = 0;
  IntMatrix generators;  // ambient x k
  bool is_saturated() const;
  std::vector<BigInt> invariants() const;
};

template <class K>
ExponentLattice exponent_lattice(const std::vector<Poly<K>>& basis, size_t nvars) {
  std::vector<std::vector<long>> cols;
  for (const auto& g : basis) {
    if (g.size() != 2) continue;
    std::vector<long> c(nvars);
    for (size_t i = 0; i < nvars; ++i)
      c[i] = static_cast<long>(g.terms()[0].m.e[i]) - static_cast<long>(g.terms()[1].m.e[i]);
    cols.push_back(std::move(c));
  }
  ExponentLattice L;
  L.ambient = nvars;
  L.generators = IntMatrix(nvars, cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < nvars; ++i) L.generators(i, j) = BigInt(cols[j][i]);
  return L;
}

struct PrimalityResult {
  bool prime = false;
  std::string reason;
  std::string witness;             // polynomial exhibiting non-primality
  std::vector<std::string> quotiented;  // variables lying in the ideal
  ExponentLattice lattice;
};

/// Prime test for a binomial ideal: variables in the reduced basis are
/// quotiented, then every remaining variable must be a nonzerodivisor and the
/// exponent lattice must be saturated.
template <class K>
PrimalityResult binomial_primality(const Ideal<K>& J) {
  if (!is_binomial(J)) throw std::invalid_argument("binomial_primality: ideal is not binomial");
  PrimalityResult out;
  const auto& gb = J.groebner();
  const RingPtr& R = J.ring();
  if (gb.size() == 1 && gb[0].is_constant()) {
    out.reason = "unit ideal";
    return out;
  }
  std::vector<bool> is_var(R->nvars(), false);
  for (const auto& g : gb)
    if (g.size() == 1 && g.lm().deg == 1)
      for (size_t i = 0; i < R->nvars(); ++i)
        if (g.lm().e[i]) is_var[i] = true;
  std::vector<std::string> keep;
  std::vector<size_t> varmap(R->nvars(), 0);
  for (size_t i = 0; i < R->nvars(); ++i) {
    if (is_var[i]) {
      out.quotiented.push_back(R->name(i));
    } else {
      varmap[i] = keep.size();
      keep.push_back(R->name(i));
    }
  }
  RingPtr sub = Ring::make(keep, detail::restricted_order(R->order()));
  std::vector<Poly<K>> rest;
  for (const auto& g : gb) {
    if (g.size() == 1 && g.lm().deg == 1) continue;
    // the basis is reduced, so no other element involves a quotiented variable
    rest.push_back(remap(g, sub, varmap));
  }
  Ideal<K> Jp(sub, rest, J.options());
  for (const auto& g : Jp.groebner())
    if (g.size() == 1) {
      out.reason = "contains a monomial that is not a variable";
      out.witness = g.to_string();
      return out;
    }
  for (size_t i = 0; i < sub->nvars(); ++i) {
    auto c = colon(Jp, Poly<K>::variable(sub, i));
    for (const auto& g : c.generators())
      if (!Jp.contains(g)) {
        out.reason = "variable " + sub->name(i) + " is a zerodivisor";
        out.witness = g.to_string();
        return out;
      }
  }
  out.lattice = exponent_lattice(Jp.groebner(), sub->nvars());
  if (!out.lattice.is_saturated()) {
    out.reason = "exponent lattice is not saturated";
    return out;
  }
  out.prime = true;
  out.reason = "lattice ideal with saturated lattice";
  return out;
}

/// S.I: each generator f becomes f(S^{-1} x).
template <class K>
Ideal<K> transform_ideal(const Ideal<K>& I, const Matrix<K>& S) {
  Matrix<K> a = inverse(S);
  std::vector<Poly<K>> gens;
  for (const auto& f : I.generators()) gens.push_back(substitute_linear(f, a));
  return Ideal<K>(I.ring(), gens, I.options());
}

Ideal<AlgNum> to_algnum(const Ideal<Rational>& I);

/// Simultaneous diagonalizer of a toral algebra, eigenvectors as columns.
Diagonalizer diagonalize_toral(const LieAlgebraBasis& t, std::uint64_t seed, int max_retries = 16);

enum class ToricStatus { Toric, BinomialNotPrime, NotBinomial, InputNotHandled };
std::string status_name(ToricStatus s);

struct ToricOptions {
  std::uint64_t seed = 1;
  int max_retries = 16;
  int max_splits = 16;
  bool assume_prime = false;
  bool compute_complexity = true;
  GroebnerOptions groebner;
};

struct ToricVerdict {
  ToricStatus status = ToricStatus::InputNotHandled;
  bool affine = false;
  // Eigenvectors as columns: the new ideal has generators f(P x). For the
  // affine variant P is (n+1) x (n+1) with first row (1, 0, ..., 0).
  std::optional<AMatrix> transform;
  Tower::Ptr tower;  // null when the transform is rational
  std::optional<AMatrix> translation;  // affine: column 0 below the corner
  std::optional<AMatrix> linear;       // affine: lower-right block
  std::vector<std::string> transformed_basis;  // reduced basis of the new ideal

  int torus_dim = -1;
  std::optional<int> variety_dim;
  std::optional<int> complexity;
  bool unital_excluded = false;  // torus smaller than the variety

  size_t lie_dim = 0;
  size_t cartan_dim = 0;
  size_t toral_dim = 0;
  size_t nilpotent_dim = 0;
  int cartan_attempts = 0;
  int diagonalizer_attempts = 0;
  int tower_splits = 0;
  int branches = 1;
  bool used_prime_shortcut = false;
  std::string reason;
  std::vector<std::string> diagnostics;

  /// Refuted rather than abandoned: failed binomiality or primality, or a
  /// torus too small for the variety.
  bool definitely_not_toric() const {
    return status == ToricStatus::NotBinomial || status == ToricStatus::BinomialNotPrime ||
           (status == ToricStatus::InputNotHandled && complexity && *complexity > 0);
  }
};

/// The homogeneous pipeline; throws std::invalid_argument on non-homogeneous
/// input.
ToricVerdict decide_toric(const Ideal<Rational>& I, const ToricOptions& opt = {});

/// The affine pipeline over the homogenization, dehomogenizing before the
/// binomial checks.
ToricVerdict decide_toric_affine(const Ideal<Rational>& I, const ToricOptions& opt = {});

struct ComplexityReport {
  int variety_dim = -1;
  int complexity = 0;
  bool unital_excluded = false;
};

/// Variety dimension and dim V(I) - t_dim.
ComplexityReport complexity_report(const Ideal<Rational>& I, int t_dim);

}  // namespace lietoric
