#pragma once

// Algebraic extension towers with dynamic splitting.
//
// A Tower is an ordered list of levels; level k adjoins a symbol a_k that
// satisfies a monic squarefree polynomial whose coefficients live in the
// tower of the first k levels. The quotient ring is a product of fields, not
// necessarily a field: inverting an element that is a zero divisor raises a
// SplitEvent carrying the factorisation of the offending defining polynomial.
// Callers split the tower into the two branches and rerun.
//
// Towers are immutable. Extending or splitting creates a new Tower that
// shares the untouched prefix levels, so elements of a prefix tower embed in
// every extension without conversion.

#include "lietoric/field.hpp"
#include "lietoric/rational.hpp"
#include "lietoric/upoly.hpp"

#include <exception>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lietoric {

namespace detail {

// Element of the ring at some depth d: for d == 0 the rational q; for d > 0
// a polynomial in a_{d-1} with coefficients at depth d-1, reduced modulo the
// level's defining polynomial and with trailing zeros stripped.
struct Node {
  Rational q;
  std::vector<Node> c;
  friend bool operator==(const Node&, const Node&) = default;
};

}  // namespace detail

struct TowerLevel {
  std::string name;
  // Monic; coefficients ascending, at depth equal to this level's index.
  std::vector<detail::Node> poly;
  int degree() const { return static_cast<int>(poly.size()) - 1; }
};

class AlgNum;
class SplitEvent;

class Tower {
 public:
  using Ptr = std::shared_ptr<const Tower>;

  Tower() = default;
  explicit Tower(std::vector<std::shared_ptr<const TowerLevel>> levels) : levels_(std::move(levels)) {}

  static Ptr empty();

  int depth() const { return static_cast<int>(levels_.size()); }
  const TowerLevel& level(int i) const { return *levels_.at(static_cast<size_t>(i)); }
  /// Product of level degrees, the Q-dimension of the quotient ring.
  long degree() const;

  /// True when every level of this tower is (pointer-)identical to the
  /// corresponding level of `other`.
  bool is_prefix_of(const Tower& other) const;
  Ptr prefix(int k) const;

  /// Extends by a root of `p`, whose coefficients must live in this tower
  /// (or a prefix of it). Rejects p of degree < 1 or p that is not
  /// squarefree over the tower. The new generator is returned via `root`.
  Ptr adjoin(const UPoly<AlgNum>& p, const std::string& name, AlgNum* root = nullptr) const;

  /// The two branches obtained by replacing the split level's polynomial by
  /// each factor (first = the event's first factor). Higher levels are
  /// re-reduced over the new prefix.
  std::pair<Ptr, Ptr> split(const SplitEvent& ev) const;

  /// Defining polynomials, one line per level.
  std::vector<std::string> describe() const;

  const std::vector<std::shared_ptr<const TowerLevel>>& levels() const { return levels_; }

 private:
  std::vector<std::shared_ptr<const TowerLevel>> levels_;
};

/// An element of a tower; elements with a null tower are plain rationals.
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(int v) : rep_{Rational(v), {}} {}              // NOLINT(google-explicit-constructor)
  AlgNum(long v) : rep_{Rational(v), {}} {}             // NOLINT(google-explicit-constructor)
  AlgNum(const Rational& q) : rep_{q, {}} {}            // NOLINT(google-explicit-constructor)
  AlgNum(Tower::Ptr tower, detail::Node rep);

  /// The generator of level k of `tower`.
  static AlgNum generator(const Tower::Ptr& tower, int k);

  const Tower::Ptr& tower() const { return tower_; }
  int depth() const { return tower_ ? tower_->depth() : 0; }
  const detail::Node& rep() const { return rep_; }

  bool is_rational() const;
  /// Requires is_rational().
  Rational to_rational() const;

  /// Re-expresses this element in `target`, a tower whose levels correspond
  /// index-by-index to this element's tower (e.g. a branch produced by
  /// Tower::split). Reduces modulo the target's defining polynomials.
  AlgNum rebase(const Tower::Ptr& target) const;

  /// Multiplicative inverse; raises SplitEvent on a zero divisor and
  /// std::domain_error on exact zero.
  AlgNum inverse() const;

  AlgNum operator-() const;
  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
  AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
  AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }
  AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }
  friend bool operator==(const AlgNum& a, const AlgNum& b);

  std::string to_string() const;

 private:
  Tower::Ptr tower_;
  detail::Node rep_;
};

bool is_zero(const AlgNum& a);
inline std::string to_string(const AlgNum& a) { return a.to_string(); }

/// Raised when a computation tries to invert a zero divisor. The split level
/// `level` of `tower` has defining polynomial first * second; both factors
/// are monic of positive degree with coefficients in tower->prefix(level).
class SplitEvent : public std::exception {
 public:
  SplitEvent(Tower::Ptr tower, int level, UPoly<AlgNum> first, UPoly<AlgNum> second);
  const char* what() const noexcept override { return message_.c_str(); }

  Tower::Ptr tower;
  int level;
  UPoly<AlgNum> first;
  UPoly<AlgNum> second;

 private:
  std::string message_;
};

/// Chooses the tower among a and b that extends the other.
Tower::Ptr common_tower(const Tower::Ptr& a, const Tower::Ptr& b);

}  // namespace lietoric
