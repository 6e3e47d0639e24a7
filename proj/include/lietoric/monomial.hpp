#pragma once

// Monomials, monomial orders and polynomial rings.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lietoric {

constexpr size_t kMaxVars = 32;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  std::uint32_t mask = 0;  // bit i set iff e[i] > 0

  static Monomial var(size_t i, std::uint16_t k = 1) {
    Monomial m;
    m.set(i, k);
    return m;
  }
  std::uint16_t operator[](size_t i) const { return e[i]; }
  void set(size_t i, std::uint16_t k) {
    deg = deg - e[i] + k;
    e[i] = k;
    if (k) mask |= (1u << i);
    else mask &= ~(1u << i);
  }
  bool is_one() const { return deg == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    r.deg = a.deg + b.deg;
    r.mask = a.mask | b.mask;
    return r;
  }
  bool divides(const Monomial& b) const {
    if ((mask & ~b.mask) != 0 || deg > b.deg) return false;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  /// this / d; requires d | this.
  Monomial operator/(const Monomial& d) const {
    Monomial r;
    for (size_t i = 0; i < kMaxVars; ++i) {
      r.e[i] = static_cast<std::uint16_t>(e[i] - d.e[i]);
      if (r.e[i]) r.mask |= (1u << i);
    }
    r.deg = deg - d.deg;
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    r.mask = a.mask | b.mask;
    for (size_t i = 0; i < kMaxVars; ++i) r.deg += r.e[i];
    return r;
  }
  bool coprime(const Monomial& b) const { return (mask & b.mask) == 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.mask == b.mask && a.e == b.e; }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < kMaxVars; ++i) {
      if (!(m.mask & (1u << i))) continue;
      h ^= (static_cast<std::uint64_t>(i) << 16) | m.e[i];
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

enum class OrderKind { DegRevLex, Lex, Block };

/// Block(k): degrevlex on the first k variables, ties broken by degrevlex on
/// the rest. Any monomial involving the first block beats every monomial
/// that does not, which makes it an elimination order for those variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  size_t split = 0;

  static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block(size_t k) { return {OrderKind::Block, k}; }

  /// Negative, zero or positive as a <, =, > b in n variables.
  int compare(const Monomial& a, const Monomial& b, size_t n) const;
  std::string name() const;
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != OrderKind::Block || a.split == b.split);
  }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order);
  static RingPtr make(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex());

  size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(size_t i) const { return names_.at(i); }
  const MonomialOrder& order() const { return order_; }
  /// -1 when the name is not a variable of this ring.
  int index_of(const std::string& name) const;

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, names_.size()); }
  RingPtr with_order(MonomialOrder o) const;
  bool same_as(const Ring& o) const { return names_ == o.names_ && order_ == o.order_; }

  std::string monomial_string(const Monomial& m) const;
  /// All monomials of total degree d, descending in this ring's order.
  std::vector<Monomial> monomials_of_degree(unsigned d) const;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

}  // namespace lietoric
