#pragma once

// Sparse multivariate polynomials over an exact field. Terms are kept
// strictly descending in the ring's monomial order with no zero
// coefficients, so the leading term is terms().front().

#include "lietoric/field.hpp"
#include "lietoric/matrix.hpp"
#include "lietoric/monomial.hpp"
#include "lietoric/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lietoric {

template <class K>
struct Term {
  Monomial m;
  K c;
};

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr r) : ring_(std::move(r)) {}
  /// Sorts and combines arbitrary terms.
  Poly(RingPtr r, std::vector<Term<K>> terms) : ring_(std::move(r)), t_(std::move(terms)) { normalize(); }

  /// Wraps terms already strictly descending and nonzero.
  static Poly from_sorted(RingPtr r, std::vector<Term<K>> terms) {
    Poly p(std::move(r));
    p.t_ = std::move(terms);
    return p;
  }
  static Poly constant(RingPtr r, const K& c) { return monomial(std::move(r), Monomial{}, c); }
  static Poly variable(RingPtr r, size_t i) { return monomial(std::move(r), Monomial::var(i), K(1)); }
  static Poly monomial(RingPtr r, const Monomial& m, const K& c = K(1)) {
    Poly p(std::move(r));
    if (!detail::zero(c)) p.t_.push_back({m, c});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  const Monomial& lm() const { return t_.front().m; }
  const K& lc() const { return t_.front().c; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

  int total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m.deg));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : t_)
      if (t.m.deg != t_.front().m.deg) return false;
    return true;
  }

  K coeff(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [&](const Term<K>& t, const Monomial& x) { return ring_->compare(t.m, x) > 0; });
    if (it != t_.end() && it->m == m) return it->c;
    return K(0);
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return a.axpy(K(1), Monomial{}, b); }
  friend Poly operator-(const Poly& a, const Poly& b) { return a.axpy(K(-1), Monomial{}, b); }
  friend Poly operator*(const K& s, const Poly& a) {
    if (detail::zero(s)) return Poly(a.ring_);
    Poly r = a;
    for (auto& t : r.t_) t.c = s * t.c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    if (a.size() == 1) return b.mul_term(a.t_[0].m, a.t_[0].c);
    if (b.size() == 1) return a.mul_term(b.t_[0].m, b.t_[0].c);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) {
        auto [it, fresh] = acc.try_emplace(x.m * y.m, x.c * y.c);
        if (!fresh) it->second = it->second + x.c * y.c;
      }
    std::vector<Term<K>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!detail::zero(c)) terms.push_back({m, std::move(c)});
    Poly r(a.ring_);
    r.t_ = std::move(terms);
    r.sort_terms();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].m == b.t_[i].m) || !(a.t_[i].c == b.t_[i].c)) return false;
    return true;
  }

  /// c * m * this
  Poly mul_term(const Monomial& m, const K& c) const {
    Poly r(ring_);
    if (detail::zero(c)) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m * m, c * t.c});
    return r;
  }

  /// this + s * m * b, by a single merge.
  Poly axpy(const K& s, const Monomial& m, const Poly& b) const {
    check_ring(b);
    Poly r(ring_ ? ring_ : b.ring_);
    if (detail::zero(s) || b.is_zero()) {
      r.t_ = t_;
      return r;
    }
    const Ring& R = *r.ring_;
    r.t_.reserve(t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    const bool shift = !m.is_one();
    while (i < t_.size() || j < b.t_.size()) {
      if (j == b.t_.size()) {
        r.t_.push_back(t_[i++]);
        continue;
      }
      Monomial bm = shift ? b.t_[j].m * m : b.t_[j].m;
      int c = i == t_.size() ? -1 : R.compare(t_[i].m, bm);
      if (c > 0) {
        r.t_.push_back(t_[i++]);
      } else if (c < 0) {
        r.t_.push_back({bm, s * b.t_[j].c});
        ++j;
      } else {
        K v = t_[i].c + s * b.t_[j].c;
        if (!detail::zero(v)) r.t_.push_back({bm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Poly monic() const {
    if (is_zero() || lc() == K(1)) return *this;
    return (K(1) / lc()) * *this;
  }

  Poly derivative(size_t var) const {
    std::vector<Term<K>> terms;
    for (const auto& t : t_) {
      if (!t.m.e[var]) continue;
      Monomial m = t.m;
      m.set(var, static_cast<std::uint16_t>(m.e[var] - 1));
      terms.push_back({m, K(static_cast<long>(t.m.e[var])) * t.c});
    }
    Poly r(ring_);
    r.t_ = std::move(terms);
    r.sort_terms();
    return r;
  }

  /// Same terms re-sorted in another ring with the same variables.
  Poly in_ring(const RingPtr& other) const {
    if (other->nvars() != ring_->nvars()) throw std::invalid_argument("Poly::in_ring: variable count mismatch");
    Poly r(other);
    r.t_ = t_;
    r.sort_terms();
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& t : t_) {
      std::string cs = detail::str(t.c);
      bool neg = cs[0] == '-';
      if (neg) cs.erase(0, 1);
      bool compound = cs.find_first_of("+-", 0) != std::string::npos || cs.find(' ') != std::string::npos;
      if (compound) {
        cs = "(" + detail::str(t.c) + ")";
        neg = false;
      }
      std::string body;
      if (t.m.is_one()) body = cs;
      else if (cs == "1") body = ring_->monomial_string(t.m);
      else body = cs + "*" + ring_->monomial_string(t.m);
      if (out.empty()) out = (neg ? "-" : "") + body;
      else out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  void check_ring(const Poly& b) const {
    if (ring_ && b.ring_ && ring_ != b.ring_ && !ring_->same_as(*b.ring_))
      throw std::invalid_argument("Poly: operands live in different rings");
  }
  void sort_terms() {
    const Ring& R = *ring_;
    std::sort(t_.begin(), t_.end(), [&](const Term<K>& a, const Term<K>& b) { return R.compare(a.m, b.m) > 0; });
  }
  void normalize() {
    if (!ring_) throw std::invalid_argument("Poly: missing ring");
    sort_terms();
    std::vector<Term<K>> out;
    out.reserve(t_.size());
    for (size_t i = 0; i < t_.size();) {
      size_t j = i + 1;
      K sum = t_[i].c;
      while (j < t_.size() && t_[j].m == t_[i].m) sum = sum + t_[j++].c;
      if (!detail::zero(sum)) out.push_back({t_[i].m, std::move(sum)});
      i = j;
    }
    t_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term<K>> t_;
};

template <class K>
std::string to_string(const Poly<K>& p) {
  return p.to_string();
}

/// f with each x_i replaced by the i-th entry of A x.
template <class K>
Poly<K> substitute_linear(const Poly<K>& f, const Matrix<K>& a) {
  const RingPtr& R = f.ring();
  const size_t n = R->nvars();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("substitute_linear: matrix size does not match ring");
  std::vector<Poly<K>> lin;
  lin.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Term<K>> terms;
    for (size_t j = 0; j < n; ++j)
      if (!detail::zero(a(i, j))) terms.push_back({Monomial::var(j), a(i, j)});
    lin.emplace_back(R, std::move(terms));
  }
  // powers[i][k] = lin[i]^k, built on demand
  std::vector<std::vector<Poly<K>>> powers(n);
  auto power = [&](size_t i, unsigned k) -> const Poly<K>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly<K>::constant(R, K(1)));
    while (pw.size() <= k) pw.push_back(pw.back() * lin[i]);
    return pw[k];
  };
  std::unordered_map<Monomial, K, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Poly<K> prod = Poly<K>::constant(R, t.c);
    for (size_t i = 0; i < n && !prod.is_zero(); ++i)
      if (t.m.e[i]) prod = prod * power(i, t.m.e[i]);
    for (const auto& u : prod.terms()) {
      auto [it, fresh] = acc.try_emplace(u.m, u.c);
      if (!fresh) it->second = it->second + u.c;
    }
  }
  std::vector<Term<K>> terms;
  for (auto& [m, c] : acc)
    if (!detail::zero(c)) terms.push_back({m, c});
  return Poly<K>(R, std::move(terms));
}

/// g * f = -sum_{i,j} g_ij x_j df/dx_i.
template <class K>
Poly<K> derivation_action(const Matrix<K>& g, const Poly<K>& f) {
  const RingPtr& R = f.ring();
  const size_t n = R->nvars();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("derivation_action: matrix size does not match ring");
  std::unordered_map<Monomial, K, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    for (size_t i = 0; i < n; ++i) {
      if (!t.m.e[i]) continue;
      Monomial base = t.m;
      base.set(i, static_cast<std::uint16_t>(base.e[i] - 1));
      K ci = K(static_cast<long>(t.m.e[i])) * t.c;
      for (size_t j = 0; j < n; ++j) {
        if (detail::zero(g(i, j))) continue;
        Monomial m = base;
        m.set(j, static_cast<std::uint16_t>(m.e[j] + 1));
        K v = -(g(i, j) * ci);
        auto [it, fresh] = acc.try_emplace(m, v);
        if (!fresh) it->second = it->second + v;
      }
    }
  }
  std::vector<Term<K>> terms;
  for (auto& [m, c] : acc)
    if (!detail::zero(c)) terms.push_back({m, c});
  return Poly<K>(R, std::move(terms));
}

/// Ring with a fresh variable in front, named `preferred` unless that
/// clashes, in which case h, h1, h2, ... are tried.
RingPtr homogenizing_ring(const RingPtr& r, const std::string& preferred = "x0");

/// Pads each term with powers of variable 0 of `hring` up to the top degree.
template <class K>
Poly<K> homogenize(const Poly<K>& f, const RingPtr& hring) {
  if (hring->nvars() != f.ring()->nvars() + 1) throw std::invalid_argument("homogenize: ring mismatch");
  const int d = f.total_degree();
  std::vector<Term<K>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (size_t i = 0; i < f.ring()->nvars(); ++i) m.set(i + 1, t.m.e[i]);
    m.set(0, static_cast<std::uint16_t>(d - static_cast<int>(t.m.deg)));
    terms.push_back({m, t.c});
  }
  return Poly<K>(hring, std::move(terms));
}

/// Sets variable 0 to 1 and drops it.
template <class K>
Poly<K> dehomogenize(const Poly<K>& f, const RingPtr& ring) {
  if (f.ring()->nvars() != ring->nvars() + 1) throw std::invalid_argument("dehomogenize: ring mismatch");
  std::vector<Term<K>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (size_t i = 0; i < ring->nvars(); ++i) m.set(i, t.m.e[i + 1]);
    terms.push_back({m, t.c});
  }
  return Poly<K>(ring, std::move(terms));
}

/// Moves f into `target`, sending variable i to varmap[i].
template <class K>
Poly<K> remap(const Poly<K>& f, const RingPtr& target, const std::vector<size_t>& varmap) {
  std::vector<Term<K>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (size_t i = 0; i < f.ring()->nvars(); ++i)
      if (t.m.e[i]) m.set(varmap.at(i), t.m.e[i]);
    terms.push_back({m, t.c});
  }
  return Poly<K>(target, std::move(terms));
}

/// Coefficient-wise conversion, e.g. Rational -> AlgNum.
template <class L, class K, class F>
Poly<L> map_coefficients(const Poly<K>& f, F&& conv) {
  std::vector<Term<L>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    L c = conv(t.c);
    if (!detail::zero(c)) terms.push_back({t.m, std::move(c)});
  }
  return Poly<L>::from_sorted(f.ring(), std::move(terms));
}

}  // namespace lietoric
