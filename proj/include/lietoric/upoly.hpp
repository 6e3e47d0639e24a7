#pragma once

// Dense univariate polynomials over an exact field K. Coefficients are
// stored by ascending degree with trailing zeros stripped.

#include "lietoric/field.hpp"
#include "lietoric/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lietoric {

template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(const K& a) { return UPoly(std::vector<K>{a}); }
  /// t^k
  static UPoly monomial(size_t k, const K& a = K(1)) {
    std::vector<K> c(k + 1, K(0));
    c[k] = a;
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const K& lc() const { return c_.back(); }
  K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const std::vector<K>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == K(1); }

  UPoly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lc();
    std::vector<K> c = c_;
    for (auto& x : c) x = x * inv;
    return UPoly(std::move(c));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> d(c_.size() - 1, K(0));
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  K eval(const K& x) const {
    K acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<K> c = a.c_;
    for (auto& x : c) x = -x;
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const K& s, const UPoly& a) {
    std::vector<K> c = a.c_;
    for (auto& x : c) x = s * x;
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; divisor must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<K> r = a.c_;
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, K(0));
    const K inv = b.is_monic() ? K(1) : K(1) / b.lc();
    const size_t db = b.c_.size() - 1;
    for (size_t k = q.size(); k-- > 0;) {
      const K& top = r[k + db];
      if (detail::zero(top)) continue;
      K f = top * inv;
      q[k] = f;
      for (size_t j = 0; j <= db; ++j) r[k + j] = r[k + j] - f * b.c_[j];
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (detail::zero(c_[i])) continue;
      std::string cs = detail::str(c_[i]);
      bool paren = cs.find_first_of("+-", 1) != std::string::npos;
      if (paren) cs = "(" + cs + ")";
      if (!out.empty()) {
        if (cs[0] == '-') {
          out += " - ";
          cs.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (i == 0) {
        out += cs;
        continue;
      }
      if (cs == "1") cs.clear();
      else if (cs == "-1") cs = "-";
      else cs += "*";
      out += cs + var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

/// Monic gcd via the Euclidean algorithm. Over an extension tower this may
/// raise a split when a leading coefficient turns out to be a zero divisor.
template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("upoly_gcd: both inputs zero");
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'), made monic.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (p.degree() == 0) return UPoly<K>::constant(K(1));
  auto g = upoly_gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

/// Distinct rational roots in ascending order (rational root theorem).
/// Returns only those it can certify; candidate enumeration is skipped when
/// the extreme coefficients are too large to factor by trial division.
std::vector<Rational> rational_roots(const UPoly<Rational>& p);

/// Scales to an integer polynomial with content 1 and positive leading
/// coefficient.
std::vector<BigInt> primitive_integer_coeffs(const UPoly<Rational>& p);

}  // namespace lietoric
