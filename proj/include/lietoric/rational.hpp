#pragma once

// Arbitrary-precision rationals backed by GMP. Values are always kept in
// lowest terms with a positive denominator, so equality is componentwise.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lietoric {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}               // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rational(const BigInt& n) : v_(n) {}      // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "a" or "a/b" with optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_), Raw{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), Raw{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), Raw{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), Raw{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    Rational r = a;
    r /= b;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const { return Rational(1) / *this; }

  /// "n" for integers, otherwise "n/d".
  std::string to_string() const;

 private:
  struct Raw {};
  Rational(mpq_class&& q, Raw) : v_(std::move(q)) {}
  mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a.sign() == 0; }
inline bool is_one(const Rational& a) { return a.raw() == 1; }
inline std::string to_string(const Rational& a) { return a.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace lietoric

template <>
struct std::hash<lietoric::Rational> {
  size_t operator()(const lietoric::Rational& q) const noexcept {
    return std::hash<std::string>{}(q.to_string());
  }
};
