#include "lietoric/rational.hpp"

#include <cctype>

namespace lietoric {

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) throw std::invalid_argument("Rational::parse: missing digits");
  for (size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace lietoric
