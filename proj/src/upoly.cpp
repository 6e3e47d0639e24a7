#include "lietoric/upoly.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace lietoric {

namespace {

constexpr unsigned long kTrialLimit = 1000000;
constexpr size_t kCandidateLimit = 200000;

// Prime factorisation by trial division; nullopt when a composite cofactor
// survives the trial bound.
std::optional<std::vector<std::pair<BigInt, int>>> factor(BigInt n) {
  std::vector<std::pair<BigInt, int>> out;
  if (n < 0) n = -n;
  for (unsigned long p = 2; p <= kTrialLimit && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(BigInt(p), e);
  }
  if (n > 1) {
    if (n > BigInt(kTrialLimit) * kTrialLimit && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      return std::nullopt;
    }
    out.emplace_back(n, 1);
  }
  return out;
}

std::optional<std::vector<BigInt>> divisors(const BigInt& n) {
  auto f = factor(n);
  if (!f) return std::nullopt;
  std::vector<BigInt> ds{BigInt(1)};
  for (const auto& [p, e] : *f) {
    size_t cur = ds.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
    if (ds.size() > kCandidateLimit) return std::nullopt;
  }
  return ds;
}

// Evaluates sum a_i p^i q^(n-i); zero iff p/q is a root.
bool is_root(const std::vector<BigInt>& a, const BigInt& p, const BigInt& q) {
  BigInt acc = 0;
  BigInt qpow = 1;
  // Horner in homogeneous form: acc = acc*p + a_i*q^(n-i), iterating i = n..0.
  acc = a.back();
  for (size_t i = a.size() - 1; i-- > 0;) {
    qpow *= q;
    acc = acc * p + a[i] * qpow;
  }
  return acc == 0;
}

}  // namespace

std::vector<BigInt> primitive_integer_coeffs(const UPoly<Rational>& p) {
  BigInt den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.den());
  std::vector<BigInt> a;
  a.reserve(p.coeffs().size());
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = c.num() * (den / c.den());
    g = gcd(g, v);
    a.push_back(v);
  }
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& v : a) v /= g;
  return a;
}

std::vector<Rational> rational_roots(const UPoly<Rational>& p) {
  if (p.degree() <= 0) return {};
  std::vector<BigInt> a = primitive_integer_coeffs(p);
  std::set<Rational> roots;
  size_t lead_zeros = 0;
  while (lead_zeros < a.size() && a[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros > 0) {
    roots.insert(Rational(0));
    a.erase(a.begin(), a.begin() + static_cast<long>(lead_zeros));
  }
  if (a.size() >= 2) {
    auto dp = divisors(a.front());
    auto dq = divisors(a.back());
    if (dp && dq && dp->size() * dq->size() <= kCandidateLimit) {
      for (const auto& q : *dq) {
        for (const auto& num : *dp) {
          if (gcd(num, q) != 1) continue;
          for (int s : {1, -1}) {
            BigInt pp = num * s;
            if (is_root(a, pp, q)) roots.insert(Rational(pp, q));
          }
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace lietoric
