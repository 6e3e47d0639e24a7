#include "lietoric/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lietoric {

namespace {

int cmp_degrevlex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  unsigned da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, size_t n) const {
  switch (kind) {
    case OrderKind::DegRevLex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (size_t i = n; i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::Lex:
      for (size_t i = 0; i < n; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::Block: {
      int c = cmp_degrevlex(a, b, 0, std::min(split, n));
      if (c != 0) return c;
      return cmp_degrevlex(a, b, std::min(split, n), n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Block: return "block(" + std::to_string(split) + ")";
  }
  return "?";
}

Ring::Ring(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("Ring: at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("Ring: empty variable name");
    for (size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("Ring: duplicate variable " + names_[i]);
  }
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), order);
}

int Ring::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr Ring::with_order(MonomialOrder o) const { return make(names_, o); }

std::string Ring::monomial_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

std::vector<Monomial> Ring::monomials_of_degree(unsigned d) const {
  std::vector<Monomial> out;
  const size_t n = names_.size();
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  // Distribute d among variables i..n-1.
  std::function<void(size_t, unsigned)> rec = [&](size_t i, unsigned left) {
    if (i + 1 == n) {
      cur.set(i, static_cast<std::uint16_t>(left));
      out.push_back(cur);
      cur.set(i, 0);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur.set(i, static_cast<std::uint16_t>(k));
      rec(i + 1, left - k);
    }
    cur.set(i, 0);
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

}  // namespace lietoric
