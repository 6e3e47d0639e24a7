#pragma once

// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar
// selection, plus the ideal operations built from it.

#include "lietoric/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietoric {

struct GroebnerOptions {
  size_t pair_budget = 200000;
};

class GroebnerBudgetExceeded : public std::runtime_error {
 public:
  GroebnerBudgetExceeded(size_t pairs, size_t basis_size)
      : std::runtime_error("Groebner basis aborted after " + std::to_string(pairs) + " S-pairs (basis size " +
                           std::to_string(basis_size) + "); raise the pair budget or simplify the input"),
        pairs(pairs) {}
  size_t pairs;
};

namespace detail {

// a[a0..] - c * m * b[b0..], merged in ring order.
template <class K>
std::vector<Term<K>> sub_shifted(const Ring& R, const std::vector<Term<K>>& a, size_t a0, const K& c, const Monomial& m,
                                 const std::vector<Term<K>>& b, size_t b0) {
  std::vector<Term<K>> out;
  out.reserve(a.size() - a0 + b.size() - b0);
  size_t i = a0, j = b0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].m * m;
    const int cmp = i == a.size() ? -1 : R.compare(a[i].m, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, -(c * b[j].c)});
      ++j;
    } else {
      K v = a[i].c - c * b[j].c;
      if (!zero(v)) out.push_back({bm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
int find_reducer(const std::vector<const Poly<K>*>& g, const Monomial& m) {
  for (size_t k = 0; k < g.size(); ++k)
    if (g[k]->lm().divides(m)) return static_cast<int>(k);
  return -1;
}

// Remainder of f modulo the monic polynomials g. With full = false only the
// leading term is reduced until it becomes irreducible.
template <class K>
Poly<K> reduce_by(const Poly<K>& f, const std::vector<const Poly<K>*>& g, bool full) {
  const Ring& R = *f.ring();
  std::vector<Term<K>> p = f.terms();
  std::vector<Term<K>> rem;
  size_t start = 0;
  while (start < p.size()) {
    const Term<K>& lt = p[start];
    const int k = find_reducer(g, lt.m);
    if (k < 0) {
      if (!full) break;
      rem.push_back(lt);
      ++start;
      continue;
    }
    const Poly<K>& h = *g[static_cast<size_t>(k)];
    K c = lt.c / h.lc();
    p = sub_shifted(R, p, start + 1, c, lt.m / h.lm(), h.terms(), 1);
    start = 0;
  }
  for (size_t i = start; i < p.size(); ++i) rem.push_back(std::move(p[i]));
  return Poly<K>::from_sorted(f.ring(), std::move(rem));
}

template <class K>
Poly<K> s_polynomial(const Poly<K>& a, const Poly<K>& b) {
  const Ring& R = *a.ring();
  Monomial l = Monomial::lcm(a.lm(), b.lm());
  auto left = a.mul_term(l / a.lm(), K(1) / a.lc());
  return Poly<K>::from_sorted(a.ring(),
                              sub_shifted(R, left.terms(), 1, K(1) / b.lc(), l / b.lm(), b.terms(), 1));
}

template <class K>
class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& opt) : ring_(std::move(ring)), opt_(opt) {}

  std::vector<Poly<K>> run(const std::vector<Poly<K>>& gens) {
    std::vector<Poly<K>> input;
    for (const auto& f : gens)
      if (!f.is_zero()) input.push_back(f.in_ring(ring_).monic());
    std::sort(input.begin(), input.end(), [&](const Poly<K>& a, const Poly<K>& b) {
      return ring_->compare(a.lm(), b.lm()) < 0;
    });
    for (auto& f : input) {
      auto h = reduce_by(f, active(), true);
      if (h.is_zero()) continue;
      if (h.is_constant()) return {Poly<K>::constant(ring_, K(1))};
      add(h.monic(), h.total_degree());
    }
    size_t done = 0;
    while (!pairs_.empty()) {
      if (++done > opt_.pair_budget) throw GroebnerBudgetExceeded(done - 1, basis_.size());
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) { return before(a, b); });
      Pair pr = *it;
      *it = pairs_.back();
      pairs_.pop_back();
      auto s = s_polynomial(basis_[pr.i].p, basis_[pr.j].p);
      auto h = reduce_by(s, active(), true);
      if (h.is_zero()) continue;
      if (h.is_constant()) return {Poly<K>::constant(ring_, K(1))};
      const int hs = pr.sugar;
      add(h.monic(), std::max(hs, h.total_degree()));
    }
    return interreduce();
  }

 private:
  struct Entry {
    Poly<K> p;
    int sugar;
    bool alive;
  };
  struct Pair {
    size_t i, j;
    Monomial lcm;
    int sugar;
  };

  bool before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    const int c = ring_->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
  }

  std::vector<const Poly<K>*> active() const {
    std::vector<const Poly<K>*> out;
    for (const auto& e : basis_)
      if (e.alive) out.push_back(&e.p);
    return out;
  }

  int pair_sugar(size_t i, size_t j, const Monomial& l) const {
    const auto& a = basis_[i];
    const auto& b = basis_[j];
    return std::max(a.sugar + static_cast<int>(l.deg) - static_cast<int>(a.p.lm().deg),
                    b.sugar + static_cast<int>(l.deg) - static_cast<int>(b.p.lm().deg));
  }

  // Gebauer-Moeller update for the new element h = basis_.back().
  void add(Poly<K> h, int sugar) {
    const size_t t = basis_.size();
    const Monomial H = h.lm();
    basis_.push_back({std::move(h), sugar, true});

    std::vector<Pair> cand;
    for (size_t i = 0; i < t; ++i)
      if (basis_[i].alive) cand.push_back({i, t, Monomial::lcm(basis_[i].p.lm(), H), 0});

    // Chain criterion among the new pairs: keep a pair unless another new pair
    // has an lcm properly dividing it; among equal lcms keep one, preferring
    // a coprime one (which is then dropped by the product criterion).
    std::vector<Pair> kept;
    for (size_t a = 0; a < cand.size(); ++a) {
      bool drop = false;
      for (size_t b = 0; b < cand.size() && !drop; ++b) {
        if (a == b || !cand[b].lcm.divides(cand[a].lcm)) continue;
        if (!(cand[b].lcm == cand[a].lcm)) {
          drop = true;
        } else {
          const bool ca = basis_[cand[a].i].p.lm().coprime(H);
          const bool cb = basis_[cand[b].i].p.lm().coprime(H);
          if (cb && !ca) drop = true;
          else if (ca == cb && b < a) drop = true;
        }
      }
      if (!drop) kept.push_back(cand[a]);
    }

    // Old pairs made redundant by h.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (H.divides(p.lcm) && !(Monomial::lcm(basis_[p.i].p.lm(), H) == p.lcm) &&
          !(Monomial::lcm(basis_[p.j].p.lm(), H) == p.lcm))
        continue;
      old.push_back(p);
    }
    pairs_ = std::move(old);

    for (auto& p : kept) {
      if (basis_[p.i].p.lm().coprime(H)) continue;  // product criterion
      p.sugar = pair_sugar(p.i, p.j, p.lcm);
      pairs_.push_back(p);
    }

    for (size_t i = 0; i < t; ++i)
      if (basis_[i].alive && H.divides(basis_[i].p.lm())) basis_[i].alive = false;
  }

  std::vector<Poly<K>> interreduce() const {
    std::vector<Poly<K>> g;
    for (const auto& e : basis_)
      if (e.alive) g.push_back(e.p);
    std::sort(g.begin(), g.end(), [&](const Poly<K>& a, const Poly<K>& b) { return ring_->compare(a.lm(), b.lm()) < 0; });
    std::vector<Poly<K>> out;
    for (size_t k = 0; k < g.size(); ++k) {
      std::vector<const Poly<K>*> others;
      for (size_t l = 0; l < g.size(); ++l)
        if (l != k) others.push_back(&g[l]);
      // leading monomials are pairwise non-divisible, so only the tail moves
      auto tail = reduce_by(Poly<K>::from_sorted(ring_, {g[k].terms().begin() + 1, g[k].terms().end()}), others, true);
      out.push_back(Poly<K>::monomial(ring_, g[k].lm(), K(1)) + tail);
    }
    return out;
  }

  RingPtr ring_;
  GroebnerOptions opt_;
  std::vector<Entry> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` with respect to
/// the order of `ring`; sorted by increasing leading monomial.
template <class K>
std::vector<Poly<K>> groebner_basis(const std::vector<Poly<K>>& gens, const RingPtr& ring,
                                    const GroebnerOptions& opt = {}) {
  return detail::Buchberger<K>(ring, opt).run(gens);
}

/// Multivariate division remainder. The basis must live in f's ring.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& gb) {
  std::vector<const Poly<K>*> g;
  for (const auto& p : gb) {
    if (!p.ring()->same_as(*f.ring())) throw std::invalid_argument("normal_form: basis and polynomial rings differ");
    g.push_back(&p);
  }
  return detail::reduce_by(f, g, true);
}

/// Checks the Buchberger criterion: every S-polynomial reduces to zero.
template <class K>
bool is_groebner_basis(const std::vector<Poly<K>>& gb) {
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j)
      if (!normal_form(detail::s_polynomial(gb[i], gb[j]), gb).is_zero()) return false;
  return true;
}

template <class K>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly<K>> gens, GroebnerOptions opt = {}) : ring_(std::move(ring)), opt_(opt) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      gens_.push_back(g.in_ring(ring_));
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly<K>>& generators() const { return gens_; }
  const GroebnerOptions& options() const { return opt_; }
  size_t nvars() const { return ring_->nvars(); }

  /// Reduced basis for `ord`, computed once per order.
  const std::vector<Poly<K>>& groebner(const MonomialOrder& ord) const {
    const std::string key = ord.name();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto gb = groebner_basis(gens_, ring_->with_order(ord), opt_);
    return cache_.emplace(key, std::move(gb)).first->second;
  }
  const std::vector<Poly<K>>& groebner() const { return groebner(ring_->order()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant();
  }
  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }
  bool contains(const Poly<K>& f) const { return normal_form(f.in_ring(ring_), groebner()).is_zero(); }
  /// Same ideal: mutual containment of generators.
  bool equals(const Ideal& o) const {
    for (const auto& g : o.gens_)
      if (!contains(g)) return false;
    for (const auto& g : gens_)
      if (!o.contains(g)) return false;
    return true;
  }
  std::string to_string() const {
    std::string s = "<";
    for (size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ">";
  }

 private:
  RingPtr ring_;
  std::vector<Poly<K>> gens_;
  GroebnerOptions opt_;
  mutable std::map<std::string, std::vector<Poly<K>>> cache_;
};

template <class K>
bool member(const Poly<K>& f, const Ideal<K>& I) {
  return I.contains(f);
}

/// True when every element of the reduced basis (ring order) has at most two
/// terms.
template <class K>
bool is_binomial(const Ideal<K>& I) {
  for (const auto& g : I.groebner())
    if (g.size() > 2) return false;
  return true;
}

namespace detail {

inline std::string fresh_name(const Ring& r, const std::string& base) {
  std::string n = base;
  for (int k = 1; r.index_of(n) >= 0; ++k) n = base + std::to_string(k);
  return n;
}

// The ring with a fresh variable prepended under Block(1), plus the map
// sending variable i of `r` to i + 1.
inline std::pair<RingPtr, std::vector<size_t>> tagged_ring(const RingPtr& r) {
  std::vector<std::string> names{fresh_name(*r, "t")};
  names.insert(names.end(), r->names().begin(), r->names().end());
  std::vector<size_t> shift(r->nvars());
  for (size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  return {Ring::make(std::move(names), MonomialOrder::block(1)), shift};
}

inline MonomialOrder restricted_order(const MonomialOrder& o) {
  return o.kind == OrderKind::Block ? MonomialOrder::degrevlex() : o;
}

// Basis elements free of the first k variables of a Block(k) basis, moved
// into `target`, whose variable i is variable k + i of the source.
template <class K>
std::vector<Poly<K>> drop_block(const std::vector<Poly<K>>& gb, size_t k, const RingPtr& target) {
  std::vector<size_t> varmap(k + target->nvars(), 0);
  for (size_t i = 0; i < target->nvars(); ++i) varmap[k + i] = i;
  const std::uint32_t block_mask = k >= 32 ? ~0u : ((1u << k) - 1);
  std::vector<Poly<K>> out;
  for (const auto& g : gb) {
    bool free = true;
    for (const auto& t : g.terms())
      if (t.m.mask & block_mask) {
        free = false;
        break;
      }
    if (free) out.push_back(remap(g, target, varmap));
  }
  return out;
}

// Exact quotient a / b; throws if b does not divide a.
template <class K>
Poly<K> exact_divide(const Poly<K>& a, const Poly<K>& b) {
  const Ring& R = *a.ring();
  std::vector<Term<K>> q;
  std::vector<Term<K>> p = a.terms();
  while (!p.empty()) {
    if (!b.lm().divides(p.front().m)) throw std::logic_error("exact_divide: not divisible");
    K c = p.front().c / b.lc();
    Monomial m = p.front().m / b.lm();
    q.push_back({m, c});
    p = sub_shifted(R, p, 1, c, m, b.terms(), 1);
  }
  return Poly<K>::from_sorted(a.ring(), std::move(q));
}

}  // namespace detail

/// I intersected with the polynomial ring in the variables after the first k.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, size_t k) {
  const RingPtr& R = I.ring();
  if (k > R->nvars()) throw std::invalid_argument("eliminate: too many variables");
  std::vector<std::string> rest(R->names().begin() + static_cast<long>(k), R->names().end());
  RingPtr target = Ring::make(rest, detail::restricted_order(R->order()));
  const auto& gb = I.groebner(MonomialOrder::block(k));
  return Ideal<K>(target, detail::drop_block(gb, k, target), I.options());
}

/// (I : f) via I cap <f> = (t I + (1 - t) <f>) cap K[x].
template <class K>
Ideal<K> colon(const Ideal<K>& I, const Poly<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("colon: zero polynomial");
  const RingPtr& R = I.ring();
  auto [T, shift] = detail::tagged_ring(R);
  Poly<K> t = Poly<K>::variable(T, 0);
  Poly<K> ft = remap(f, T, shift);
  std::vector<Poly<K>> gens;
  for (const auto& g : I.generators()) gens.push_back(t * remap(g, T, shift));
  gens.push_back(ft - t * ft);
  auto gb = groebner_basis(gens, T, I.options());
  auto inter = detail::drop_block(gb, 1, R->with_order(detail::restricted_order(R->order())));
  std::vector<Poly<K>> out;
  Poly<K> fr = f.in_ring(inter.empty() ? R : inter.front().ring());
  for (const auto& g : inter) out.push_back(detail::exact_divide(g, fr));
  return Ideal<K>(R, std::move(out), I.options());
}

/// (I : f^infinity) by the Rabinowitsch trick.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Poly<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
  const RingPtr& R = I.ring();
  auto [T, shift] = detail::tagged_ring(R);
  std::vector<Poly<K>> gens;
  for (const auto& g : I.generators()) gens.push_back(remap(g, T, shift));
  gens.push_back(Poly<K>::constant(T, K(1)) - Poly<K>::variable(T, 0) * remap(f, T, shift));
  auto gb = groebner_basis(gens, T, I.options());
  return Ideal<K>(R, detail::drop_block(gb, 1, R), I.options());
}

/// Krull dimension of K[x]/I by the largest set of variables containing no
/// leading monomial of the reduced basis; -1 for the unit ideal.
template <class K>
int krull_dimension(const Ideal<K>& I) {
  const size_t n = I.nvars();
  if (I.is_zero()) return static_cast<int>(n);
  const auto& gb = I.groebner();
  if (gb.size() == 1 && gb[0].is_constant()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) supports.push_back(g.lm().mask);
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  int best = 0;
  // depth-first over variables, each either kept in U or left out
  auto rec = [&](auto&& self, size_t v, std::uint32_t mask, int size) -> void {
    if (size + static_cast<int>(n - v) <= best) return;
    if (v == n) {
      best = size;
      return;
    }
    const std::uint32_t with = mask | (1u << v);
    bool ok = true;
    for (auto s : supports)
      if ((s & ~with) == 0) {
        ok = false;
        break;
      }
    if (ok) self(self, v + 1, with, size + 1);
    self(self, v + 1, mask, size);
  };
  rec(rec, 0, 0u, 0);
  return best;
}

}  // namespace lietoric
