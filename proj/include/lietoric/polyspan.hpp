#pragma once

// Row spaces of sparse vectors kept in reduced row echelon form, and the
// graded pieces I_d of a homogeneous ideal built on top of them.

#include "lietoric/poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lietoric {

template <class K>
using SparseRow = std::vector<std::pair<std::uint32_t, K>>;  // ascending column

template <class K>
class SparseEchelon {
 public:
  explicit SparseEchelon(size_t ncols = 0) : ncols_(ncols), pivot_row_(ncols, -1) {}

  size_t ncols() const { return ncols_; }
  size_t rank() const { return rows_.size(); }
  bool is_pivot(size_t col) const { return pivot_row_[col] >= 0; }

  /// Residue of r modulo the span: what is left after clearing every pivot
  /// column.
  SparseRow<K> reduce(const SparseRow<K>& r) const {
    bool any = false;
    for (const auto& [c, v] : r)
      if (pivot_row_[c] >= 0) {
        any = true;
        break;
      }
    if (!any) return r;
    std::vector<K> acc(ncols_, K(0));
    std::vector<std::uint32_t> touched;
    auto bump = [&](std::uint32_t c, const K& v) {
      if (detail::zero(acc[c])) touched.push_back(c);
      acc[c] = acc[c] + v;
    };
    for (const auto& [c, v] : r) {
      const int pr = pivot_row_[c];
      if (pr < 0) {
        bump(c, v);
        continue;
      }
      for (const auto& [c2, w] : rows_[static_cast<size_t>(pr)])
        if (c2 != c) bump(c2, -(v * w));
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    SparseRow<K> out;
    for (auto c : touched)
      if (!detail::zero(acc[c])) out.emplace_back(c, std::move(acc[c]));
    return out;
  }

  /// Adds r to the span; false when it was already contained.
  bool insert(const SparseRow<K>& r) {
    SparseRow<K> nf = reduce(r);
    if (nf.empty()) return false;
    if (!(nf.front().second == K(1))) {
      K inv = K(1) / nf.front().second;
      for (auto& e : nf) e.second = e.second * inv;
    }
    const std::uint32_t p = nf.front().first;
    for (auto& row : rows_) {
      auto it = std::lower_bound(row.begin(), row.end(), p, [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it == row.end() || it->first != p) continue;
      K f = it->second;
      row = axpy(row, -f, nf);
    }
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(nf));
    return true;
  }

  /// Rows ordered by pivot column.
  std::vector<SparseRow<K>> rows() const {
    std::vector<SparseRow<K>> out;
    for (size_t c = 0; c < ncols_; ++c)
      if (pivot_row_[c] >= 0) out.push_back(rows_[static_cast<size_t>(pivot_row_[c])]);
    return out;
  }

  /// Null space of the rows viewed as linear equations, one basis vector per
  /// free column.
  std::vector<std::vector<K>> kernel() const {
    std::vector<std::vector<K>> out;
    for (size_t f = 0; f < ncols_; ++f) {
      if (pivot_row_[f] >= 0) continue;
      std::vector<K> v(ncols_, K(0));
      v[f] = K(1);
      for (const auto& row : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(f),
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        if (it != row.end() && it->first == f) v[row.front().first] = -it->second;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  static SparseRow<K> axpy(const SparseRow<K>& a, const K& s, const SparseRow<K>& b) {
    SparseRow<K> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, s * b[j].second);
        ++j;
      } else {
        K v = a[i].second + s * b[j].second;
        if (!detail::zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

 private:
  size_t ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow<K>> rows_;
};

/// The degree-d piece of the ideal generated by homogeneous generators,
/// as a row space over the degree-d monomials (column 0 = largest).
template <class K>
class GradedPiece {
 public:
  GradedPiece(RingPtr ring, unsigned d) : ring_(std::move(ring)), d_(d), monos_(ring_->monomials_of_degree(d)), span_(monos_.size()) {
    index_.reserve(monos_.size());
    for (size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<std::uint32_t>(i));
  }

  unsigned degree() const { return d_; }
  size_t dimension() const { return span_.rank(); }
  size_t ambient_dimension() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  const SparseEchelon<K>& span() const { return span_; }

  /// Adds every monomial multiple of f landing in degree d.
  void add_generator(const Poly<K>& f) {
    if (f.is_zero()) return;
    if (!f.is_homogeneous()) throw std::invalid_argument("GradedPiece: generator is not homogeneous");
    const int df = f.total_degree();
    if (df > static_cast<int>(d_)) return;
    for (const auto& m : ring_->monomials_of_degree(d_ - static_cast<unsigned>(df))) span_.insert(to_row(f.mul_term(m, K(1))));
  }

  SparseRow<K> to_row(const Poly<K>& p) const {
    SparseRow<K> r;
    r.reserve(p.size());
    for (const auto& t : p.terms()) {
      auto it = index_.find(t.m);
      if (it == index_.end()) throw std::invalid_argument("GradedPiece: polynomial has a term of the wrong degree");
      r.emplace_back(it->second, t.c);
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }
  Poly<K> to_poly(const SparseRow<K>& r) const {
    std::vector<Term<K>> t;
    t.reserve(r.size());
    for (const auto& [c, v] : r) t.push_back({monos_[c], v});
    return Poly<K>::from_sorted(ring_, std::move(t));
  }

  /// Basis in reduced row echelon form, ordered by leading monomial.
  std::vector<Poly<K>> basis() const {
    std::vector<Poly<K>> out;
    for (const auto& r : span_.rows()) out.push_back(to_poly(r));
    return out;
  }

 private:
  RingPtr ring_;
  unsigned d_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
  SparseEchelon<K> span_;
};

/// Row-reduced basis of the degree-d part of the ideal generated by `gens`
/// (empty if d is below every generator degree).
template <class K>
std::vector<Poly<K>> graded_piece_basis(const std::vector<Poly<K>>& gens, unsigned d) {
  if (gens.empty()) return {};
  GradedPiece<K> piece(gens.front().ring(), d);
  for (const auto& g : gens) piece.add_generator(g);
  return piece.basis();
}

}  // namespace lietoric
