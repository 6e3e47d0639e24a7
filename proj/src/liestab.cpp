#include "lietoric/liestab.hpp"

#include "lietoric/eigen.hpp"
#include "lietoric/polyspan.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace lietoric {

namespace {

QMatrix reshape(const std::vector<Rational>& v, size_t n) { return QMatrix(n, n, v); }

// Kernel basis of `m` as a list of vectors.
std::vector<std::vector<Rational>> null_space(const QMatrix& m) { return kernel(m); }

}  // namespace

LieAlgebraBasis::LieAlgebraBasis(size_t n, const std::vector<QMatrix>& mats) : n_(n) {
  if (mats.empty()) return;
  QMatrix stacked(mats.size(), n * n);
  for (size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != n || mats[k].cols() != n) throw std::invalid_argument("LieAlgebraBasis: matrix size mismatch");
    for (size_t e = 0; e < n * n; ++e) stacked(k, e) = mats[k].data()[e];
  }
  auto r = rref(stacked);
  for (size_t k = 0; k < r.rank(); ++k) {
    basis_.push_back(reshape(r.rref.row(k), n));
    pivots_.push_back(r.pivots[k]);
  }
}

LieAlgebraBasis LieAlgebraBasis::full(size_t n) {
  std::vector<QMatrix> e;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      QMatrix m(n, n);
      m(i, j) = Rational(1);
      e.push_back(m);
    }
  return LieAlgebraBasis(n, e);
}

std::optional<std::vector<Rational>> LieAlgebraBasis::coordinates(const QMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return std::nullopt;
  std::vector<Rational> c(basis_.size());
  for (size_t k = 0; k < basis_.size(); ++k) c[k] = x.data()[pivots_[k]];
  if (!(combination(c) == x)) return std::nullopt;
  return c;
}

bool LieAlgebraBasis::contains(const LieAlgebraBasis& o) const {
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

QMatrix LieAlgebraBasis::combination(const std::vector<Rational>& coeffs) const {
  QMatrix out(n_, n_);
  for (size_t k = 0; k < basis_.size(); ++k)
    if (!is_zero(coeffs[k])) out = out + coeffs[k] * basis_[k];
  return out;
}

bool LieAlgebraBasis::is_closed() const {
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = i + 1; j < basis_.size(); ++j)
      if (!contains(bracket(basis_[i], basis_[j]))) return false;
  return true;
}

bool LieAlgebraBasis::is_abelian() const {
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = i + 1; j < basis_.size(); ++j)
      if (!bracket(basis_[i], basis_[j]).is_zero()) return false;
  return true;
}

LieAlgebraBasis stabilizer_lie_algebra(const Ideal<Rational>& I, StabilizerStats* stats,
                                       const std::vector<SparseRow<Rational>>& extra) {
  if (!I.is_homogeneous())
    throw std::invalid_argument("stabilizer_lie_algebra: generators are not homogeneous (use the affine variant)");
  const RingPtr& R = I.ring();
  const size_t n = R->nvars();
  const size_t nn = n * n;
  SparseEchelon<Rational> system(nn);
  for (const auto& row : extra) system.insert(row);

  std::vector<const Poly<Rational>*> gens;
  for (const auto& g : I.generators()) gens.push_back(&g);
  std::stable_sort(gens.begin(), gens.end(),
                   [](const auto* a, const auto* b) { return a->total_degree() < b->total_degree(); });

  std::map<unsigned, GradedPiece<Rational>> pieces;
  auto piece = [&](unsigned d) -> const GradedPiece<Rational>& {
    auto it = pieces.find(d);
    if (it != pieces.end()) return it->second;
    GradedPiece<Rational> p(R, d);
    for (const auto* g : gens)
      if (g->total_degree() <= static_cast<int>(d)) p.add_generator(*g);
    return pieces.emplace(d, std::move(p)).first->second;
  };

  StabilizerStats st;
  for (const auto* f : gens) {
    if (nn - system.rank() <= 1) {
      st.stopped_early = true;
      break;
    }
    ++st.generators_used;
    const unsigned d = static_cast<unsigned>(f->total_degree());
    if (d == 0) continue;
    const auto& P = piece(d);
    // equations[col] collects, over the unknowns g_ij, the coefficient of
    // monomial col in the residue of E_ij * f modulo I_d
    std::map<std::uint32_t, SparseRow<Rational>> equations;
    for (size_t i = 0; i < n; ++i) {
      Poly<Rational> dfi = f->derivative(i);
      if (dfi.is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        // E_ij * f = -x_j df/dx_i
        Poly<Rational> act = dfi.mul_term(Monomial::var(j), Rational(-1));
        auto res = P.span().reduce(P.to_row(act));
        const auto unknown = static_cast<std::uint32_t>(i * n + j);
        for (auto& [col, v] : res) equations[col].emplace_back(unknown, std::move(v));
      }
    }
    for (auto& [col, row] : equations) system.insert(row);
  }
  st.equations = system.rank();
  if (stats) *stats = st;

  std::vector<QMatrix> mats;
  for (auto& v : system.kernel()) mats.push_back(reshape(v, n));
  return LieAlgebraBasis(n, mats);
}

AffineStabilizer affine_stabilizer_lie_algebra(const Ideal<Rational>& I, StabilizerStats* stats) {
  RingPtr hring = homogenizing_ring(I.ring());
  std::vector<Poly<Rational>> hgens;
  for (const auto& g : I.groebner(MonomialOrder::degrevlex())) hgens.push_back(homogenize(g, hring));
  Ideal<Rational> hom(hring, hgens, I.options());
  const size_t n = hring->nvars();
  std::vector<SparseRow<Rational>> extra;
  for (size_t j = 1; j < n; ++j) extra.push_back({{static_cast<std::uint32_t>(j), Rational(1)}});
  auto alg = stabilizer_lie_algebra(hom, stats, extra);
  return {std::move(hom), std::move(alg)};
}

QMatrix ad_matrix(const QMatrix& x, const LieAlgebraBasis& g) {
  if (!g.contains(x)) throw std::invalid_argument("ad_matrix: element lies outside the algebra");
  const size_t d = g.dim();
  QMatrix out(d, d);
  for (size_t j = 0; j < d; ++j) {
    auto c = g.coordinates(bracket(x, g[j]));
    if (!c) throw std::invalid_argument("ad_matrix: basis is not closed under the bracket");
    for (size_t i = 0; i < d; ++i) out(i, j) = (*c)[i];
  }
  return out;
}

QMatrix random_element(const LieAlgebraBasis& g, std::uint64_t seed) {
  if (g.dim() == 0) throw std::invalid_argument("random_element: zero algebra");
  std::mt19937_64 rng(seed);
  std::vector<Rational> c(g.dim());
  for (;;) {
    bool any = false;
    for (auto& x : c) {
      x = small_coefficient(rng);
      any = any || !is_zero(x);
    }
    if (any) return g.combination(c);
  }
}

LieAlgebraBasis fitting_null_component(const QMatrix& x, const LieAlgebraBasis& g) {
  const QMatrix m = ad_matrix(x, g);
  const size_t d = g.dim();
  // ker M^(k+1) = { v : M v in ker M^k }
  auto current = null_space(m);
  for (;;) {
    if (current.size() == d) break;
    QMatrix aug(d, d + current.size());
    for (size_t i = 0; i < d; ++i) {
      for (size_t j = 0; j < d; ++j) aug(i, j) = m(i, j);
      for (size_t k = 0; k < current.size(); ++k) aug(i, d + k) = -current[k][i];
    }
    std::vector<std::vector<Rational>> next;
    for (const auto& w : null_space(aug)) next.emplace_back(w.begin(), w.begin() + static_cast<long>(d));
    auto r = rref(QMatrix::from_rows(next));
    if (r.rank() == current.size()) break;
    current.clear();
    for (size_t k = 0; k < r.rank(); ++k) current.push_back(r.rref.row(k));
  }
  std::vector<QMatrix> mats;
  for (const auto& v : current) mats.push_back(g.combination(v));
  return LieAlgebraBasis(g.n(), mats);
}

bool certify_cartan(const LieAlgebraBasis& c, const LieAlgebraBasis& g) {
  if (!g.contains(c)) return false;
  const size_t n = g.n();
  // lower central series
  LieAlgebraBasis term = c;
  bool nilpotent = c.dim() == 0;
  for (size_t k = 0; k <= c.dim() && !nilpotent; ++k) {
    std::vector<QMatrix> br;
    for (const auto& a : c.basis())
      for (const auto& b : term.basis()) br.push_back(bracket(a, b));
    term = LieAlgebraBasis(n, br);
    if (term.dim() == 0) nilpotent = true;
  }
  if (!nilpotent) return false;

  // normalizer { x in g : [x, c] in c } has dimension dim c exactly when c is
  // self-normalizing; residues modulo c are read off c's echelon form
  auto residue = [&](const QMatrix& y) {
    std::vector<Rational> coeffs(c.dim());
    auto yd = y.data();
    for (size_t k = 0; k < c.dim(); ++k) {
      // pivot of basis k is its first nonzero flat entry
      size_t p = 0;
      while (is_zero(c[k].data()[p])) ++p;
      coeffs[k] = yd[p];
    }
    return y - c.combination(coeffs);
  };
  std::vector<std::vector<Rational>> rows;
  const size_t gd = g.dim();
  std::vector<std::vector<QMatrix>> res(gd);
  for (size_t k = 0; k < gd; ++k)
    for (const auto& b : c.basis()) res[k].push_back(residue(bracket(g[k], b)));
  for (size_t i = 0; i < c.dim(); ++i)
    for (size_t e = 0; e < n * n; ++e) {
      std::vector<Rational> row(gd);
      bool any = false;
      for (size_t k = 0; k < gd; ++k) {
        row[k] = res[k][i].data()[e];
        any = any || !is_zero(row[k]);
      }
      if (any) rows.push_back(std::move(row));
    }
  const size_t rk = rows.empty() ? 0 : rank(QMatrix::from_rows(rows));
  return gd - rk == c.dim();
}

namespace {

bool splits_over_q(const UPoly<Rational>& cp) {
  auto sf = squarefree_part(cp);
  return static_cast<int>(rational_roots(sf).size()) == sf.degree();
}

}  // namespace

CartanResult find_cartan(const LieAlgebraBasis& g, std::uint64_t seed, int max_retries) {
  if (g.dim() == 0) throw std::invalid_argument("find_cartan: zero algebra");
  CartanResult out;
  auto attempt = [&](const QMatrix& x) {
    ++out.attempts;
    auto c = fitting_null_component(x, g);
    if (!certify_cartan(c, g)) return false;
    out.cartan = std::move(c);
    out.seed_element = x;
    return true;
  };

  // Squarefree basis elements, those with rational eigenvalues first: their
  // Cartan then diagonalizes without field extensions.
  std::vector<const QMatrix*> squarefree_rest;
  std::vector<bool> split(g.dim(), false);
  for (size_t k = 0; k < g.dim(); ++k) {
    const QMatrix& b = g[k];
    auto cp = char_poly(b);
    split[k] = splits_over_q(cp);
    if (squarefree_part(cp).degree() != cp.degree()) continue;
    if (!split[k]) {
      squarefree_rest.push_back(&b);
      continue;
    }
    if (attempt(b)) {
      out.from_basis_element = true;
      return out;
    }
  }

  // A commuting family of split semisimple parts of basis elements spans a
  // split torus; a generic element of it seeds a Cartan when the torus is maximal.
  std::vector<QMatrix> family;
  for (size_t k = 0; k < g.dim(); ++k) {
    if (!split[k]) continue;
    QMatrix s = jordan_chevalley(g[k]).s;
    if (s.is_zero() || !g.contains(s)) continue;
    bool commutes = true;
    for (const auto& f : family)
      if (!bracket(f, s).is_zero()) {
        commutes = false;
        break;
      }
    if (commutes && !LieAlgebraBasis(g.n(), family).contains(s)) family.push_back(std::move(s));
  }
  std::mt19937_64 rng(seed);
  if (!family.empty()) {
    for (int r = 1; r <= 6; ++r) {
      std::uniform_int_distribution<long> coef(-100L * r, 100L * r);
      QMatrix x(g.n(), g.n());
      for (const auto& f : family) x = x + Rational(coef(rng)) * f;
      if (x.is_zero()) continue;
      if (attempt(x)) {
        out.from_split_torus = true;
        return out;
      }
    }
  }

  for (const QMatrix* b : squarefree_rest)
    if (attempt(*b)) {
      out.from_basis_element = true;
      return out;
    }

  for (int r = 0; r < max_retries; ++r)
    if (attempt(random_element(g, rng()))) return out;
  throw std::runtime_error("find_cartan: no certified Cartan subalgebra after " + std::to_string(max_retries) +
                           " random elements");
}

CartanDecomposition toral_decomposition(const LieAlgebraBasis& c) {
  std::vector<QMatrix> ss, ns;
  for (const auto& b : c.basis()) {
    auto jc = jordan_chevalley(b);
    ss.push_back(jc.s);
    ns.push_back(jc.n);
  }
  CartanDecomposition out{c, LieAlgebraBasis(c.n(), ss), LieAlgebraBasis(c.n(), ns)};
  auto fail = [](const char* why) { throw std::logic_error(std::string("toral_decomposition: ") + why); };
  if (!c.contains(out.toral) || !c.contains(out.nilpotent)) fail("a Jordan part left the algebra");
  if (out.toral.dim() + out.nilpotent.dim() != c.dim()) fail("the parts do not span a direct sum");
  if (!out.toral.is_abelian()) fail("semisimple parts do not commute");
  for (const auto& t : out.toral.basis()) {
    auto mp = min_poly(t);
    if (squarefree_part(mp).degree() != mp.degree()) fail("a toral element is not semisimple");
  }
  for (const auto& x : out.nilpotent.basis())
    if (!is_nilpotent(x)) fail("a nilpotent part is not nilpotent");
  return out;
}

}  // namespace lietoric
