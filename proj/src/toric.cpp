#include "lietoric/toric.hpp"

#include <stdexcept>
#include <type_traits>

namespace lietoric {

bool ExponentLattice::is_saturated() const {
  for (const auto& d : invariants())
    if (d != BigInt(1)) return false;
  return true;
}

std::vector<BigInt> ExponentLattice::invariants() const {
  if (generators.cols() == 0 || generators.rows() == 0) return {};
  return smith_normal_form(generators).invariants();
}

Ideal<AlgNum> to_algnum(const Ideal<Rational>& I) {
  std::vector<Poly<AlgNum>> gens;
  for (const auto& f : I.generators())
    gens.push_back(map_coefficients<AlgNum>(f, [](const Rational& q) { return AlgNum(q); }));
  return Ideal<AlgNum>(I.ring(), gens, I.options());
}

Diagonalizer diagonalize_toral(const LieAlgebraBasis& t, std::uint64_t seed, int max_retries) {
  if (t.dim() == 0) {
    Diagonalizer d;
    d.S = to_algnum(QMatrix::identity(t.n()));
    return d;
  }
  return simultaneous_diagonalizer(t.basis(), seed, max_retries);
}

std::string status_name(ToricStatus s) {
  switch (s) {
    case ToricStatus::Toric: return "Toric";
    case ToricStatus::BinomialNotPrime: return "BinomialNotPrime";
    case ToricStatus::NotBinomial: return "NotBinomial";
    case ToricStatus::InputNotHandled: return "InputNotHandled";
  }
  return "?";
}

ComplexityReport complexity_report(const Ideal<Rational>& I, int t_dim) {
  ComplexityReport r;
  r.variety_dim = krull_dimension(I);
  r.complexity = r.variety_dim - t_dim;
  r.unital_excluded = r.complexity > 0;
  return r;
}

namespace {

struct Outcome {
  ToricStatus status;
  std::string reason;
  std::vector<std::string> basis;
  AMatrix P;
  Tower::Ptr tower;
};

template <class K>
Poly<K> lift(const Poly<Rational>& f) {
  if constexpr (std::is_same_v<K, Rational>) return f;
  else return map_coefficients<K>(f, [](const Rational& q) { return K(q); });
}

AMatrix as_algnum(const Matrix<Rational>& m) { return lietoric::to_algnum(m); }
AMatrix as_algnum(const AMatrix& m) { return m; }

// Reorders and rescales the eigenvector columns so that the first row is
// (1, 0, ..., 0). Columns with a nonzero first entry share one joint
// eigenspace, so combining them keeps every column an eigenvector.
template <class K>
Matrix<K> normalize_affine(Matrix<K> P) {
  const size_t n = P.rows();
  size_t k0 = n;
  for (size_t k = 0; k < n && k0 == n; ++k)
    if (!detail::zero(P(0, k))) k0 = k;
  if (k0 == n) throw std::logic_error("normalize_affine: singular transform");
  const K inv = K(1) / P(0, k0);
  for (size_t i = 0; i < n; ++i) P(i, k0) = P(i, k0) * inv;
  for (size_t k = 0; k < n; ++k) {
    if (k == k0 || detail::zero(P(0, k))) continue;
    const K c = P(0, k);
    for (size_t i = 0; i < n; ++i) P(i, k) = P(i, k) - c * P(i, k0);
  }
  Matrix<K> out(n, n);
  for (size_t i = 0; i < n; ++i) {
    out(i, 0) = P(i, k0);
    size_t col = 1;
    for (size_t k = 0; k < n; ++k)
      if (k != k0) out(i, col++) = P(i, k);
  }
  return out;
}

// Substitutes x -> P x, optionally dehomogenizes, then runs the binomial and
// prime checks.
template <class K>
Outcome check_transform(const Ideal<Rational>& src, Matrix<K> P, const Tower::Ptr& tower, const RingPtr& affine_ring) {
  if (affine_ring) P = normalize_affine(P);
  std::vector<Poly<K>> gens;
  for (const auto& f : src.generators()) {
    auto g = substitute_linear(lift<K>(f), P);
    gens.push_back(affine_ring ? dehomogenize(g, affine_ring) : g);
  }
  Ideal<K> J(affine_ring ? affine_ring : src.ring(), gens, src.options());
  Outcome out{ToricStatus::NotBinomial, "", {}, as_algnum(P), tower};
  for (const auto& g : J.groebner()) out.basis.push_back(g.to_string());
  if (!is_binomial(J)) {
    out.reason = "transformed reduced basis has an element with more than two terms";
    return out;
  }
  auto pr = binomial_primality(J);
  out.status = pr.prime ? ToricStatus::Toric : ToricStatus::BinomialNotPrime;
  out.reason = pr.reason + (pr.witness.empty() ? "" : " (witness " + pr.witness + ")");
  return out;
}

void run_branches(const Ideal<Rational>& src, const AMatrix& P, const Tower::Ptr& tower, const RingPtr& affine_ring,
                  int& splits, int max_splits, std::vector<Outcome>& out) {
  try {
    out.push_back(check_transform<AlgNum>(src, P, tower, affine_ring));
  } catch (const SplitEvent& ev) {
    if (++splits > max_splits) throw std::runtime_error("tower split budget exhausted during the binomial checks");
    auto [a, b] = tower->split(ev);
    run_branches(src, rebase(P, a), a, affine_ring, splits, max_splits, out);
    run_branches(src, rebase(P, b), b, affine_ring, splits, max_splits, out);
  }
}

struct Pipeline {
  const Ideal<Rational>& src;  // homogeneous ideal the algebra stabilizes
  LieAlgebraBasis g;
  RingPtr affine_ring;         // set for the affine variant
  const Ideal<Rational>& original;
  int torus_offset;            // scalar direction removed in the affine case
};

ToricVerdict finish(const Pipeline& pl, const ToricOptions& opt, ToricVerdict& v, bool complexity_tried) {
  if (v.transform && pl.affine_ring) {
    const AMatrix& P = *v.transform;
    const size_t n = P.rows() - 1;
    AMatrix tr(n, 1), lin(n, n);
    for (size_t i = 0; i < n; ++i) {
      tr(i, 0) = P(i + 1, 0);
      for (size_t j = 0; j < n; ++j) lin(i, j) = P(i + 1, j + 1);
    }
    v.translation = tr;
    v.linear = lin;
  }

  if (opt.compute_complexity && !complexity_tried && v.torus_dim >= 0) {
    try {
      auto cr = complexity_report(pl.original, v.torus_dim);
      v.variety_dim = cr.variety_dim;
      v.complexity = cr.complexity;
    } catch (const GroebnerBudgetExceeded& e) {
      v.diagnostics.push_back(std::string("variety dimension unavailable: ") + e.what());
    }
  }
  if (v.complexity && *v.complexity > 0) {
    v.unital_excluded = true;
    v.diagnostics.push_back("maximal torus is smaller than the variety: not toric and not generated by unital binomials");
  }
  return v;
}

ToricVerdict run_pipeline(const Pipeline& pl, const ToricOptions& opt, ToricVerdict v) {
  bool tried = false;
  try {
    v.lie_dim = pl.g.dim();
    auto c = find_cartan(pl.g, opt.seed, opt.max_retries);
    v.cartan_attempts = c.attempts;
    v.cartan_dim = c.cartan.dim();
    auto dec = toral_decomposition(c.cartan);
    v.toral_dim = dec.toral.dim();
    v.nilpotent_dim = dec.nilpotent.dim();
    v.torus_dim = static_cast<int>(dec.toral.dim()) - pl.torus_offset;

    if (opt.assume_prime || opt.compute_complexity) {
      tried = true;
      try {
        auto cr = complexity_report(pl.original, v.torus_dim);
        v.variety_dim = cr.variety_dim;
        v.complexity = cr.complexity;
      } catch (const GroebnerBudgetExceeded& e) {
        v.diagnostics.push_back(std::string("variety dimension unavailable: ") + e.what());
      }
    }
    // A binomial prime of dimension d carries a d-dimensional torus, so a
    // smaller maximal torus settles the question before any diagonalization.
    if (v.complexity && *v.complexity > 0) {
      v.reason = "maximal torus of dimension " + std::to_string(v.torus_dim) + " is smaller than the variety (dimension " +
                 std::to_string(*v.variety_dim) + "); binomial checks skipped";
      return finish(pl, opt, v, tried);
    }

    Diagonalizer D = diagonalize_toral(dec.toral, opt.seed, opt.max_retries);
    v.diagonalizer_attempts = D.attempts;
    v.tower_splits = D.splits;
    if (opt.assume_prime && v.variety_dim && *v.variety_dim == v.torus_dim) {
      v.used_prime_shortcut = true;
      v.status = ToricStatus::Toric;
      v.reason = "declared prime and torus dimension equals the variety dimension";
      if (D.is_rational()) {
        v.transform = as_algnum(pl.affine_ring ? normalize_affine(D.rational()) : D.rational());
      } else {
        v.transform = pl.affine_ring ? normalize_affine(D.S) : D.S;
        v.tower = D.tower;
      }
      return finish(pl, opt, v, tried);
    }

    std::vector<Outcome> outs;
    if (D.is_rational()) {
      outs.push_back(check_transform<Rational>(pl.src, D.rational(), nullptr, pl.affine_ring));
    } else {
      int splits = 0;
      run_branches(pl.src, D.S, D.tower, pl.affine_ring, splits, opt.max_splits, outs);
      v.tower_splits += splits;
    }
    for (const auto& o : outs)
      if (o.status != outs.front().status)
        throw std::logic_error("branches of the extension tower disagree on the verdict");
    size_t best = 0;
    for (size_t k = 1; k < outs.size(); ++k)
      if (outs[k].tower && outs[best].tower && outs[k].tower->degree() < outs[best].tower->degree()) best = k;
    const Outcome& o = outs[best];
    v.branches = static_cast<int>(outs.size());
    v.status = o.status;
    v.reason = o.reason;
    v.transform = o.P;
    v.tower = o.tower;
    v.transformed_basis = o.basis;
  } catch (const GroebnerBudgetExceeded& e) {
    v.status = ToricStatus::InputNotHandled;
    v.reason = e.what();
  } catch (const std::runtime_error& e) {
    v.status = ToricStatus::InputNotHandled;
    v.reason = e.what();
  }

  return finish(pl, opt, v, tried);
}

bool has_constant(const Ideal<Rational>& I) {
  for (const auto& g : I.generators())
    if (g.is_constant()) return true;
  return false;
}

}  // namespace

ToricVerdict decide_toric(const Ideal<Rational>& I, const ToricOptions& opt) {
  if (!I.is_homogeneous())
    throw std::invalid_argument("decide_toric: generators are not homogeneous (use the affine variant)");
  ToricVerdict v;
  if (has_constant(I)) {
    v.reason = "unit ideal";
    return v;
  }
  Pipeline pl{I, stabilizer_lie_algebra(I), nullptr, I, 0};
  return run_pipeline(pl, opt, v);
}

ToricVerdict decide_toric_affine(const Ideal<Rational>& I, const ToricOptions& opt) {
  ToricVerdict v;
  v.affine = true;
  try {
    if (I.is_unit()) {
      v.reason = "unit ideal";
      return v;
    }
  } catch (const GroebnerBudgetExceeded& e) {
    v.reason = e.what();
    return v;
  }
  auto aff = affine_stabilizer_lie_algebra(I);
  Pipeline pl{aff.homogenized, aff.algebra, I.ring(), I, 1};
  return run_pipeline(pl, opt, v);
}

}  // namespace lietoric
