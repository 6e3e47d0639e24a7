#include "lietoric/eigen.hpp"

#include <stdexcept>

namespace lietoric {

namespace {

UPoly<AlgNum> lift_poly(const UPoly<Rational>& p) {
  std::vector<AlgNum> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return UPoly<AlgNum>(std::move(c));
}

UPoly<AlgNum> rebase_poly(const UPoly<AlgNum>& p, const Tower::Ptr& t) {
  std::vector<AlgNum> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(x.rebase(t));
  return UPoly<AlgNum>(std::move(c));
}

std::vector<AlgNum> to_algnum(const std::vector<Rational>& v) { return {v.begin(), v.end()}; }

template <class K>
Matrix<K> shifted(const Matrix<K>& m, const K& lambda) {
  Matrix<K> r = m;
  for (size_t i = 0; i < m.rows(); ++i) r(i, i) = r(i, i) - lambda;
  return r;
}

bool certify_space(const Matrix<AlgNum>& m, const EigenSpace& sp) {
  for (const auto& v : sp.vectors) {
    auto w = m * v;
    for (size_t i = 0; i < v.size(); ++i)
      if (!(w[i] == sp.value * v[i])) return false;
  }
  return true;
}

// Picks the branch with the smaller defining factor; ties go to the first.
Tower::Ptr choose_branch(const Tower::Ptr& t, const SplitEvent& ev) {
  auto [a, b] = t->split(ev);
  return ev.first.degree() <= ev.second.degree() ? a : b;
}

}  // namespace

Rational small_coefficient(std::mt19937_64& rng) {
  static const Rational kValues[] = {Rational(0),  Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(2)),
                                     Rational(1),  Rational(-1),                    Rational(2),
                                     Rational(-2)};
  std::uniform_int_distribution<int> pick(0, 6);
  return kValues[pick(rng)];
}

Matrix<AlgNum> to_algnum(const Matrix<Rational>& m) {
  return Matrix<AlgNum>(m.rows(), m.cols(), std::vector<AlgNum>(m.data().begin(), m.data().end()));
}

Matrix<AlgNum> rebase(const Matrix<AlgNum>& m, const Tower::Ptr& t) {
  std::vector<AlgNum> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.push_back(x.rebase(t));
  return Matrix<AlgNum>(m.rows(), m.cols(), std::move(d));
}

bool all_rational(const Matrix<AlgNum>& m) {
  for (const auto& x : m.data())
    if (!x.is_rational()) return false;
  return true;
}

Matrix<Rational> to_rational(const Matrix<AlgNum>& m) {
  std::vector<Rational> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.push_back(x.to_rational());
  return Matrix<Rational>(m.rows(), m.cols(), std::move(d));
}

EigenDecomposition eigen_decompose(const Matrix<Rational>& m, int max_splits) {
  if (!m.is_square()) throw std::invalid_argument("eigen_decompose: matrix is not square");
  const size_t n = m.rows();
  UPoly<Rational> q = squarefree_part(char_poly(m));
  std::vector<Rational> rat = rational_roots(q);
  UPoly<Rational> rest = q;
  for (const auto& r : rat) rest = divmod(rest, UPoly<Rational>{-r, Rational(1)}).first;

  EigenDecomposition out;
  size_t total = 0;
  for (const auto& r : rat) {
    EigenSpace sp{AlgNum(r), {}};
    for (const auto& v : kernel(shifted(m, r))) sp.vectors.push_back(to_algnum(v));
    total += sp.vectors.size();
    out.spaces.push_back(std::move(sp));
  }
  if (rest.degree() <= 0) {
    if (total != n) throw std::domain_error("eigen_decompose: matrix is not diagonalizable");
    return out;
  }

  const size_t nroots = static_cast<size_t>(rest.degree());
  Tower::Ptr t = Tower::empty();
  std::vector<AlgNum> roots;
  UPoly<AlgNum> rem = lift_poly(rest);
  const Matrix<AlgNum> ma = to_algnum(m);
  for (;;) {
    try {
      while (rem.degree() >= 2) {
        AlgNum a;
        t = t->adjoin(rem, "a" + std::to_string(roots.size() + 1), &a);
        rem = divmod(rem, UPoly<AlgNum>{-a, AlgNum(1)}).first;
        roots.push_back(a);
      }
      if (roots.size() < nroots) {
        roots.push_back(-rem.coeff(0));
        rem = UPoly<AlgNum>::constant(AlgNum(1));
      }
      std::vector<EigenSpace> alg;
      size_t count = total;
      for (const auto& a : roots) {
        EigenSpace sp{a, kernel(shifted(ma, a))};
        count += sp.vectors.size();
        alg.push_back(std::move(sp));
      }
      if (count != n) throw std::domain_error("eigen_decompose: matrix is not diagonalizable");
      for (const auto& sp : alg)
        if (!certify_space(ma, sp)) throw std::logic_error("eigen_decompose: eigenpair failed verification");
      for (auto& sp : alg) out.spaces.push_back(std::move(sp));
      out.tower = t;
      return out;
    } catch (const SplitEvent& ev) {
      if (++out.splits > max_splits) throw std::runtime_error("eigen_decompose: tower split budget exhausted");
      t = choose_branch(t, ev);
      for (auto& a : roots) a = a.rebase(t);
      rem = rebase_poly(rem, t);
    }
  }
}

bool Diagonalizer::is_rational() const { return all_rational(S); }

Matrix<Rational> Diagonalizer::rational() const { return to_rational(S); }

bool certify_diagonalizes(const Matrix<AlgNum>& S, const Matrix<Rational>& a) {
  const Matrix<AlgNum> aa = to_algnum(a);
  for (size_t j = 0; j < S.cols(); ++j) {
    auto v = S.column(j);
    auto w = aa * v;
    size_t k = 0;
    while (k < v.size() && !(v[k] == AlgNum(1))) ++k;
    if (k == v.size()) {
      k = 0;
      while (k < v.size() && is_zero(v[k])) ++k;
      if (k == v.size()) return false;
    }
    AlgNum mu = v[k] == AlgNum(1) ? w[k] : w[k] / v[k];
    for (size_t i = 0; i < v.size(); ++i)
      if (!(w[i] == mu * v[i])) return false;
  }
  return true;
}

Diagonalizer simultaneous_diagonalizer(const std::vector<Matrix<Rational>>& family, std::uint64_t seed,
                                       int max_retries) {
  if (family.empty()) throw std::invalid_argument("simultaneous_diagonalizer: empty family");
  const size_t n = family[0].rows();
  std::mt19937_64 rng(seed);
  Diagonalizer d;
  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    d.attempts = attempt;
    Matrix<Rational> m(n, n);
    if (family.size() == 1) {
      m = family[0];
    } else {
      bool nonzero = false;
      while (!nonzero) {
        m = Matrix<Rational>(n, n);
        // {0, ±1/2, ±1, ±2} collides too often on tori of dimension > 3, so
        // the range grows with each attempt
        const long bound = 8L * attempt;
        std::uniform_int_distribution<long> coef(-bound, bound);
        for (const auto& a : family) {
          Rational c(coef(rng));
          if (c.sign() != 0) m = m + c * a;
        }
        nonzero = !m.is_zero();
      }
    }
    EigenDecomposition ed = eigen_decompose(m, max_retries);
    d.splits += ed.splits;
    std::vector<std::vector<AlgNum>> cols;
    for (const auto& sp : ed.spaces)
      for (const auto& v : sp.vectors) {
        cols.push_back(v);
        if (ed.tower)
          for (auto& x : cols.back()) x = x.rebase(ed.tower);
      }
    d.S = Matrix<AlgNum>::from_columns(cols, n);
    d.tower = ed.tower && ed.tower->depth() > 0 ? ed.tower : nullptr;
    bool ok = true;
    for (const auto& a : family) {
      if (!certify_diagonalizes(d.S, a)) {
        ok = false;
        break;
      }
    }
    if (ok) return d;
  }
  throw std::runtime_error("simultaneous_diagonalizer: retry budget exhausted");
}

}  // namespace lietoric
