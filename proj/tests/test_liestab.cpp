#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lietoric/liestab.hpp"
#include "lietoric/parse.hpp"
#include "lietoric/polyspan.hpp"

#include <random>
#include <set>

using namespace lietoric;

namespace {

using QPoly = Poly<Rational>;
using QIdeal = Ideal<Rational>;

QIdeal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (auto s : gens) g.push_back(parse_poly(s, r));
  return QIdeal(r, g);
}

QIdeal load(const std::string& name) {
  auto f = load_ideal_file(std::string(LIETORIC_TEST_DATA) + "/" + name);
  return QIdeal(f.ring, f.gens);
}

QMatrix qm(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return QMatrix::from_rows(r);
}

QMatrix unit(size_t n, size_t i, size_t j) {
  QMatrix m(n, n);
  m(i, j) = Rational(1);
  return m;
}

QMatrix perm_matrix(const std::vector<size_t>& p) {
  QMatrix m(p.size(), p.size());
  for (size_t i = 0; i < p.size(); ++i) m(i, p[i]) = Rational(1);
  return m;
}

// Brute-force oracle: impose g * f in span(B_d) for every f of every graded
// piece B_d, using dense residues against the reduced piece basis.
size_t brute_stabilizer_dim(const QIdeal& I) {
  const auto& R = I.ring();
  const size_t n = R->nvars();
  std::set<unsigned> degrees;
  for (const auto& g : I.generators()) degrees.insert(static_cast<unsigned>(g.total_degree()));
  std::vector<std::vector<Rational>> eqs;
  for (unsigned d : degrees) {
    auto B = graded_piece_basis(I.generators(), d);
    auto monos = R->monomials_of_degree(d);
    auto dense = [&](const QPoly& p) {
      std::vector<Rational> v(monos.size());
      for (size_t k = 0; k < monos.size(); ++k) v[k] = p.coeff(monos[k]);
      return v;
    };
    std::vector<std::vector<Rational>> bd;
    std::vector<size_t> piv;
    for (const auto& b : B) {
      bd.push_back(dense(b));
      size_t p = 0;
      while (is_zero(bd.back()[p])) ++p;
      piv.push_back(p);
    }
    for (const auto& f : B) {
      std::vector<std::vector<Rational>> cols;  // residue of E_ij * f per unknown
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          auto v = dense(derivation_action(unit(n, i, j), f));
          auto r = v;
          for (size_t k = 0; k < bd.size(); ++k)
            for (size_t c = 0; c < r.size(); ++c) r[c] = r[c] - v[piv[k]] * bd[k][c];
          cols.push_back(r);
        }
      for (size_t c = 0; c < monos.size(); ++c) {
        std::vector<Rational> row(n * n);
        for (size_t u = 0; u < n * n; ++u) row[u] = cols[u][c];
        eqs.push_back(row);
      }
    }
  }
  if (eqs.empty()) return n * n;
  return n * n - rank(QMatrix::from_rows(eqs));
}

void check_invariance(const QIdeal& I, const LieAlgebraBasis& g) {
  for (const auto& x : g.basis())
    for (const auto& f : I.generators()) CHECK(member(derivation_action(x, f), I));
}

std::vector<QIdeal> regression_ideals() {
  return {
      ideal(Ring::make({"x", "y"}), {"x^2"}),
      ideal(Ring::make({"x1", "x2", "x3"}), {"x1 x2 - x3^2"}),
      ideal(Ring::make({"a", "b", "c", "d"}), {"a d - b c", "a c - b^2", "b d - c^2"}),
      ideal(Ring::make({"x", "y", "z"}), {"x y", "z^3"}),
      ideal(Ring::make({"x", "y", "z"}), {"x^2 + y^2 + z^2"}),
      load("ci8_quadrics.ideal"),
      load("colored_path3.ideal"),
      load("scalar_quartics.ideal"),
  };
}

}  // namespace

TEST_CASE("stabilizer examples") {
  auto g = stabilizer_lie_algebra(ideal(Ring::make({"x", "y"}), {"x^2"}));
  CHECK(g.dim() == 3);
  for (const auto& b : g.basis()) CHECK(is_zero(b(0, 1)));
  auto q = stabilizer_lie_algebra(ideal(Ring::make({"x1", "x2", "x3"}), {"x1 x2 - x3^2"}));
  CHECK(q.dim() == 4);
  CHECK(q.contains(QMatrix::identity(3)));
  CHECK(stabilizer_lie_algebra(QIdeal(Ring::make({"a", "b", "c"}), {})).dim() == 9);
  CHECK_THROWS_AS(stabilizer_lie_algebra(ideal(Ring::make({"x"}), {"x - 1"})), std::invalid_argument);
}

TEST_CASE("stabilizer agrees with the brute-force system on every graded piece element") {
  for (const auto& I : regression_ideals()) {
    CAPTURE(I.to_string());
    CHECK(stabilizer_lie_algebra(I).dim() == brute_stabilizer_dim(I));
  }
}

TEST_CASE("stabilizer of the complete intersection in 8 variables") {
  auto I = load("ci8_quadrics.ideal");
  auto g = stabilizer_lie_algebra(I);
  REQUIRE(g.dim() == 5);
  std::vector<QMatrix> reference{
      QMatrix::identity(8),
      perm_matrix({1, 0, 3, 2, 5, 4, 7, 6}),
      perm_matrix({2, 3, 0, 1, 6, 7, 4, 5}),
      perm_matrix({4, 5, 6, 7, 0, 1, 2, 3}),
      perm_matrix({7, 6, 5, 4, 3, 2, 1, 0}),
  };
  CHECK(g.same_span(LieAlgebraBasis(8, reference)));
  CHECK(g.is_abelian());
}

TEST_CASE("quartic ideal with only scalar symmetries") {
  StabilizerStats st;
  auto g = stabilizer_lie_algebra(load("scalar_quartics.ideal"), &st);
  REQUIRE(g.dim() == 1);
  CHECK(g[0] == QMatrix::identity(2));
  CHECK_FALSE(st.stopped_early);
  // once only scalars remain, further generators are skipped
  auto r = Ring::make({"x", "y"});
  auto g2 = stabilizer_lie_algebra(ideal(r, {"x^4", "y^4", "x^3 y - x y^3", "x^2 y^2"}), &st);
  CHECK(g2.dim() == 1);
  CHECK(st.stopped_early);
  CHECK(st.generators_used == 3);
}

TEST_CASE("stabilizer properties: invariance, closure, conjugation") {
  std::mt19937_64 rng(3);
  for (const auto& I : regression_ideals()) {
    CAPTURE(I.to_string());
    auto g = stabilizer_lie_algebra(I);
    check_invariance(I, g);
    CHECK(g.is_closed());
    for (const auto& b : g.basis()) {
      size_t p = 0;
      while (is_zero(b.data()[p])) ++p;
      CHECK(b.data()[p] == Rational(1));
    }
    // J = I(Ax) has stabilizer A^-1 g A
    const size_t n = I.nvars();
    std::vector<size_t> p(n);
    for (size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    QMatrix a = perm_matrix(p);
    std::uniform_int_distribution<long> d(-1, 1);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) a(i, j) = a(i, j) + Rational(d(rng));
    if (rank(a) < n) a = perm_matrix(p);
    std::vector<QPoly> moved;
    for (const auto& f : I.generators()) moved.push_back(substitute_linear(f, a));
    auto h = stabilizer_lie_algebra(QIdeal(I.ring(), moved));
    QMatrix ai = inverse(a);
    std::vector<QMatrix> conj;
    for (const auto& b : g.basis()) conj.push_back(ai * b * a);
    CHECK(h.same_span(LieAlgebraBasis(n, conj)));
  }
}

TEST_CASE("affine stabilizer of a point on the line") {
  auto I = ideal(Ring::make({"x"}), {"x - 1"});
  auto a = affine_stabilizer_lie_algebra(I);
  CHECK(a.homogenized.ring()->names() == std::vector<std::string>{"x0", "x"});
  REQUIRE(a.homogenized.generators().size() == 1);
  CHECK(a.homogenized.generators()[0] == parse_poly("x - x0", a.homogenized.ring()));
  // hand solve: g00 - g10 + g01 - g11 = 0 and g01 = 0
  REQUIRE(a.algebra.dim() == 2);
  for (const auto& g : a.algebra.basis()) {
    CHECK(is_zero(g(0, 1)));
    CHECK(g(0, 0) == g(1, 0) + g(1, 1));
  }
  check_invariance(a.homogenized, a.algebra);
}

TEST_CASE("affine stabilizer of a homogeneous ideal sits inside the plain one") {
  for (const auto& I : regression_ideals()) {
    auto a = affine_stabilizer_lie_algebra(I);
    auto plain = stabilizer_lie_algebra(a.homogenized);
    CHECK(plain.contains(a.algebra));
    for (const auto& g : a.algebra.basis())
      for (size_t j = 1; j < g.cols(); ++j) CHECK(is_zero(g(0, j)));
  }
}

TEST_CASE("brackets and ad") {
  QMatrix a = qm({{1, 2}, {3, 4}});
  CHECK(bracket(a, a).is_zero());
  QMatrix h = qm({{1, 0}, {0, -1}}), e = qm({{0, 1}, {0, 0}});
  LieAlgebraBasis b(2, {h, e});
  auto ad = ad_matrix(h, b);
  auto ce = *b.coordinates(e);
  auto image = ad * ce;
  for (size_t i = 0; i < image.size(); ++i) CHECK(image[i] == Rational(2) * ce[i]);
  LieAlgebraBasis diag(3, {unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2)});
  CHECK(ad_matrix(unit(3, 1, 1), diag).is_zero());
  CHECK_THROWS_AS(ad_matrix(e, diag.dim() ? LieAlgebraBasis(2, {h}) : diag), std::invalid_argument);
}

TEST_CASE("random elements") {
  LieAlgebraBasis one(2, {qm({{1, 1}, {0, 1}})});
  auto x = random_element(one, 5);
  CHECK(!x.is_zero());
  CHECK(one.contains(x));
  LieAlgebraBasis diag(4, {unit(4, 0, 0), unit(4, 1, 1), unit(4, 2, 2), unit(4, 3, 3)});
  CHECK(random_element(diag, 99) == random_element(diag, 99));
  std::set<std::string> seen;
  const std::set<std::string> allowed{"0", "1/2", "-1/2", "1", "-1", "2", "-2"};
  for (std::uint64_t s = 0; s < 300; ++s) {
    auto y = random_element(diag, s);
    CHECK(!y.is_zero());
    for (size_t i = 0; i < 4; ++i) seen.insert(to_string(y(i, i)));
  }
  CHECK(seen == allowed);
}

TEST_CASE("Cartan subalgebras") {
  LieAlgebraBasis diag(3, {unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2)});
  auto cd = find_cartan(diag, 1);
  CHECK(cd.cartan.same_span(diag));

  auto gl2 = LieAlgebraBasis::full(2);
  auto c = find_cartan(gl2, 7);
  CHECK(c.cartan.dim() == 2);
  CHECK(certify_cartan(c.cartan, gl2));
  CHECK(c.cartan.is_abelian());
  // brute force: kernel of ad(x)^4 for a concrete element
  QMatrix x = qm({{1, 2}, {0, -1}});
  auto m = ad_matrix(x, gl2);
  auto k = kernel(m * m * m * m);
  std::vector<QMatrix> km;
  for (const auto& v : k) km.push_back(gl2.combination(v));
  CHECK(fitting_null_component(x, gl2).same_span(LieAlgebraBasis(2, km)));
  CHECK(LieAlgebraBasis(2, km).dim() == 2);

  auto g42 = stabilizer_lie_algebra(load("ci8_quadrics.ideal"));
  auto c42 = find_cartan(g42, 3);
  CHECK(c42.cartan.same_span(g42));
}

TEST_CASE("Cartan certification") {
  auto gl2 = LieAlgebraBasis::full(2);
  CHECK(certify_cartan(LieAlgebraBasis(2, {unit(2, 0, 0), unit(2, 1, 1)}), gl2));
  CHECK_FALSE(certify_cartan(LieAlgebraBasis(2, {unit(2, 0, 1)}), gl2));
  LieAlgebraBasis ab(3, {unit(3, 0, 0), unit(3, 1, 1) + unit(3, 2, 2)});
  CHECK(certify_cartan(ab, ab));
  // the scalars are nilpotent but not self-normalizing in gl_2
  CHECK_FALSE(certify_cartan(LieAlgebraBasis(2, {QMatrix::identity(2)}), gl2));
  // upper triangular 2x2 is not nilpotent
  auto b = LieAlgebraBasis(2, {unit(2, 0, 0), unit(2, 1, 1), unit(2, 0, 1)});
  CHECK_FALSE(certify_cartan(b, gl2));
  // Borel of gl_3: a Cartan is the diagonal
  LieAlgebraBasis borel(3, {unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2), unit(3, 0, 1), unit(3, 0, 2), unit(3, 1, 2)});
  auto cb = find_cartan(borel, 11);
  CHECK(cb.cartan.dim() == 3);
  CHECK(certify_cartan(cb.cartan, borel));
}

TEST_CASE("toral decomposition") {
  LieAlgebraBasis diag(3, {unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2)});
  auto d = toral_decomposition(diag);
  CHECK(d.toral.same_span(diag));
  CHECK(d.nilpotent.dim() == 0);
  LieAlgebraBasis jn(2, {QMatrix::identity(2), unit(2, 0, 1)});
  auto j = toral_decomposition(jn);
  CHECK(j.toral.dim() == 1);
  CHECK(j.nilpotent.dim() == 1);
  CHECK(j.toral.contains(QMatrix::identity(2)));
  LieAlgebraBasis scal(4, {QMatrix::identity(4)});
  auto s = toral_decomposition(scal);
  CHECK(s.toral.same_span(scal));
  CHECK(s.nilpotent.dim() == 0);
}

TEST_CASE("Cartan pipeline properties on regression ideals") {
  for (const auto& I : regression_ideals()) {
    CAPTURE(I.to_string());
    auto g = stabilizer_lie_algebra(I);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      auto c = find_cartan(g, seed);
      CHECK(certify_cartan(c.cartan, g));
      auto dec = toral_decomposition(c.cartan);
      CHECK(dec.toral.dim() + dec.nilpotent.dim() == c.cartan.dim());
      CHECK(dec.toral.is_abelian());
    }
  }
}
