#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lietoric/parse.hpp"
#include "lietoric/poly.hpp"
#include "lietoric/polyspan.hpp"

#include <random>

using namespace lietoric;

namespace {

using QPoly = Poly<Rational>;
using QM = Matrix<Rational>;

QPoly P(const RingPtr& r, const std::string& s) { return parse_poly(s, r); }

QM qm(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return QM::from_rows(r);
}

QM random_matrix(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<long> d(-2, 2);
  QM m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng));
  return m;
}

QPoly random_poly(std::mt19937_64& rng, const RingPtr& r, unsigned deg, int nterms) {
  std::uniform_int_distribution<long> c(-3, 3);
  auto monos = r->monomials_of_degree(deg);
  std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
  std::vector<Term<Rational>> t;
  for (int k = 0; k < nterms; ++k) t.push_back({monos[pick(rng)], Rational(c(rng))});
  return QPoly(r, std::move(t));
}

}  // namespace

TEST_CASE("monomial orders") {
  auto r = Ring::make({"x", "y", "z"});
  Monomial xy = Monomial::var(0) * Monomial::var(1);
  Monomial z2 = Monomial::var(2, 2);
  Monomial x = Monomial::var(0);
  // degrevlex: x*y > z^2, x > y > z
  CHECK(r->compare(xy, z2) > 0);
  CHECK(r->compare(x, Monomial::var(1)) > 0);
  CHECK(r->compare(Monomial::var(0) * Monomial::var(2), Monomial::var(1, 2)) < 0);
  auto lex = r->with_order(MonomialOrder::lex());
  CHECK(lex->compare(x, z2) > 0);
  auto blk = r->with_order(MonomialOrder::block(1));
  CHECK(blk->compare(x, Monomial::var(1, 3)) > 0);
  CHECK(blk->compare(x * Monomial::var(1), Monomial::var(0, 2)) < 0);
  CHECK(r->monomials_of_degree(2).size() == 6);
  CHECK(r->monomials_of_degree(2).front() == Monomial::var(0, 2));
  CHECK(Ring::make({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o"})->monomials_of_degree(3).size() == 680);
}

TEST_CASE("parsing and printing") {
  auto r = Ring::make({"x", "y", "z"});
  auto f = P(r, "x^2 - 3/2 y z + 2*x*y - x*x");
  CHECK(f.to_string() == "2*x*y - 3/2*y*z");
  CHECK(P(r, "-x + 1").to_string() == "-x + 1");
  CHECK_THROWS_AS(P(r, "2xy"), ParseError);  // names are greedy
  CHECK(P(r, "x y") == P(r, "x*y"));
  CHECK(P(r, "3 x^2 y") == P(r, "3*x^2*y"));
  CHECK(P(r, "x - x").is_zero());
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "w"), ParseError);
  CHECK_THROWS_AS(P(r, "x ^"), ParseError);
  CHECK_THROWS_AS(P(r, "1/0 x"), ParseError);
  try {
    P(r, "x + @");
  } catch (const ParseError& e) {
    CHECK(e.column == 5);
  }
}

TEST_CASE("ideal file format") {
  auto f = parse_ideal_file("# test\nring x, y z\norder lex\ngen x^2 - y*z\n\ngen x - 1 # tail\n");
  CHECK(f.ring->nvars() == 3);
  CHECK(f.ring->order().kind == OrderKind::Lex);
  REQUIRE(f.gens.size() == 2);
  auto g = parse_ideal_file(format_ideal_file(f));
  CHECK(g.gens[0] == f.gens[0]);
  CHECK(g.gens[1] == f.gens[1]);
  try {
    parse_ideal_file("ring x y\ngen x + + y\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 9);
  }
  CHECK_THROWS_AS(parse_ideal_file("gen x\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("ring x\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("ring x x\ngen x\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("ring x\nfoo x\n"), ParseError);
}

TEST_CASE("arithmetic") {
  auto r = Ring::make({"x", "y"});
  auto a = P(r, "x + y"), b = P(r, "x - y");
  CHECK(a * b == P(r, "x^2 - y^2"));
  CHECK(a + b == P(r, "2x"));
  CHECK(a - a == QPoly(r));
  CHECK(a.derivative(0) == P(r, "1"));
  CHECK((a * a).coeff(Monomial::var(0) * Monomial::var(1)) == Rational(2));
}

TEST_CASE("substitute_linear examples") {
  auto r = Ring::make({"x", "y"});
  CHECK(substitute_linear(P(r, "x - y"), qm({{0, 1}, {1, 0}})) == P(r, "y - x"));
  CHECK(substitute_linear(P(r, "x^2"), qm({{2, 0}, {0, 2}})) == P(r, "4x^2"));
  CHECK(substitute_linear(P(r, "x^2 + x y"), QM::identity(2)) == P(r, "x^2 + x y"));
}

TEST_CASE("substitute_linear functoriality on random cubics") {
  auto r = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(31);
  for (int it = 0; it < 30; ++it) {
    auto f = random_poly(rng, r, 3, 5);
    QM a = random_matrix(rng, 3), b = random_matrix(rng, 3);
    CHECK(substitute_linear(substitute_linear(f, b), a) == substitute_linear(f, b * a));
  }
}

TEST_CASE("derivation action") {
  auto r = Ring::make({"x1", "x2"});
  QM e11(2, 2);
  e11(0, 0) = Rational(1);
  CHECK(derivation_action(e11, P(r, "x1^2")) == P(r, "-2 x1^2"));
  std::mt19937_64 rng(1);
  CHECK(derivation_action(random_matrix(rng, 2), P(r, "5")).is_zero());
}

TEST_CASE("derivation action: Leibniz, linearity and bracket compatibility") {
  auto r = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(77);
  for (int it = 0; it < 30; ++it) {
    auto f = random_poly(rng, r, 2, 4), h = random_poly(rng, r, 2, 4);
    QM g = random_matrix(rng, 3), k = random_matrix(rng, 3);
    CHECK(derivation_action(g, f * h) == f * derivation_action(g, h) + h * derivation_action(g, f));
    CHECK(derivation_action(g + k, f) == derivation_action(g, f) + derivation_action(k, f));
    CHECK(derivation_action(g, f + h) == derivation_action(g, f) + derivation_action(g, h));
    CHECK(derivation_action(bracket(g, k), f) ==
          derivation_action(g, derivation_action(k, f)) - derivation_action(k, derivation_action(g, f)));
  }
}

TEST_CASE("derivation action is the derivative of the substitution action") {
  // f(exp(-t g) x) to first order: substitute I - t g and read the t-coefficient.
  auto r = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10; ++it) {
    auto f = random_poly(rng, r, 3, 4);
    QM g = random_matrix(rng, 3);
    Rational eps(BigInt(1), BigInt(1000));
    QM a = QM::identity(3) - eps * g, b = QM::identity(3) + eps * g;
    // symmetric difference cancels the even orders; the cubic residue is bounded
    auto diff = substitute_linear(f, a) - substitute_linear(f, b);
    auto first = (Rational(BigInt(1), BigInt(2)) / eps) * diff;
    auto act = derivation_action(g, f);
    auto rem = first - act;
    for (const auto& t : rem.terms()) CHECK(t.c.abs() < Rational(BigInt(1), BigInt(100)));
  }
}

TEST_CASE("homogenize and dehomogenize") {
  auto r = Ring::make({"x", "y"});
  auto h = homogenizing_ring(r);
  CHECK(h->name(0) == "x0");
  auto f = P(r, "x^2 + y");
  auto fh = homogenize(f, h);
  CHECK(fh == parse_poly("x^2 + x0 y", h));
  CHECK(dehomogenize(fh, r) == f);
  auto g = P(r, "x y - y^2");
  auto gh = homogenize(g, h);
  for (const auto& t : gh.terms()) CHECK(t.m.e[0] == 0);
  CHECK(homogenizing_ring(Ring::make({"x0", "x1"}))->name(0) == "h");
  std::mt19937_64 rng(9);
  for (int it = 0; it < 20; ++it) {
    auto p = random_poly(rng, r, 3, 3) + random_poly(rng, r, 1, 2) + P(r, "1");
    CHECK(dehomogenize(homogenize(p, h), r) == p);
  }
}

TEST_CASE("graded piece basis") {
  auto r = Ring::make({"x", "y", "z"});
  auto g = P(r, "x^2 - y z");
  auto b2 = graded_piece_basis<Rational>({g}, 2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == g);
  auto b3 = graded_piece_basis<Rational>({g}, 3);
  REQUIRE(b3.size() == 3);
  CHECK(b3[0] == P(r, "x^3 - x y z"));
  CHECK(b3[1] == P(r, "x^2 y - y^2 z"));
  CHECK(b3[2] == P(r, "x^2 z - y z^2"));
  CHECK(graded_piece_basis<Rational>({g}, 1).empty());
  auto r2 = Ring::make({"x", "y"});
  CHECK(graded_piece_basis<Rational>({P(r2, "x"), P(r2, "y")}, 2).size() == 3);
}

TEST_CASE("graded piece basis is reduced and matches a dense rref oracle") {
  auto r = Ring::make({"a", "b", "c", "d"});
  std::mt19937_64 rng(12);
  for (int it = 0; it < 10; ++it) {
    std::vector<QPoly> gens{random_poly(rng, r, 2, 4), random_poly(rng, r, 2, 3), random_poly(rng, r, 3, 5)};
    auto basis = graded_piece_basis(gens, 3);
    auto monos = r->monomials_of_degree(3);
    // dense oracle
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : gens) {
      if (f.is_zero()) continue;
      for (const auto& m : r->monomials_of_degree(3 - static_cast<unsigned>(f.total_degree()))) {
        auto p = f.mul_term(m, Rational(1));
        std::vector<Rational> row(monos.size());
        for (size_t k = 0; k < monos.size(); ++k) row[k] = p.coeff(monos[k]);
        rows.push_back(row);
      }
    }
    auto rr = rref(QM::from_rows(rows));
    REQUIRE(rr.rank() == basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t k = 0; k < monos.size(); ++k) CHECK(basis[i].coeff(monos[k]) == rr.rref(i, k));
  }
}
