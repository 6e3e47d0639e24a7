#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lietoric/rational.hpp"
#include "lietoric/tower.hpp"
#include "lietoric/upoly.hpp"

#include <random>

using namespace lietoric;

namespace {

using QP = UPoly<Rational>;
using AP = UPoly<AlgNum>;

QP qp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QP(std::move(v));
}

AP ap(std::initializer_list<long> c) {
  std::vector<AlgNum> v;
  for (long x : c) v.emplace_back(x);
  return AP(std::move(v));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-50, 50), d(1, 30);
  return Rational(BigInt(n(rng)), BigInt(d(rng)));
}

}  // namespace

TEST_CASE("rational canonical form") {
  Rational a(BigInt(6), BigInt(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
  CHECK(Rational(0).den() == 1);
  CHECK(Rational::parse("-10/4") == Rational(BigInt(-5), BigInt(2)));
  CHECK(Rational::parse("+3").to_string() == "3");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 500; ++it) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (a.sign() != 0) CHECK(a * a.inverse() == Rational(1));
    CHECK(gcd(a.num(), a.den()) == 1);
    CHECK(a.den() > 0);
  }
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(qp({1, -2, 1})) == qp({-1, 1}));
  CHECK(squarefree_part(qp({-1, 0, 1})) == qp({-1, 0, 1}));
  CHECK(squarefree_part(qp({0, 0, -1, 1})) == qp({0, -1, 1}));
  CHECK_THROWS(squarefree_part(QP{}));
}

TEST_CASE("squarefree part divides and is squarefree on random products") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> root(-4, 4), mult(1, 3);
  for (int it = 0; it < 100; ++it) {
    QP p = QP::constant(Rational(1 + it % 3));
    int nf = 1 + it % 4;
    for (int k = 0; k < nf; ++k) {
      long r = root(rng);
      for (long m = mult(rng); m > 0; --m) p = p * qp({-r, 1});
    }
    QP s = squarefree_part(p);
    CHECK(divmod(p, s).second.is_zero());
    CHECK(upoly_gcd(s, s.derivative()).degree() == 0);
    CHECK(rational_roots(s) == rational_roots(p));
  }
}

TEST_CASE("univariate gcd") {
  CHECK(upoly_gcd(qp({-1, 0, 1}), qp({-1, 1})) == qp({-1, 1}));
  CHECK(upoly_gcd(qp({1, 0, 1}), qp({-1, 0, 1})) == qp({1}));
  QP g = upoly_gcd(qp({-1, 0, 0, 0, 1}), qp({-1, 0, 1}));
  CHECK(g == qp({-1, 0, 1}));
  // Division oracle: g divides both inputs, and the cofactors are coprime.
  auto [q1, r1] = divmod(qp({-1, 0, 0, 0, 1}), g);
  auto [q2, r2] = divmod(qp({-1, 0, 1}), g);
  CHECK(r1.is_zero());
  CHECK(r2.is_zero());
  CHECK(q1 * g == qp({-1, 0, 0, 0, 1}));
  CHECK(upoly_gcd(q1, q2).degree() == 0);
  CHECK_THROWS(upoly_gcd(QP{}, QP{}));
}

TEST_CASE("rational roots") {
  // 6t^3 - 5t^2 - 2t + 1 = (t - 1)(3t - 1)(2t + 1)
  auto r = rational_roots(qp({1, -2, -5, 6}));
  REQUIRE(r.size() == 3);
  CHECK(r[0] == Rational(BigInt(-1), BigInt(2)));
  CHECK(r[1] == Rational(BigInt(1), BigInt(3)));
  CHECK(r[2] == Rational(1));
  CHECK(rational_roots(qp({-2, 0, 1})).empty());
  CHECK(rational_roots(qp({0, 0, 1})) == std::vector<Rational>{Rational(0)});
}

TEST_CASE("adjoin sqrt 2") {
  AlgNum a;
  auto t = Tower::empty()->adjoin(ap({-2, 0, 1}), "a", &a);
  CHECK(t->depth() == 1);
  CHECK(a * a == AlgNum(2));
  CHECK((a * a).is_rational());
  AlgNum ai = a.inverse();
  CHECK(ai == a * AlgNum(Rational(BigInt(1), BigInt(2))));
  CHECK(a * ai == AlgNum(1));
  CHECK(AlgNum(2).inverse() == AlgNum(Rational(BigInt(1), BigInt(2))));
  CHECK_THROWS_AS((a - a).inverse(), std::domain_error);
  CHECK(a.to_string() == "a");
  CHECK(t->describe() == std::vector<std::string>{"a: t^2 - 2"});
}

TEST_CASE("adjoin rejects non-squarefree and linear polynomials") {
  CHECK_THROWS_AS(Tower::empty()->adjoin(ap({1, -2, 1}), "a"), std::invalid_argument);
  CHECK_THROWS_AS(Tower::empty()->adjoin(ap({-1, 1}), "a"), std::invalid_argument);
}

TEST_CASE("inverting a zero divisor splits the tower") {
  AlgNum a;
  auto t = Tower::empty()->adjoin(ap({-1, 0, 1}), "a", &a);
  bool split = false;
  try {
    (a - AlgNum(1)).inverse();
  } catch (const SplitEvent& ev) {
    split = true;
    CHECK(ev.level == 0);
    CHECK(ev.first.degree() == 1);
    CHECK(ev.second.degree() == 1);
    // The factors multiply back to the defining polynomial.
    CHECK(ev.first * ev.second == ap({-1, 0, 1}));
    auto [b1, b2] = t->split(ev);
    AlgNum a1 = a.rebase(b1), a2 = a.rebase(b2);
    CHECK(a1.is_rational());
    CHECK(a2.is_rational());
    CHECK(a1.to_rational() + a2.to_rational() == Rational(0));
    CHECK(a1.to_rational() * a2.to_rational() == Rational(-1));
  }
  CHECK(split);
}

TEST_CASE("two-level tower") {
  AlgNum a, b;
  auto t1 = Tower::empty()->adjoin(ap({-2, 0, 1}), "a", &a);
  // b^2 = a, so b^4 = 2.
  std::vector<AlgNum> c{-a, AlgNum(0), AlgNum(1)};
  auto t2 = t1->adjoin(AP(c), "b", &b);
  CHECK(t2->degree() == 4);
  CHECK(b * b == a.rebase(t2));
  CHECK(b * b * b * b == AlgNum(2));
  AlgNum x = b + a + AlgNum(3);
  CHECK(x * x.inverse() == AlgNum(1));
  CHECK(t1->is_prefix_of(*t2));
  CHECK(a + b == b + a);
}

TEST_CASE("split in an upper level keeps the lower levels") {
  AlgNum a, b;
  auto t1 = Tower::empty()->adjoin(ap({-2, 0, 1}), "a", &a);
  // b^2 = 2 over Q(a) splits as (b - a)(b + a).
  auto t2 = t1->adjoin(ap({-2, 0, 1}), "b", &b);
  bool split = false;
  try {
    (b - a).inverse();
  } catch (const SplitEvent& ev) {
    split = true;
    CHECK(ev.level == 1);
    CHECK(ev.first * ev.second == ap({-2, 0, 1}));
    auto [p, q] = t2->split(ev);
    CHECK(t1->is_prefix_of(*p));
    CHECK(t1->is_prefix_of(*q));
    AlgNum bp = b.rebase(p), bq = b.rebase(q);
    CHECK(bp * bp == AlgNum(2));
    CHECK(((bp - a == AlgNum(0)) != (bq - a == AlgNum(0))));
  }
  CHECK(split);
}

TEST_CASE("random tower inverses reduce to one") {
  AlgNum a, b;
  auto t1 = Tower::empty()->adjoin(ap({-3, 0, 0, 1}), "a", &a);  // cube root of 3
  auto t2 = t1->adjoin(ap({1, 1, 1}), "b", &b);                  // primitive cube root of unity
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int it = 0; it < 50; ++it) {
    AlgNum x(0);
    AlgNum apow(1);
    for (int i = 0; i < 3; ++i) {
      x += AlgNum(c(rng)) * apow + AlgNum(c(rng)) * apow * b;
      apow *= a;
    }
    if (is_zero(x)) continue;
    CHECK(x * x.inverse() == AlgNum(1));
  }
}
