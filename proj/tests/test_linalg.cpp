#include "doctest.h"

#include <random>

#include "holofield/intmat.hpp"
#include "holofield/number_field.hpp"

using namespace holofield;

namespace {

QMatrix qm(std::initializer_list<std::initializer_list<long>> rows) { return to_rational(int_matrix(rows)); }

IntMat random_int(std::size_t r, std::size_t c, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("row reduction") {
  auto r1 = rref(qm({{2, 4}, {1, 2}}));
  CHECK(r1.rank == 1);
  CHECK(r1.reduced == qm({{1, 2}, {0, 0}}));
  CHECK(rref(qm({{0, 1}, {1, 0}})).reduced == qm({{1, 0}, {0, 1}}));

  const NumberField k = NumberField::create(qpoly_from_ints({-2, 0, 1}), Interval(Rational(1), Rational(2)));
  const NFElement s = NFElement::generator(k), one(k, Rational(1)), two(k, Rational(2));
  KMatrix m(2, 2, NFElement(k));
  m(0, 0) = s;
  m(0, 1) = two;
  m(1, 0) = one;
  m(1, 1) = s;
  const auto r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.reduced(0, 0) == one);
  CHECK(r.reduced(0, 1) == s);
  CHECK(r.reduced(1, 1).is_zero());

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = to_rational(random_int(3, 5, 4, rng));
    const auto once = rref(a);
    CHECK(rref(once.reduced).reduced == once.reduced);
  }
}

TEST_CASE("kernels and solves") {
  CHECK(kernel(qm({{1, 0}, {0, 1}})).dim() == 0);
  CHECK(kernel(QMatrix(3, 3)).dim() == 3);
  const auto k = kernel(qm({{1, 1, -1}}));
  CHECK(k.dim() == 2);
  CHECK(k.contains({Rational(1), Rational(0), Rational(1)}));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = to_rational(random_int(3, 5, 3, rng));
    const auto ker = kernel(a);
    for (const auto& v : ker.vectors())
      for (const auto& x : a.apply(v)) CHECK(sgn(x) == 0);
    const std::vector<Rational> b = a.apply({1, 2, 3, 4, 5});
    const auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("integer characteristic polynomial") {
  CHECK(charpoly_int(int_matrix({{2, 1}, {1, 1}})) == qpoly_from_ints({1, -3, 1}));
  CHECK(charpoly_int(int_matrix({{0, 1}, {1, 0}})) == qpoly_from_ints({-1, 0, 1}));
  CHECK(charpoly_int(IntMat::identity(3, Integer(0))) == qpoly_from_ints({-1, 3, -3, 1}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 15; ++t) {
    const IntMat a = random_int(4, 4, 5, rng);
    const QPoly f = charpoly_int(a);
    CHECK(poly_of_matrix(f, to_rational(a)).is_zero_matrix());
    CHECK(f[0] == Rational(determinant_int(a)));
  }
}

TEST_CASE("Smith normal form") {
  auto s1 = smith_normal_form(int_matrix({{2, 0}, {0, 3}}));
  CHECK(s1.s == int_matrix({{1, 0}, {0, 6}}));
  CHECK(smith_normal_form(IntMat::identity(3, Integer(0))).s == IntMat::identity(3, Integer(0)));
  CHECK(smith_normal_form(int_matrix({{2, 4}, {6, 8}})).s == int_matrix({{2, 0}, {0, 4}}));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 2 + rng() % 4, c = 2 + rng() % 4;
    const IntMat a = random_int(r, c, 6, rng);
    const SmithForm f = smith_normal_form(a);
    CHECK(f.u * a * f.v == f.s);
    CHECK(is_unimodular(f.u));
    CHECK(is_unimodular(f.v));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(f.s(i, j) == 0);
    for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
      if (f.s(i, i) == 0) {
        CHECK(f.s(i + 1, i + 1) == 0);
      } else {
        CHECK(f.s(i + 1, i + 1) % f.s(i, i) == 0);
      }
    }
  }
}

TEST_CASE("subspace operations") {
  const Rational z(0);
  const auto u = QSubspace::span({{1, 1}}, 2, z);
  CHECK(u.intersect(u) == u);
  const auto e1 = QSubspace::span({{1, 0}}, 2, z), e2 = QSubspace::span({{0, 1}}, 2, z);
  CHECK((e1 + e2).dim() == 2);
  CHECK(e1.is_direct_sum_with(e2));
  CHECK(QSubspace::span({{1, 1}}, 2, z).intersect(QSubspace::span({{1, -1}}, 2, z)).dim() == 0);
  CHECK_THROWS_AS(e1 + QSubspace::full(3, z), Error);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto a = QSubspace::span(to_rational(random_int(1 + rng() % 4, 6, 2, rng)));
    const auto b = QSubspace::span(to_rational(random_int(1 + rng() % 4, 6, 2, rng)));
    CHECK((a + b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
    CHECK((a + b).contains(a));
    CHECK(a.contains(a.intersect(b)));
  }
}

TEST_CASE("matrix polynomials and gcd") {
  const QMatrix a = qm({{3, 1}, {4, 2}});
  CHECK(poly_of_matrix(qpoly_from_ints({0, 1}), a) == a);
  CHECK(poly_of_matrix(charpoly(a), a).is_zero_matrix());
  CHECK(poly_of_matrix(qpoly_from_ints({0, 0, 1}), qm({{0, 1}, {0, 0}})).is_zero_matrix());

  const QPoly x = qpoly_from_ints({0, 1}), x1 = qpoly_from_ints({1, 1});
  auto eg = extended_gcd(x, x1);
  CHECK(eg.g == qpoly_from_ints({1}));
  CHECK(eg.s * x + eg.t * x1 == eg.g);
  CHECK(eg.s == qpoly_from_ints({-1}));
  CHECK(eg.t == qpoly_from_ints({1}));
  const QPoly f = qpoly_from_ints({4, 2});
  auto e0 = extended_gcd(f, QPoly());
  CHECK(e0.g == qpoly_from_ints({2, 1}));
  CHECK(e0.s == QPoly(std::vector<Rational>{Rational(1, 2)}));
  CHECK(e0.t.is_zero());
  auto e2 = extended_gcd(qpoly_from_ints({1, -2, 1}), qpoly_from_ints({-1, 0, 1}));
  CHECK(e2.g == qpoly_from_ints({-1, 1}));
}

TEST_CASE("elimination over the Gaussian extension") {
  const NumberField k = NumberField::create(qpoly_from_ints({-2, 0, 1}), Interval(Rational(1), Rational(2)));
  const ComplexAlg i = ComplexAlg::i(k);
  const ComplexAlg one(NFElement(k, Rational(1)));
  CMatrix m(2, 2, ComplexAlg(k));
  m(0, 0) = i;
  m(0, 1) = one;
  m(1, 0) = one;
  m(1, 1) = -i;
  const auto r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.reduced(0, 1) == -i);
  CHECK((i * i.inverse()) == one);
}
