#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "holofield/factor.hpp"
#include "holofield/fields.hpp"
#include "holofield/number_field.hpp"

using namespace holofield;

namespace {

NumberField sqrt_field(long d) {
  return NumberField::create(qpoly_from_ints({-d, 0, 1}), Interval(Rational(1), Rational(d)));
}

NFElement elem(const NumberField& k, std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  v.resize(static_cast<std::size_t>(k.degree()));
  return NFElement(k, v);
}

QPoly expand(const std::vector<QFactor>& fs) {
  QPoly p = qpoly_from_ints({1});
  for (const auto& f : fs)
    for (int i = 0; i < f.multiplicity; ++i) p *= f.factor;
  return p;
}

NFElement random_element(const NumberField& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < k.degree(); ++i) c.emplace_back(Rational(num(rng), den(rng)));
  for (auto& q : c) q.canonicalize();
  return NFElement(k, c);
}

}  // namespace

TEST_CASE("number field construction") {
  const NumberField q = NumberField::create(qpoly_from_ints({-1, 1}), Interval(Rational(0), Rational(2)));
  CHECK(q.degree() == 1);
  CHECK(q == NumberField::rationals());

  const NumberField k = sqrt_field(2);
  CHECK(k.degree() == 2);
  CHECK(approx(NFElement::generator(k)) == doctest::Approx(1.41421356));

  CHECK_NOTHROW(NumberField::create(qpoly_from_ints({-2, 0, 1}), Interval(Rational(0), Rational(3))));
  CHECK_THROWS_AS(NumberField::create(qpoly_from_ints({-2, 0, 1}), Interval(Rational(-2), Rational(2))), Error);
  try {
    NumberField::create(qpoly_from_ints({-2, 0, 1}), Interval(Rational(-2), Rational(2)));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadInterval);
  }
  try {
    NumberField::create(qpoly_from_ints({-4, 0, 1}), Interval(Rational(1), Rational(3)));
    FAIL("reducible polynomial accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReduciblePolynomial);
  }
  const NumberField neg = NumberField::create(qpoly_from_ints({-2, 0, 1}), Interval(Rational(-2), Rational(-1)));
  CHECK_FALSE(neg == k);
  CHECK(sign(NFElement::generator(neg)) == -1);
}

TEST_CASE("field arithmetic") {
  const NumberField k = sqrt_field(2);
  const NFElement s = NFElement::generator(k);
  CHECK(s * s == elem(k, {2}));
  const NFElement inv = elem(k, {1}) / elem(k, {1, 1});
  CHECK(inv == elem(k, {-1, 1}));
  CHECK(inv * elem(k, {1, 1}) == elem(k, {1}));
  CHECK_THROWS_AS(elem(k, {1}) / elem(k, {0}), Error);
  const NumberField k3 = sqrt_field(3);
  try {
    (void)(s + NFElement::generator(k3));
    FAIL("mixed fields accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  const NumberField k =
      NumberField::create(qpoly_from_ints({-2, -1, 0, 1}), Interval(Rational(1), Rational(2)));  // x^3 - x - 2
  for (int t = 0; t < 40; ++t) {
    const NFElement a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == elem(k, {1}));
  }
}

TEST_CASE("sign") {
  const NumberField k = sqrt_field(2);
  CHECK(sign(elem(k, {0})) == 0);
  CHECK(sign(elem(k, {-1, 1})) == 1);
  CHECK(sign(elem(k, {1, -1})) == -1);
  // 140/99 < sqrt2 < 577/408
  CHECK(sign(NFElement::generator(k) - NFElement(k, Rational(140, 99))) == 1);
  CHECK(sign(NFElement::generator(k) - NFElement(k, Rational(577, 408))) == -1);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const NFElement a = random_element(k, rng);
    const int s = sign(a);
    const double v = to_double(a.coords()[0]) + to_double(a.coords()[1]) * 1.4142135623730951;
    if (std::abs(v) > 1e-9) CHECK(s == (v > 0 ? 1 : -1));
    if (s != 0) CHECK(sgn(enclose(a, Rational(1, 1000000)).midpoint()) == s);
  }
}

TEST_CASE("minimal polynomial") {
  const NumberField k = sqrt_field(2);
  CHECK(minimal_polynomial(elem(k, {3})) == qpoly_from_ints({-3, 1}));
  CHECK(minimal_polynomial(NFElement::generator(k)) == qpoly_from_ints({-2, 0, 1}));
  CHECK(minimal_polynomial(elem(k, {1, 1})) == qpoly_from_ints({-1, -2, 1}));
  std::mt19937_64 rng(3);
  const NumberField k4 =
      NumberField::create(qpoly_from_ints({1, 0, -10, 0, 1}), Interval(Rational(3), Rational(4)));
  for (int t = 0; t < 10; ++t) {
    const NFElement a = random_element(k4, rng);
    const QPoly m = minimal_polynomial(a);
    CHECK(m.eval(a, NFElement(k4)).is_zero());
    CHECK(4 % m.degree() == 0);
  }
}

TEST_CASE("factorization over Q") {
  const auto f1 = factor_over_Q(qpoly_from_ints({-1, 0, 0, 0, 1}));
  REQUIRE(f1.size() == 3);
  CHECK(f1[0].factor == qpoly_from_ints({-1, 1}));
  CHECK(f1[1].factor == qpoly_from_ints({1, 1}));
  CHECK(f1[2].factor == qpoly_from_ints({1, 0, 1}));
  CHECK(is_irreducible_over_Q(qpoly_from_ints({1, -3, 1})));
  const auto f3 = factor_over_Q(qpoly_from_ints({1, -2, 1}));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].multiplicity == 2);

  // Swinnerton-Dyer polynomial: irreducible but splits modulo every prime.
  CHECK(is_irreducible_over_Q(qpoly_from_ints({1, 0, -10, 0, 1})));
  CHECK_THROWS_AS(factor_over_Q(QPoly(std::vector<Rational>(40, Rational(1)))), Error);
}

TEST_CASE("factorization round trip on random products") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-6, 6), deg(1, 4);
  for (int t = 0; t < 30; ++t) {
    QPoly p = qpoly_from_ints({1});
    const int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      const long d = deg(rng);
      std::vector<Rational> c;
      for (long j = 0; j < d; ++j) c.emplace_back(coef(rng));
      c.emplace_back(1 + static_cast<long>(rng() % 3));
      p *= QPoly(c);
    }
    const Rational scale(3, 7);
    p = scale * p;
    const auto fs = factor_over_Q(p);
    CHECK(p.leading() * expand(fs) == p);
    for (const auto& f : fs) {
      CHECK(f.factor.is_monic());
      // irreducible pieces factor no further
      CHECK(factor_over_Q(f.factor).size() == 1);
    }
  }
}

TEST_CASE("factorization over a number field") {
  const NumberField k2 = sqrt_field(2);
  auto f = factor_over_K(to_field(qpoly_from_ints({-2, 0, 1}), k2));
  REQUIRE(f.size() == 2);
  for (const auto& fac : f) {
    CHECK(fac.factor.degree() == 1);
    const NFElement r = -fac.factor[0];
    CHECK(r * r == elem(k2, {2}));
  }
  CHECK(factor_over_K(to_field(qpoly_from_ints({-3, 0, 1}), k2)).size() == 1);

  const NumberField k5 = sqrt_field(5);
  auto g = factor_over_K(to_field(qpoly_from_ints({1, -3, 1}), k5));
  REQUIRE(g.size() == 2);
  for (const auto& fac : g) {
    const NFElement r = -fac.factor[0];
    CHECK((r * r - Rational(3) * r + elem(k5, {1})).is_zero());
    // (3 +- sqrt5)/2
    CHECK(r.coords()[0] == Rational(3, 2));
    CHECK(abs(r.coords()[1]) == Rational(1, 2));
  }
}

TEST_CASE("compositum and intersection") {
  const NumberField q;
  const NumberField k2 = sqrt_field(2), k3 = sqrt_field(3);
  CHECK(field_join(q, k2).field == k2);
  CHECK(field_join(k2, k2).field == k2);
  const Compositum c = field_join(k2, k3);
  CHECK(c.field.degree() == 4);
  CHECK(c.field.minpoly() == qpoly_from_ints({1, 0, -10, 0, 1}));
  const NFElement s2 = c.first(NFElement::generator(k2));
  const NFElement s3 = c.second(NFElement::generator(k3));
  CHECK(s2 * s2 == NFElement(c.field, Rational(2)));
  CHECK(s3 * s3 == NFElement(c.field, Rational(3)));
  CHECK(sign(s2) == 1);
  CHECK(sign(s3) == 1);
  CHECK(s2 + s3 == NFElement::generator(c.field));

  CHECK(field_intersect(k2, k3).is_rational());
  CHECK(field_intersect(k2, k2) == k2);
  // Q(sqrt2 + 1) has minimal polynomial x^2 - 2x - 1
  const NumberField k2b = NumberField::create(qpoly_from_ints({-1, -2, 1}), Interval(Rational(2), Rational(3)));
  const NumberField i = field_intersect(k2, k2b);
  CHECK(i.degree() == 2);
  CHECK(find_embedding(k2, i).has_value());
}

TEST_CASE("subfield membership and generation") {
  const NumberField k = sqrt_field(2);
  CHECK(field_generated_by({}, k).field.is_rational());
  CHECK(field_generated_by({NFElement::generator(k)}, k).degree() == 2);
  CHECK(field_generated_by({elem(k, {2, 3}), elem(k, {5})}, k).degree() == 2);
  const Subfield q = rational_subfield(k);
  CHECK(is_member(elem(k, {7}), q));
  CHECK_FALSE(is_member(NFElement::generator(k), q));
  CHECK(is_member(elem(k, {1, 1}), whole_field(k)));
}

TEST_CASE("subfield enumeration") {
  CHECK(subfields(NumberField()).size() == 1);
  CHECK(subfields(sqrt_field(2)).size() == 2);
  const NumberField k4 =
      NumberField::create(qpoly_from_ints({1, 0, -10, 0, 1}), Interval(Rational(3), Rational(4)));
  const auto subs = subfields(k4);
  REQUIRE(subs.size() == 5);
  CHECK(subs.front().degree() == 1);
  CHECK(subs.back().degree() == 4);
  std::vector<Rational> quadratic_discriminants;
  for (const auto& s : subs) {
    if (s.degree() != 2) continue;
    // each quadratic subfield is Q(sqrt d) for d in {2, 3, 6}
    const QPoly& m = s.field.minpoly();
    quadratic_discriminants.push_back(m[1] * m[1] - 4 * m[0]);
  }
  REQUIRE(quadratic_discriminants.size() == 3);
  auto squarefree_class = [](Rational d) {
    for (long s : {2L, 3L, 6L}) {
      const Rational r = d / s;
      const Integer num = r.get_num(), den = r.get_den();
      if (sgn(num) > 0 && mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) return s;
    }
    return 0L;
  };
  std::vector<long> classes;
  for (const auto& d : quadratic_discriminants) classes.push_back(squarefree_class(d));
  std::sort(classes.begin(), classes.end());
  CHECK(classes == std::vector<long>{2, 3, 6});
  // closed under intersection
  for (const auto& a : subs)
    for (const auto& b : subs) {
      const Subfield c = intersect_subfields(a, b);
      CHECK(std::any_of(subs.begin(), subs.end(), [&](const Subfield& s) { return s == c; }));
    }
  // cubic field without proper subfields
  const NumberField k3 = NumberField::create(qpoly_from_ints({-2, 0, 0, 1}), Interval(Rational(1), Rational(2)));
  CHECK(subfields(k3).size() == 2);
  const NumberField k8 =
      NumberField::create(qpoly_from_ints({-2, 0, 0, 0, 0, 0, 0, 1}), Interval(Rational(1), Rational(2)));
  try {
    subfields(k8);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeLimitExceeded);
  }
}

TEST_CASE("intersection properties") {
  const NumberField k4 =
      NumberField::create(qpoly_from_ints({1, 0, -10, 0, 1}), Interval(Rational(3), Rational(4)));
  const NumberField k6 = NumberField::create(qpoly_from_ints({-6, 0, 1}), Interval(Rational(2), Rational(3)));
  const NumberField k2 = sqrt_field(2);
  const NumberField i1 = field_intersect(k4, k6);
  CHECK(i1.degree() == 2);
  CHECK(find_embedding(i1, k4).has_value());
  CHECK(find_embedding(i1, k6).has_value());
  CHECK(field_intersect(k6, k2).is_rational());
  CHECK(field_intersect(k4, k2) == k2);
}

TEST_CASE("polynomial zero follows its coefficients") {
  const NumberField k = sqrt_field(2);
  const NFElement s = NFElement::generator(k);
  const KPoly g(std::vector<NFElement>{-s, NFElement(k, Rational(1))});
  CHECK(g.zero().field() == k);
  CHECK((g * g - g * g).zero().field() == k);
}
