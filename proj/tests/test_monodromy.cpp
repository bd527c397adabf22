#include "doctest.h"

#include <functional>
#include <random>

#include "blocks.hpp"
#include "holofield/monodromy.hpp"
#include "surfaces.hpp"

using namespace holofield;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

KSubspace lifted(const QSubspace& s, const NumberField& k) { return KSubspace::span(to_field(s.basis(), k)); }

}  // namespace

TEST_CASE("Perron roots") {
  const auto p = perron_root(int_matrix({{2, 1}, {1, 1}}));
  CHECK(p.factor == qpoly_from_ints({1, -3, 1}));
  const NFElement& l = p.lambda;
  CHECK((l * l - Rational(3) * l + Rational(1)).is_zero());
  CHECK(compare(l, NFElement(p.field, Rational(2))) > 0);
  const NumberField q;
  CHECK(perron_root(int_matrix({{2, 1}, {1, 1}}) * int_matrix({{-1, 0}, {0, -1}})).factor == qpoly_from_ints({1, 3, 1}));

  CHECK(kind_of([] { perron_root(int_matrix({{1, 1}, {0, 1}})); }) == ErrorKind::NotSimple);
  CHECK(kind_of([] { perron_root(IntMat::identity(3, Integer(0))); }) == ErrorKind::NotSimple);
  CHECK(kind_of([] { perron_root(int_matrix({{0, 1}, {1, 0}})); }) == ErrorKind::NotSimple);
  CHECK(kind_of([] { perron_root(int_matrix({{0, -1}, {1, 0}})); }) == ErrorKind::NotSimple);
  // complex pair of modulus sqrt 5 beats the real eigenvalue 2
  CHECK(kind_of([] { perron_root(fixtures::block_diag({int_matrix({{0, -5}, {1, -1}}), int_matrix({{2}})})); }) ==
        ErrorKind::NotSimple);
  const auto mixed = perron_root(fixtures::block_diag({int_matrix({{0, -1}, {1, 0}}), int_matrix({{2, 1}, {1, 1}})}));
  CHECK(mixed.factor == qpoly_from_ints({1, -3, 1}));

  std::mt19937_64 rng(31);
  for (int t = 0; t < 5; ++t) {
    const IntMat a = fixtures::conjugate(
        fixtures::block_diag({int_matrix({{2, 1}, {1, 1}}), int_matrix({{1, 1}, {0, 1}})}), fixtures::random_unimodular(4, rng));
    const auto d = perron_root(a);
    CHECK(d.factor == qpoly_from_ints({1, -3, 1}));
    const auto av = to_field(to_rational(a), d.field).apply(d.eigvec);
    for (std::size_t i = 0; i < 4; ++i) CHECK(av[i] == d.lambda * d.eigvec[i]);
  }
}

TEST_CASE("minimal polynomial over a subfield") {
  const auto p = perron_root(int_matrix({{2, 1}, {1, 1}}));
  const KPoly over_q = min_poly_over(p.lambda, rational_subfield(p.field));
  CHECK(over_q.degree() == 2);
  CHECK(over_q[1] == NFElement(over_q[1].field(), Rational(-3)));
  const KPoly over_self = min_poly_over(p.lambda, whole_field(p.field));
  CHECK(over_self.degree() == 1);
  const NumberField k = fixtures::sqrt2_field();
  CHECK(min_poly_over(NFElement::generator(k), rational_subfield(k)).degree() == 2);

  // lambda of degree 4 over Q has degree 2 over the golden subfield
  std::mt19937_64 rng(1);
  const auto g = fixtures::golden_fixture(rng);
  const auto d = perron_root(g.pa);
  CHECK(d.field.degree() == 4);
  const NFElement phi = d.lambda + d.lambda.inverse() - Rational(3);
  const Subfield gold = field_generated_by({phi}, d.field);
  CHECK(gold.degree() == 2);
  const KPoly m = min_poly_over(d.lambda, gold);
  CHECK(m.degree() == 2);
  const KPoly image = m.map([&](const NFElement& c) { return gold.embedding(c); }, NFElement(d.field));
  CHECK(image(d.lambda).is_zero());
}

TEST_CASE("primary projections") {
  const NumberField q;
  const NFElement zq(q);
  auto kq = [&](const QPoly& f) { return to_field(f, q); };
  const IntMat diag12 = int_matrix({{1, 0}, {0, 2}});
  CHECK(primary_projection(diag12, kq(qpoly_from_ints({-1, 1}))) == to_field(to_rational(int_matrix({{1, 0}, {0, 0}})), q));
  const IntMat a0 = int_matrix({{2, 1}, {1, 1}});
  CHECK(primary_projection(a0, kq(charpoly_int(a0))) == KMatrix::identity(2, zq));
  CHECK(kind_of([&] { primary_projection(int_matrix({{1, 1}, {0, 1}}), kq(qpoly_from_ints({-1, 1}))); }) ==
        ErrorKind::NotCoprime);
  CHECK(kind_of([&] { primary_projection(diag12, kq(qpoly_from_ints({-3, 1}))); }) == ErrorKind::NotADivisor);

  std::mt19937_64 rng(41);
  const IntMat t = fixtures::random_unimodular(4, rng);
  const IntMat a = fixtures::conjugate(fixtures::block_diag({a0, int_matrix({{1, 1}, {0, 1}})}), t);
  const KMatrix p = primary_projection(a, kq(qpoly_from_ints({1, -3, 1})));
  const IntMat expected = t * fixtures::block_diag({IntMat::identity(2, Integer(0)), IntMat(2, 2)}) * *inverse_int(t);
  CHECK(p == to_field(to_rational(expected), q));

  // over Q(sqrt 2): x - sqrt 2 splits the block [[0, 2], [1, 0]]
  const NumberField k = fixtures::sqrt2_field();
  const NFElement s = NFElement::generator(k), one(k, Rational(1));
  const IntMat b = fixtures::conjugate(fixtures::block_diag({int_matrix({{0, 2}, {1, 0}}), int_matrix({{3}})}), fixtures::random_unimodular(3, rng));
  const KMatrix pk = primary_projection(b, KPoly({-s, one}, NFElement(k)));
  CHECK(rank(pk) == 1);
  const KMatrix bk = to_field(to_rational(b), k);
  CHECK(KSubspace::span(pk.transpose()) == kernel(bk - s * KMatrix::identity(3, NFElement(k))));
}

TEST_CASE("orbit spans") {
  const NumberField q;
  const NFElement z(q), o(q, Rational(1));
  CHECK(orbit_span(Representation::make(2, {IntMat::identity(2, Integer(0))}), {o, z}).dim() == 1);
  CHECK(orbit_span(Representation::make(2, {int_matrix({{0, 1}, {1, 0}})}), {o, z}).dim() == 2);
  const auto fixed = orbit_span(Representation::make(2, {int_matrix({{1, 1}, {0, 1}})}), {o, z});
  CHECK(fixed == KSubspace::span({{o, z}}, 2, z));

  std::mt19937_64 rng(5);
  const auto g = fixtures::golden_fixture(rng);
  const auto d = perron_root(g.pa);
  const KSubspace v = orbit_span(g.rep, d.eigvec);
  CHECK(v.dim() == 2);
  for (const auto& gen : g.rep.generators) CHECK(is_invariant(to_field(to_rational(gen), d.field), v));
  CHECK(Representation::make(2, {int_matrix({{1, 1}, {0, 1}})}).inverses()[0] == int_matrix({{1, -1}, {0, 1}}));
  CHECK(kind_of([] { Representation::make(2, {int_matrix({{2, 0}, {0, 1}})}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("invariant complements") {
  const NumberField q;
  const NFElement z(q), o(q, Rational(1));
  const auto triv = Representation::make(3, {IntMat::identity(3, Integer(0))});
  const auto u = KSubspace::span({{o, o, z}}, 3, z);
  const auto w = invariant_complement(triv, u);
  CHECK(w.dim() == 2);
  CHECK(u.is_direct_sum_with(w));
  const auto unip = Representation::make(2, {int_matrix({{1, 1}, {0, 1}})});
  CHECK(kind_of([&] { invariant_complement(unip, KSubspace::span({{o, z}}, 2, z)); }) == ErrorKind::NoComplement);
  CHECK(kind_of([&] { invariant_complement(unip, KSubspace::span({{z, o}}, 2, z)); }) == ErrorKind::NotInvariant);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const IntMat t = fixtures::random_unimodular(4, rng);
    const IntMat b1 = int_matrix({{2, 1}, {1, 1}}), b2 = int_matrix({{0, -1}, {1, 0}});
    const auto rep = Representation::make(
        4, {fixtures::conjugate(fixtures::block_diag({b1, b2}), t),
            fixtures::conjugate(fixtures::block_diag({int_matrix({{1, 1}, {1, 2}}), int_matrix({{0, 1}, {-1, 0}})}), t)});
    const auto first = lifted(fixtures::column_span(t, 0, 2), q);
    CHECK(invariant_complement(rep, first) == lifted(fixtures::column_span(t, 2, 4), q));
  }
}

TEST_CASE("trace fields") {
  std::mt19937_64 rng(23);
  const IntMat t = fixtures::random_unimodular(4, rng);
  const auto rep = Representation::make(4, {t * *inverse_int(t), fixtures::conjugate(fixtures::block_diag({int_matrix({{2, 1}, {1, 1}}), int_matrix({{1, 1}, {0, 1}})}), t)});
  CHECK(trace_field(rep).degree() == 1);
  CHECK(trace_field(Representation::make(3, {})).degree() == 1);

  // [[1 + r, r], [1, 1]] over Z[r], r = sqrt 2, has trace 2 + r and determinant 1
  const IntMat mr = int_matrix({{0, 2}, {1, 0}});
  const IntMat g = fixtures::restrict_scalars({{{1, 1}, {0, 1}}, {{1, 0}, {1, 0}}}, mr);
  CHECK(is_unimodular(g));
  const NumberField k = fixtures::sqrt2_field();
  const NFElement s = NFElement::generator(k);
  const IntMat mult = fixtures::restrict_scalars({{{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}}, mr);
  const KSubspace piece = kernel(to_field(to_rational(mult), k) - s * KMatrix::identity(4, NFElement(k)));
  REQUIRE(piece.dim() == 2);
  const auto r2 = Representation::make(4, {g});
  const Subfield tf = trace_field(r2, piece);
  CHECK(tf.degree() == 2);
  CHECK(trace(restrict_to(g, piece)) == s + Rational(2));
  CHECK(trace_field(r2).degree() == 1);
  const auto bad = KSubspace::span({{NFElement(k, Rational(1)), NFElement(k), NFElement(k), NFElement(k)}}, 4, NFElement(k));
  CHECK(kind_of([&] { trace_field(r2, bad); }) == ErrorKind::NotInvariant);
}

TEST_CASE("isotypic decomposition") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 3; ++trial) {
    const auto g = fixtures::golden_fixture(rng);
    const Decomposition d = isotypic_decomposition(g.rep, g.pa);
    CHECK(d.k.degree() == 2);
    CHECK(d.v_id.dim() == 2);
    REQUIRE(d.pieces.size() == 2);
    CHECK(d.pieces[0].space.dim() == d.pieces[1].space.dim());
    CHECK(d.sum == fixtures::column_span(g.t, 0, 4));
    CHECK(d.w == fixtures::column_span(g.t, 4, 6));
    CHECK(d.multiplicity_one);
    CHECK(d.sum.dim() + d.w.dim() == 6);
    CHECK(d.sum.is_direct_sum_with(d.w));
    const NFElement phi = d.perron.lambda + d.perron.lambda.inverse() - Rational(3);
    CHECK(is_member(phi, d.k));
    CHECK(dimension_inequality_check(d, 3));
    CHECK(dimension_inequality_check(d, 2));
  }
  // irreducible with k = Q
  const auto r = Representation::make(2, {int_matrix({{1, 1}, {0, 1}}), int_matrix({{1, 0}, {1, 1}})});
  const Decomposition d = isotypic_decomposition(r, int_matrix({{2, 1}, {1, 1}}));
  CHECK(d.k.degree() == 1);
  CHECK(d.v_id.dim() == 2);
  CHECK(d.w.dim() == 0);
  CHECK(d.pieces.size() == 1);
  // cyclic group: the Perron piece is the eigenline and its conjugate is the other eigenline
  const auto lone = Representation::make(2, {int_matrix({{2, 1}, {1, 1}})});
  const Decomposition dl = isotypic_decomposition(lone, int_matrix({{2, 1}, {1, 1}}));
  CHECK(dl.v_id.dim() == 1);
  CHECK(dl.k.degree() == 2);
  CHECK(dl.pieces.size() == 2);
  CHECK(dl.sum.dim() == 2);
  CHECK(dl.w.dim() == 0);
  CHECK(kind_of([&] { isotypic_decomposition(r, int_matrix({{1, 1}, {0, 1}})); }) == ErrorKind::NotSimple);
}

TEST_CASE("dimension inequality") {
  CHECK(dimension_inequality_check(2, 2, 2));
  CHECK(dimension_inequality_check(4, 1, 2));
  CHECK_FALSE(dimension_inequality_check(3, 2, 2));
}

TEST_CASE("relative block structure") {
  const IntMat a = int_matrix({{2, 1}, {1, 1}});
  const auto trivial = relative_block_structure(a, IntMat::identity(2, Integer(0)));
  CHECK(trivial.power == 1);
  CHECK(trivial.absolute == to_rational(a));
  CHECK(trivial.ker_p.dim() == 0);

  const IntMat a1 = int_matrix({{1, 1, 2}, {0, 2, 1}, {0, 1, 1}});
  const auto b1 = relative_block_structure(a1, kernel_first_projection(3, 1));
  CHECK(b1.power == 1);
  CHECK(b1.absolute == to_rational(a));
  CHECK(b1.off_diagonal == to_rational(int_matrix({{1, 2}})));
  CHECK(b1.charpoly_power == qpoly_from_ints({-1, 1}) * charpoly_int(a));

  const IntMat a2 = int_matrix({{0, 1, 1, 0}, {1, 0, 0, 2}, {0, 0, 2, 1}, {0, 0, 1, 1}});
  const auto b2 = relative_block_structure(a2, kernel_first_projection(4, 2));
  CHECK(b2.power == 2);
  CHECK(b2.absolute == to_rational(a * a));
  CHECK(b2.charpoly_power == qpoly_from_ints({-1, 1}) * qpoly_from_ints({-1, 1}) * charpoly_int(a * a));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    const IntMat t = fixtures::random_unimodular(4, rng);
    const IntMat at = fixtures::conjugate(a2, t);
    const IntMat pt = kernel_first_projection(4, 2) * *inverse_int(t);
    const auto b = relative_block_structure(at, pt);
    CHECK(b.power == 2);
    CHECK(b.charpoly_absolute == charpoly_int(a * a));
  }
  CHECK(kind_of([] { relative_block_structure(int_matrix({{2, 0}, {0, 1}}), kernel_first_projection(2, 1)); }) ==
        ErrorKind::NotBlockTriangular);

  // identity on the relative homology of an H(1,1) origami: ker p is fixed at once
  const auto s = square_tiled_to_polygon({4, {2, 3, 4, 1}, {1, 4, 3, 2}});
  const auto h = homology(s);
  const auto hb = relative_block_structure(IntMat::identity(h.rel_rank(), Integer(0)), h);
  CHECK(hb.power == 1);
  CHECK(hb.ker_p.dim() == 1);
  CHECK(hb.absolute == QMatrix::identity(4, Rational(0)));
}

TEST_CASE("word traces separate planted blocks") {
  // traces of all words of length <= 6 agree for conjugate pairs and differ otherwise
  auto word_traces = [](const std::vector<IntMat>& gens) {
    std::vector<Integer> out;
    std::vector<IntMat> level{IntMat::identity(gens[0].rows(), Integer(0))};
    for (int len = 1; len <= 6; ++len) {
      std::vector<IntMat> next;
      for (const auto& m : level)
        for (const auto& g : gens) {
          next.push_back(m * g);
          out.push_back(trace(next.back()));
        }
      level = std::move(next);
    }
    return out;
  };
  std::mt19937_64 rng(71);
  const IntMat b = int_matrix({{2, 1}, {1, 1}}), c = int_matrix({{1, 1}, {0, 1}});
  for (int trial = 0; trial < 4; ++trial) {
    const IntMat t = fixtures::random_unimodular(2, rng);
    CHECK(word_traces({b, c}) == word_traces({fixtures::conjugate(b, t), fixtures::conjugate(c, t)}));
  }
  CHECK(word_traces({b, c}) != word_traces({b, int_matrix({{1, 2}, {0, 1}})}));
}
