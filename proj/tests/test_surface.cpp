#include "doctest.h"

#include "holofield/surface.hpp"
#include "surfaces.hpp"

using namespace holofield;

TEST_CASE("torus") {
  const PolygonSurface t = fixtures::unit_torus();
  const auto st = validate(t);
  CHECK(st.stratum.genus == 1);
  CHECK(st.stratum.zero_orders.empty());
  CHECK(st.stratum.marked_points == 1);
  CHECK(st.stratum.name() == "H(0)");
  const auto h = homology(t);
  CHECK(h.rel_rank() == 2);
  CHECK(h.abs_rank() == 2);
  CHECK(h.ker_p.dim() == 0);
  const auto p = periods(t, h);
  // the periods form a basis of Z[i] as a lattice: |det| == 1
  const NFElement det = p[0].re() * p[1].im() - p[0].im() * p[1].re();
  CHECK((det * det).rational_value() == 1);
}

TEST_CASE("L-shaped origami") {
  const PolygonSurface l = square_tiled_to_polygon({3, {2, 1, 3}, {3, 2, 1}});
  const auto st = validate(l);
  CHECK(st.stratum.name() == "H(2)");
  CHECK(st.stratum.genus == 2);
  REQUIRE(st.vertices.size() == 1);
  CHECK(st.vertices[0].cone_angle == 3);
  const auto h = homology(l);
  CHECK(h.rel_rank() == 4);
  CHECK(h.abs_rank() == 4);
  for (const auto& z : periods(l, h)) {
    CHECK(z.re().is_rational());
    CHECK(z.im().is_rational());
    CHECK(z.re().rational_value().get_den() == 1);
    CHECK(z.im().rational_value().get_den() == 1);
  }
}

TEST_CASE("square-tiled construction") {
  const auto one = square_tiled_to_polygon({1, {1}, {1}});
  CHECK(validate(one).stratum.genus == 1);
  try {
    square_tiled_to_polygon({2, {1, 2}, {1, 2}});
    FAIL("intransitive pair accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Intransitive);
  }
  // h = (1 2 3 4), v = (1 2): commutator of cycle type (3, 1), so one zero
  // of order 2 plus a marked regular point; still s = 2
  const auto st = square_tiled_to_polygon({4, {2, 3, 4, 1}, {2, 1, 3, 4}});
  const auto s = validate(st);
  CHECK(s.stratum.name() == "H(2,0)");
  const auto h = homology(st);
  CHECK(h.rel_rank() == 5);
  CHECK(h.ker_p.dim() == 1);
  // v = (2 4): commutator of cycle type (2, 2)
  const auto st2 = square_tiled_to_polygon({4, {2, 3, 4, 1}, {1, 4, 3, 2}});
  CHECK(validate(st2).stratum.name() == "H(1,1)");
  const auto h2 = homology(st2);
  CHECK(h2.rel_rank() == 5);
  CHECK(h2.ker_p.dim() == 1);
}

TEST_CASE("regular octagon") {
  const PolygonSurface o = fixtures::octagon();
  const auto st = validate(o);
  CHECK(st.stratum.name() == "H(2)");
  const auto h = homology(o);
  CHECK(h.rel_rank() == 4);
  bool irrational = false;
  for (const auto& z : periods(o, h)) irrational = irrational || !z.re().is_rational() || !z.im().is_rational();
  CHECK(irrational);
}

TEST_CASE("invalid surfaces") {
  auto expect = [](auto&& f, ErrorKind kind) {
    try {
      f();
      FAIL("accepted invalid surface");
    } catch (const Error& e) {
      CHECK(e.kind() == kind);
    }
  };
  const NumberField q;
  auto pt = [&](long x, long y) { return ComplexAlg(NFElement(q, Rational(x)), NFElement(q, Rational(y))); };
  const Polygon square{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
  const Polygon wide{pt(0, 0), pt(2, 0), pt(2, 1), pt(0, 1)};
  expect([&] { validate(PolygonSurface(q, {square, wide}, {{{0, 1}, {1, 3}}, {{0, 3}, {1, 1}}, {{0, 0}, {1, 2}}, {{1, 0}, {0, 2}}})); },
         ErrorKind::BadGluing);
  expect([&] { validate(PolygonSurface(q, {{pt(0, 0), pt(1, 0)}}, {{{0, 0}, {0, 1}}})); }, ErrorKind::NonPolygon);
  expect([&] { validate(PolygonSurface(q, {square, square}, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}, {{1, 0}, {1, 2}}, {{1, 1}, {1, 3}}})); },
         ErrorKind::Disconnected);
  const Polygon clockwise{pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)};
  expect([&] { validate(PolygonSurface(q, {clockwise}, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}})); }, ErrorKind::NonPolygon);
  const Polygon bowtie{pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1), pt(-1, 2), pt(-1, -1)};
  expect([&] { validate(PolygonSurface(q, {bowtie}, {{{0, 0}, {0, 3}}, {{0, 1}, {0, 4}}, {{0, 2}, {0, 5}}})); },
         ErrorKind::NonPolygon);
}

TEST_CASE("homology invariants on generated origamis") {
  for (const auto& t : fixtures::random_origamis(15, 7, 99)) {
    const PolygonSurface s = square_tiled_to_polygon(t);
    const auto st = validate(s);
    int total = 0;
    for (int z : st.stratum.zero_orders) total += z;
    CHECK(total == 2 * st.stratum.genus - 2);
    const auto h = homology(s);
    const std::size_t sing = st.vertices.size();
    CHECK(h.rel_rank() == 2 * st.stratum.genus + sing - 1);
    CHECK(h.abs_rank() == static_cast<std::size_t>(2 * st.stratum.genus));
    CHECK(h.ker_p.dim() == sing - 1);
    // proj applied to relative periods gives absolute periods
    const auto rel = periods(s, h);
    const auto abs = absolute_periods(s, h);
    for (std::size_t j = 0; j < abs.size(); ++j) {
      ComplexAlg z(s.field());
      for (std::size_t i = 0; i < rel.size(); ++i) z += NFElement(s.field(), Rational(h.proj(j, i))) * rel[i];
      CHECK(z == abs[j]);
    }
    // face boundaries have zero period and zero relative coordinates
    for (std::size_t p = 0; p < s.polygons().size(); ++p) {
      std::vector<Integer> chain(h.edges.size());
      for (std::size_t e = 0; e < h.edges.size(); ++e) {
        if (h.edges[e].rep.polygon == p) chain[e] += 1;
        if (h.edges[e].partner.polygon == p) chain[e] -= 1;
      }
      CHECK(chain_period(s, h, chain).is_zero());
      for (const auto& c : h.rel_coords(chain)) CHECK(c == 0);
    }
  }
}
