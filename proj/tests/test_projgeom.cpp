#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sixlines/projective.hpp"
#include "support.hpp"

using namespace sixlines;
using sixlines::testing::RandomConfigGen;
using sixlines::testing::det4_points;

namespace {

FieldElement fe(long n) { return FieldElement(Rational(n)); }

HomPoint3 pt(long a, long b, long c, long d) {
  return HomPoint3(fe(a), fe(b), fe(c), fe(d));
}

const HomPoint3 e1 = pt(1, 0, 0, 0);
const HomPoint3 e2 = pt(0, 1, 0, 0);
const HomPoint3 e3 = pt(0, 0, 1, 0);
const HomPoint3 e4 = pt(0, 0, 0, 1);

// Lines of one ruling of the quadric xw = yz: through (1:0:t:0),(0:1:0:t).
PluckerLine ruling_line(long t) {
  return line_through(pt(1, 0, t, 0), pt(0, 1, 0, t));
}

}  // namespace

TEST_CASE("line_through produces the documented Plücker vectors") {
  const PluckerLine x_axis = line_through(e1, e2);
  const std::array<long, 6> expect_x = {1, 0, 0, 0, 0, 0};
  for (int i = 0; i < 6; ++i) CHECK(x_axis[i] == fe(expect_x[i]));

  const PluckerLine zw = line_through(e3, e4);
  const std::array<long, 6> expect_zw = {0, 0, 0, 0, 0, 1};
  for (int i = 0; i < 6; ++i) CHECK(zw[i] == fe(expect_zw[i]));

  // Expanding the 2x2 minors of (1:1:0:0),(0:0:1:1) by hand gives
  // (0, 1, 1, 1, 1, 0).
  const PluckerLine diag = line_through(pt(1, 1, 0, 0), pt(0, 0, 1, 1));
  const std::array<long, 6> expect_diag = {0, 1, 1, 1, 1, 0};
  for (int i = 0; i < 6; ++i) CHECK(diag[i] == fe(expect_diag[i]));

  CHECK_THROWS_AS(line_through(e1, pt(3, 0, 0, 0)), DegenerateSpan);
}

TEST_CASE("Plücker relation holds for constructed lines") {
  RandomConfigGen gen(11);
  for (int t = 0; t < 50; ++t) {
    const OrientedLine l = gen.line();
    const auto& p = l.line();
    CHECK((p[0] * p[5] - p[1] * p[4] + p[2] * p[3]).is_zero());
  }
  CHECK_THROWS_AS(
      PluckerLine::from_coords({fe(1), fe(1), fe(0), fe(0), fe(0), fe(1)}),
      DegenerateInput);
}

TEST_CASE("pairing equals the 4x4 determinant of representatives") {
  RandomConfigGen gen(17);
  for (int t = 0; t < 40; ++t) {
    const OrientedLine l1 = gen.line();
    const OrientedLine l2 = gen.line();
    const FieldElement pairing = plucker_pairing(l1.line(), l2.line());
    const FieldElement det = det4_points(l1.a(), l1.b(), l2.a(), l2.b());
    CHECK(pairing == det);
  }
}

TEST_CASE("meets: skew axes, self-incidence, concurrent lines") {
  const PluckerLine x_axis = line_through(e1, e2);
  const PluckerLine zw = line_through(e3, e4);
  CHECK(!meets(x_axis, zw));
  CHECK(skew(x_axis, zw));
  CHECK(meets(x_axis, x_axis));

  // Two distinct lines through a common point meet.
  const HomPoint3 common = pt(1, 2, 3, 4);
  const PluckerLine a = line_through(common, pt(1, 0, 0, 1));
  const PluckerLine b = line_through(common, pt(0, 1, 1, 0));
  CHECK(meets(a, b));
  CHECK(projectively_equal(lines_common_point(a, b), common));
  CHECK(meets(a, b) == meets(b, a));
}

TEST_CASE("linking index signs and symmetry") {
  const OrientedLine l1(e1, e2);
  const OrientedLine l2(e3, e4);
  CHECK(linking_index(l1, l2) == +1);
  const OrientedLine l2r(e4, e3);
  CHECK(linking_index(l1, l2r) == -1);

  RandomConfigGen gen(23);
  for (int t = 0; t < 30; ++t) {
    const Config c = gen.skew_config(2);
    const OrientedLine& a = c.line(0);
    const OrientedLine& b = c.line(1);
    const int lk = linking_index(a, b);
    CHECK((lk == 1 || lk == -1));
    CHECK(linking_index(a.reversed(), b) == -lk);
    CHECK(linking_index(a, b.reversed()) == -lk);
    CHECK(linking_index(a.reversed(), b.reversed()) == lk);
    CHECK(linking_index(b, a) == lk);
    // Negating both representatives of one line preserves the index.
    const OrientedLine neg(a.a().negated(), a.b().negated());
    CHECK(linking_index(neg, b) == lk);
  }
  CHECK_THROWS_AS(linking_index(l1, OrientedLine(e1, e3)), NotSkew);
}

TEST_CASE("triple linking is orientation- and order-independent") {
  RandomConfigGen gen(31);
  for (int t = 0; t < 25; ++t) {
    const Config c = gen.skew_config(3);
    const PluckerLine a = c.plucker(0), b = c.plucker(1), d = c.plucker(2);
    const int v = triple_linking(a, b, d);
    CHECK((v == 1 || v == -1));
    CHECK(triple_linking(a, d, b) == v);
    CHECK(triple_linking(b, a, d) == v);
    CHECK(triple_linking(b, d, a) == v);
    CHECK(triple_linking(d, a, b) == v);
    CHECK(triple_linking(d, b, a) == v);
  }
  const PluckerLine x_axis = line_through(e1, e2);
  CHECK_THROWS_AS(
      triple_linking(x_axis, line_through(e1, e3), line_through(e2, e4)),
      NotSkew);
}

TEST_CASE("plane and incidence constructions agree") {
  RandomConfigGen gen(37);
  for (int t = 0; t < 25; ++t) {
    const OrientedLine l = gen.line();
    HomPoint3 p = gen.point();
    if (l.line().contains(p)) continue;
    const ProjPlane plane = plane_through(l.line(), p);
    CHECK(plane.eval(l.a()).is_zero());
    CHECK(plane.eval(l.b()).is_zero());
    CHECK(plane.eval(p).is_zero());
  }
  const PluckerLine x_axis = line_through(e1, e2);
  CHECK_THROWS_AS(plane_through(x_axis, pt(1, 1, 0, 0)), DegenerateInput);

  // Meet of z=0 and w=0 is the x-y axis line.
  const ProjPlane zp({fe(0), fe(0), fe(1), fe(0)});
  const ProjPlane wp({fe(0), fe(0), fe(0), fe(1)});
  CHECK(projectively_equal(plane_meet(zp, wp), x_axis));
}

TEST_CASE("two_points returns spanning points of the same line") {
  RandomConfigGen gen(41);
  for (int t = 0; t < 30; ++t) {
    const OrientedLine l = gen.line();
    const auto [u, v] = l.line().two_points();
    CHECK(!projectively_equal(u, v));
    CHECK(projectively_equal(line_through(u, v), l.line()));
    CHECK(l.line().contains(u));
    CHECK(l.line().contains(v));
  }
}

TEST_CASE("cyclic order canonicalization") {
  CHECK(CyclicOrder::from_sequence({2, 0, 1}) ==
        CyclicOrder::from_sequence({0, 1, 2}));
  CHECK(CyclicOrder::from_sequence({0, 2, 1}) ==
        CyclicOrder::from_sequence({0, 1, 2}));  // reversal quotient, n=3
  CHECK(CyclicOrder::from_sequence({0, 2, 1, 4, 3}) !=
        CyclicOrder::from_sequence({0, 1, 2, 3, 4}));
  CHECK(CyclicOrder::from_sequence({3, 0, 2, 1, 4}).items() ==
        std::vector<int>{0, 2, 1, 4, 3});
  CHECK(CyclicOrder::from_sequence({0, 1, 2, 3, 4}).items() ==
        std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("points_order_on_line sorts exact projective parameters") {
  const PluckerLine carrier = line_through(e1, e2);
  // Parameters 0, 1, infinity on the carrier: points e1 + t e2 and e2.
  std::vector<HomPoint3> pts = {pt(1, 0, 0, 0), pt(1, 1, 0, 0),
                                pt(0, 1, 0, 0)};
  CHECK(points_order_on_line(carrier, pts) ==
        CyclicOrder::from_sequence({0, 1, 2}));

  // Points listed at parameters 0,2,1,4,3 in that listing order.
  std::vector<HomPoint3> scrambled = {pt(1, 0, 0, 0), pt(1, 2, 0, 0),
                                      pt(1, 1, 0, 0), pt(1, 4, 0, 0),
                                      pt(1, 3, 0, 0)};
  CHECK(points_order_on_line(carrier, scrambled) ==
        CyclicOrder::from_sequence({0, 2, 1, 4, 3}));

  CHECK_THROWS_AS(points_order_on_line(carrier, {pt(0, 0, 1, 0)}), NotOnLine);
  CHECK_THROWS_AS(
      points_order_on_line(carrier, {pt(1, 1, 0, 0), pt(2, 2, 0, 0)}),
      DuplicatePoint);

  // A projective transformation (here: swap + rescale of coordinates)
  // preserves the canonical cyclic order.
  const PluckerLine carrier2 = line_through(pt(0, 0, 2, 0), pt(0, 0, 0, 3));
  std::vector<HomPoint3> mapped;
  for (long t : {0L, 2L, 1L, 4L, 3L})
    mapped.push_back(HomPoint3(fe(0), fe(0), fe(2), fe(3 * t)));
  CHECK(points_order_on_line(carrier2, mapped) ==
        CyclicOrder::from_sequence({0, 2, 1, 4, 3}));
}

TEST_CASE("pencil_order arranges planes through an axis") {
  const PluckerLine axis = line_through(e3, e4);  // the z-w line
  // Lines through the axis point e4 and points (1 : t : 0 : 0).
  auto leg = [&](long t) {
    return line_through(e4, pt(1, t, 0, 0));
  };
  std::vector<PluckerLine> legs = {leg(0), leg(1), leg(5)};
  CHECK(pencil_order(axis, legs) == CyclicOrder::from_sequence({0, 1, 2}));

  std::vector<PluckerLine> five = {leg(0), leg(1), leg(2), leg(3), leg(4)};
  CHECK(pencil_order(axis, five) ==
        CyclicOrder::from_sequence({0, 1, 2, 3, 4}));

  std::vector<PluckerLine> scrambled = {leg(0), leg(2), leg(1), leg(4),
                                        leg(3)};
  CHECK(pencil_order(axis, scrambled) ==
        CyclicOrder::from_sequence({0, 2, 1, 4, 3}));

  CHECK_THROWS_AS(pencil_order(axis, {line_through(e1, e2)}), NotIncident);
}

TEST_CASE("transversals of four: ruled quadric gives Infinite") {
  // l1,l2,l3,l4 in one ruling of xw = yz; the opposite ruling is transversal.
  const TransversalSet ts = transversals_of_four(
      ruling_line(0), ruling_line(1), ruling_line(2), ruling_line(3));
  CHECK(ts.infinite);
}

TEST_CASE("transversals of four: generic rational case, verified incidences") {
  const PluckerLine l1 = ruling_line(0);
  const PluckerLine l2 = ruling_line(1);
  const PluckerLine l3 = ruling_line(2);
  // A generic fourth line off the quadric.
  const PluckerLine l4 = line_through(pt(1, 2, 3, 4), pt(0, 1, 1, 2));
  const TransversalSet ts = transversals_of_four(l1, l2, l3, l4);
  CHECK(!ts.infinite);
  CHECK(ts.lines.size() <= 2);
  for (const auto& t : ts.lines) {
    CHECK(meets(t, l1));
    CHECK(meets(t, l2));
    CHECK(meets(t, l3));
    CHECK(meets(t, l4));
    CHECK((t[0] * t[5] - t[1] * t[4] + t[2] * t[3]).is_zero());
  }

  RandomConfigGen gen(55);
  int finite_cases = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Config c = gen.skew_config(4);
    const TransversalSet r = transversals_of_four(c.plucker(0), c.plucker(1),
                                                  c.plucker(2), c.plucker(3));
    if (r.infinite) continue;
    ++finite_cases;
    for (const auto& t : r.lines)
      for (int i = 0; i < 4; ++i) CHECK(meets(t, c.plucker(i)));
  }
  CHECK(finite_cases > 0);
}

TEST_CASE("transversals of four: tangent case has one double solution") {
  // l4 inside the tangent plane of xw = yz at the point (1:0:0:0), chosen
  // to touch the quadric only there: the unique transversal of the three
  // ruling lines through that point is the opposite-ruling line w = y = 0.
  const PluckerLine l1 = ruling_line(1);
  const PluckerLine l2 = ruling_line(2);
  const PluckerLine l3 = ruling_line(3);
  // Tangent plane at (1:0:0:0) is w = 0; take the line through (1:0:0:0)
  // and (0:1:1:0): it meets the quadric only at the tangency point.
  const PluckerLine l4 = line_through(pt(1, 0, 0, 0), pt(0, 1, 1, 0));
  const TransversalSet ts = transversals_of_four(l1, l2, l3, l4);
  CHECK(!ts.infinite);
  REQUIRE(ts.lines.size() == 1);
  const PluckerLine expected = line_through(pt(1, 0, 0, 0), pt(0, 0, 1, 0));
  CHECK(projectively_equal(ts.lines[0], expected));
}

TEST_CASE("transversal_of_five: unique, none, and ambiguous outcomes") {
  // Five generic random rational lines: generically no common transversal.
  RandomConfigGen gen(71);
  int none_count = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const Config c = gen.skew_config(5);
    try {
      const auto t = transversal_of_five(c.plucker_lines());
      if (!t.has_value()) ++none_count;
    } catch (const AmbiguousTransversal&) {
    }
  }
  CHECK(none_count >= 10);

  // Five lines of one ruling: ambiguous (whole opposite ruling survives).
  std::vector<PluckerLine> ruled = {ruling_line(0), ruling_line(1),
                                    ruling_line(2), ruling_line(3),
                                    ruling_line(5)};
  CHECK_THROWS_AS(transversal_of_five(ruled), AmbiguousTransversal);

  CHECK_THROWS_AS(
      transversal_of_five({ruling_line(0), ruling_line(1), ruling_line(2),
                           line_through(e1, e3), line_through(e1, e4)}),
      DegenerateInput);
}
