#include <gtest/gtest.h>

#include <numeric>

#include "arborist/dynamics.hpp"
#include "arborist/errors.hpp"

using namespace arborist;

namespace {
Rational q(const char* text) { return Rational::parse(text); }
}  // namespace

TEST(Family1, ExampleParameters) {
  EXPECT_EQ(family1(q("1/5")).c(), q("-6/25"));
  EXPECT_EQ(family1(q("-6/7")).c(), q("6/49"));
  EXPECT_EQ(family1(q("1/2")).c(), q("-3/4"));
}

TEST(Family2, ExampleParameters) {
  EXPECT_EQ(family2(q("1/4")).c(), q("-13/16"));
  EXPECT_EQ(family2(q("2/13")).c(), q("-147/169"));
  EXPECT_EQ(family2(q("2/3")).c(), q("-7/9"));
}

TEST(Families, DegenerateBasePoints) {
  EXPECT_THROW(family1(Rational(0)), DegenerateBasePoint);
  EXPECT_THROW(family1(Rational(-1)), DegenerateBasePoint);
  EXPECT_THROW(family2(Rational(0)), DegenerateBasePoint);
  EXPECT_THROW(family2(q("1/2")), DegenerateBasePoint);
  EXPECT_NO_THROW(family1(Rational(-2)));
}

TEST(Iterate, Examples) {
  const QuadMap f = family1(q("1/2"));
  EXPECT_EQ(iterate(f, Rational(0), 1), q("-3/4"));
  EXPECT_EQ(iterate(f, q("1/2"), 1), q("-1/2"));
  EXPECT_EQ(iterate(f, q("7/3"), 0), q("7/3"));
}

TEST(DetectOrbit, KnownShapes) {
  const auto o1 = detect_orbit(family1(q("1/2")), q("1/2"));
  ASSERT_TRUE(o1);
  EXPECT_EQ(o1->tail_length, 1U);
  EXPECT_EQ(o1->cycle_length, 1U);
  EXPECT_EQ(o1->points, (std::vector<Rational>{q("1/2"), q("-1/2")}));

  const auto o2 = detect_orbit(family2(q("2/3")), q("2/3"));
  ASSERT_TRUE(o2);
  EXPECT_EQ(o2->tail_length, 1U);
  EXPECT_EQ(o2->cycle_length, 2U);
  EXPECT_EQ(o2->points, (std::vector<Rational>{q("2/3"), q("-1/3"), q("-2/3")}));

  const auto o3 = detect_orbit(QuadMap::custom(Rational(0)), Rational(0));
  ASSERT_TRUE(o3);
  EXPECT_EQ(o3->tail_length, 0U);
  EXPECT_EQ(o3->cycle_length, 1U);

  // Critical orbit of x^2 + 1 escapes.
  EXPECT_FALSE(detect_orbit(QuadMap::custom(Rational(1)), Rational(0), 8));
}

// Every admissible small a is strictly preperiodic with the orbit shape of
// its family: tail 1 then a fixed point, or tail 1 then a 2-cycle.
TEST(Families, OrbitShapesOverSample) {
  for (long s = 1; s <= 12; ++s) {
    for (long r = -12; r <= 12; ++r) {
      if (r == 0 || std::gcd(r, s) != 1) continue;
      const Rational a{Integer(r), Integer(s)};
      if (a != Rational(-1)) {
        const auto o = detect_orbit(family1(a), a);
        ASSERT_TRUE(o);
        EXPECT_EQ(o->tail_length, 1U) << a;
        EXPECT_EQ(o->cycle_length, 1U) << a;
      }
      if (a != q("1/2")) {
        const auto o = detect_orbit(family2(a), a);
        ASSERT_TRUE(o);
        EXPECT_EQ(o->tail_length, 1U) << a;
        EXPECT_EQ(o->cycle_length, 2U) << a;
      }
    }
  }
}

TEST(Poonen, FixedPointParametrization) {
  const ParametrizedPair p0 = poonen_fixed(Rational(0));
  EXPECT_EQ(p0.a, q("-1/2"));
  EXPECT_EQ(p0.c, q("1/4"));
  EXPECT_EQ(p0.partner, q("-1/2"));

  const ParametrizedPair p = poonen_fixed(q("3/2"));
  EXPECT_EQ(p.a, Rational(-2));
  EXPECT_EQ(p.c, Rational(-2));
  EXPECT_EQ(p.partner, Rational(1));
  EXPECT_EQ(p.c, -p.a - p.a * p.a);

  EXPECT_THROW(poonen_fixed(q("1/2")), DegenerateBasePoint);
}

TEST(Poonen, PeriodTwoParametrization) {
  const ParametrizedPair p = poonen_period2(q("1/4"));
  EXPECT_EQ(p.a, q("1/4"));
  EXPECT_EQ(p.c, q("-13/16"));
  EXPECT_EQ(p.partner, q("3/4"));

  const ParametrizedPair p2 = poonen_period2(q("-1/6"));
  EXPECT_EQ(p2.a, q("2/3"));
  EXPECT_EQ(p2.c, q("-7/9"));
  EXPECT_EQ(p2.partner, q("1/3"));

  EXPECT_THROW(poonen_period2(q("1/2")), DegenerateBasePoint);
}

// Both base points of a pair give the same map.
TEST(Poonen, PartnerSharesMap) {
  for (long n = -20; n <= 20; ++n) {
    const Rational t(Integer(n), Integer(7));
    try {
      const ParametrizedPair p = poonen_fixed(t);
      if (p.partner != Rational(0) && p.partner != Rational(-1)) EXPECT_EQ(family1(p.partner).c(), p.c);
    } catch (const DegenerateBasePoint&) {
    }
    try {
      const ParametrizedPair p = poonen_period2(t);
      if (p.partner != Rational(0) && p.partner != q("1/2")) EXPECT_EQ(family2(p.partner).c(), p.c);
    } catch (const DegenerateBasePoint&) {
    }
  }
}
