#include <gtest/gtest.h>

#include <random>

#include "heyland/errors.hpp"
#include "heyland/geom.hpp"
#include "oracles.hpp"

namespace heyland {
namespace {

constexpr Point2 kO{5.977168188550473, 0.522934456485949};
constexpr Point2 kA{44.831855152230224, 17.149482896269738};

TEST(PerpendicularBisector, AxisAlignedPairs) {
    const Line2 v = perpendicular_bisector({0, 0}, {2, 0});
    EXPECT_NEAR(signed_distance({1, 0}, v), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(v.direction().y), 1.0, 1e-15);

    const Line2 h = perpendicular_bisector({0, 0}, {0, 2});
    EXPECT_NEAR(signed_distance({0, 1}, h), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h.direction().x), 1.0, 1e-15);
}

TEST(PerpendicularBisector, SampleAnchors) {
    const Line2 b = perpendicular_bisector(kO, kA);
    EXPECT_NEAR(signed_distance({25.404511670390349, 8.836208676377844}, b), 0.0, 1e-12);
    EXPECT_NEAR(dot(b.direction(), kA - kO), 0.0, 1e-12);
}

TEST(PerpendicularBisector, CoincidentPointsThrow) {
    EXPECT_THROW(perpendicular_bisector({1, 1}, {1, 1}), DegenerateInput);
}

TEST(LineIntersection, Basics) {
    const Point2 origin = line_intersection(Line2({0, 0}, {1, 0}), Line2({0, 0}, {0, 1}));
    EXPECT_EQ(origin, (Point2{0, 0}));

    const Point2 p = line_intersection(Line2({0, 1}, {1, 0}), Line2({2, 0}, {0, 1}));
    EXPECT_NEAR(p.x, 2.0, 1e-15);
    EXPECT_NEAR(p.y, 1.0, 1e-15);

    EXPECT_THROW(line_intersection(Line2({0, 0}, {1, 1}), Line2({0, 1}, {2, 2})), ParallelLines);
}

TEST(LineIntersection, BisectorMeetsReferenceHorizontal) {
    const Point2 c = line_intersection(Line2(kO, {1, 0}), perpendicular_bisector(kO, kA));
    const Point2 expected = testing::solve_center(kO, kA);
    EXPECT_NEAR(c.x, 28.961896050798392, 1e-11);
    EXPECT_NEAR(c.x, expected.x, 1e-11);
    EXPECT_EQ(c.y, kO.y);
}

TEST(LineCircleIntersections, UnitCircleCases) {
    const CircleShape unit{{0, 0}, 1.0};

    const auto two = line_circle_intersections(Line2({-5, 0}, {1, 0}), unit);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_NEAR(two[0].x, -1.0, 1e-15);
    EXPECT_NEAR(two[1].x, 1.0, 1e-15);

    const auto one = line_circle_intersections(Line2({-5, 1}, {1, 0}), unit);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_NEAR(one[0].x, 0.0, 1e-15);
    EXPECT_NEAR(one[0].y, 1.0, 1e-15);

    EXPECT_TRUE(line_circle_intersections(Line2({-5, 2}, {1, 0}), unit).empty());
}

TEST(LineCircleIntersections, OrderedAlongDirection) {
    const CircleShape unit{{0, 0}, 1.0};
    const auto hits = line_circle_intersections(Line2({5, 0}, {-1, 0}), unit);
    ASSERT_EQ(hits.size(), 2u);
    EXPECT_GT(hits[0].x, hits[1].x);
}

TEST(SignedDistance, LeftIsPositive) {
    const Line2 x_axis({0, 0}, {1, 0});
    EXPECT_EQ(signed_distance({0, 1}, x_axis), 1.0);
    EXPECT_EQ(signed_distance({0, -1}, x_axis), -1.0);
    EXPECT_EQ(signed_distance({3, 0}, x_axis), 0.0);
}

TEST(ExtremePointOnCircle, UnitCircle) {
    const CircleShape unit{{0, 0}, 1.0};
    const Line2 x_axis({0, 0}, {1, 0});
    const Point2 up = extreme_point_on_circle(unit, x_axis, Side::left);
    const Point2 down = extreme_point_on_circle(unit, x_axis, Side::right);
    EXPECT_NEAR(up.x, 0.0, 1e-15);
    EXPECT_EQ(up.y, 1.0);
    EXPECT_NEAR(down.x, 0.0, 1e-15);
    EXPECT_EQ(down.y, -1.0);
}

TEST(ExtremePointOnCircle, SampleOutputLineMatchesDenseSampling) {
    const Point2 c = testing::solve_center(kO, kA);
    const CircleShape circle{c, c.x - kO.x};
    const Line2 output = Line2::through(kO, kA);
    const Point2 p = extreme_point_on_circle(circle, output, Side::left);
    EXPECT_NEAR(p.x, 19.919467622268238, 1e-9);
    EXPECT_NEAR(p.y, 21.654243053364314, 1e-9);

    testing::ReferenceDiagram ref{kO, kA, kA, c, circle.radius, 1.0};
    const auto best = testing::sample_circle_max(ref, 1000000, [&](Point2 q) {
        return cross(kA - kO, q - kO) / distance(kO, kA);
    });
    EXPECT_NEAR(best.where.x, p.x, 1e-3 * circle.radius);
    EXPECT_NEAR(best.where.y, p.y, 1e-3 * circle.radius);
    EXPECT_GE(signed_distance(p, output), best.value - 1e-12 * circle.radius);
}

TEST(VerticalIntercept, Basics) {
    EXPECT_EQ(vertical_intercept(Line2({0, 0}, {1, 0}), 7.0), 0.0);
    EXPECT_NEAR(vertical_intercept(Line2::with_slope({0, 1}, 1.0), 2.0), 3.0, 1e-15);
    EXPECT_NEAR(vertical_intercept(Line2::through(kO, kA), 8.129), 1.443738062001471, 1e-12);
    EXPECT_THROW(vertical_intercept(Line2({1, 1}, {0, 1}), 2.0), VerticalLine);
}

TEST(Line2, RejectsZeroDirection) {
    EXPECT_THROW(Line2({0, 0}, {0, 0}), DegenerateInput);
}

// Randomised invariants over lines and circles.
class GeomProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{20241015};
    std::uniform_real_distribution<double> coord{-500.0, 500.0};
    std::uniform_real_distribution<double> angle{0.0, 2.0 * testing::kPi};
    std::uniform_real_distribution<double> radius{0.5, 300.0};

    Line2 random_line() {
        const double a = angle(rng);
        return Line2({coord(rng), coord(rng)}, {std::cos(a), std::sin(a)});
    }
    CircleShape random_circle() { return {{coord(rng), coord(rng)}, radius(rng)}; }
};

TEST_F(GeomProperties, IntersectionsLieOnBoth) {
    int hits_seen = 0;
    for (int i = 0; i < 2000; ++i) {
        const CircleShape c = random_circle();
        // Aim the line close to the circle so most trials intersect.
        const double a = angle(rng);
        const Point2 near = c.center + (1.2 * c.radius) * Point2{std::cos(a), std::sin(a)};
        const double heading = angle(rng);
        const Line2 l(near, {std::cos(heading), std::sin(heading)});
        for (Point2 p : line_circle_intersections(l, c)) {
            ++hits_seen;
            EXPECT_LE(std::abs(distance(p, c.center) - c.radius), kGeomEps * c.radius);
            EXPECT_LE(std::abs(signed_distance(p, l)), kGeomEps * c.radius);
        }
    }
    EXPECT_GT(hits_seen, 1000);
}

TEST_F(GeomProperties, ExtremePointBeatsSamples) {
    for (int trial = 0; trial < 5; ++trial) {
        const CircleShape c = random_circle();
        const Line2 l = random_line();
        for (Side side : {Side::left, Side::right}) {
            const double sign = side == Side::left ? 1.0 : -1.0;
            const double best = sign * signed_distance(extreme_point_on_circle(c, l, side), l);
            for (int i = 0; i < 100000; ++i) {
                const double t = 2.0 * testing::kPi * i / 100000;
                const Point2 q{c.center.x + c.radius * std::cos(t), c.center.y + c.radius * std::sin(t)};
                ASSERT_LE(sign * signed_distance(q, l), best + 1e-9 * c.radius);
            }
        }
    }
}

TEST_F(GeomProperties, SignedDistanceIsLinearAlongNormal) {
    for (int i = 0; i < 1000; ++i) {
        const Line2 l = random_line();
        const Point2 p{coord(rng), coord(rng)};
        const double t = coord(rng);
        EXPECT_NEAR(signed_distance(p + t * l.left_normal(), l), signed_distance(p, l) + t, 1e-9);
    }
}

TEST_F(GeomProperties, TranslationInvarianceAndScalingEquivariance) {
    for (int i = 0; i < 1000; ++i) {
        const Point2 p{coord(rng), coord(rng)};
        const Point2 q{coord(rng), coord(rng)};
        const Point2 shift{coord(rng), coord(rng)};
        const double scale = std::exp(coord(rng) / 200.0);

        const Line2 l = Line2::through(p, q);
        const Line2 bisector = perpendicular_bisector(p, q);
        const Line2 moved = perpendicular_bisector(p + shift, q + shift);
        const Line2 scaled = perpendicular_bisector(scale * p, scale * q);

        const Point2 probe{coord(rng), coord(rng)};
        const double d0 = signed_distance(probe, bisector);
        EXPECT_NEAR(signed_distance(probe + shift, moved), d0, 1e-9 * 1000.0);
        EXPECT_NEAR(signed_distance(scale * probe, scaled), scale * d0, 1e-9 * 1000.0 * scale);

        const Point2 x0 = line_intersection(l, bisector);
        const Point2 x1 = line_intersection(Line2::through(scale * p, scale * q), scaled);
        EXPECT_NEAR(x1.x, scale * x0.x, 1e-9 * 1000.0 * scale);
        EXPECT_NEAR(x1.y, scale * x0.y, 1e-9 * 1000.0 * scale);
    }
}

} // namespace
} // namespace heyland
