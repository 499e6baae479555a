#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "heawood/geom.hpp"

using namespace heawood;

namespace {

const double kTol = 1e-12;

Point2<double> p2(double x, double y) { return Point2<double>(x, y); }

} // namespace

TEST_CASE("unit circles a unit apart")
{
    const auto left = intersect_circles<double>(p2(0, 0), 1.0, p2(1, 0), 1.0, BranchChoice::Left, kTol);
    REQUIRE(left.ok());
    CHECK(left.point.x() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(left.point.y() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));

    const auto right = intersect_circles<double>(p2(0, 0), 1.0, p2(1, 0), 1.0, BranchChoice::Right, kTol);
    REQUIRE(right.ok());
    CHECK(right.point.y() == doctest::Approx(-std::sqrt(3.0) / 2).epsilon(1e-15));
}

TEST_CASE("failure modes")
{
    CHECK(intersect_circles<double>(p2(0, 0), 1.0, p2(3, 0), 1.0, BranchChoice::Left, kTol).status ==
          IntersectStatus::NoIntersection);
    CHECK(intersect_circles<double>(p2(0, 0), 1.0, p2(2, 0), 1.0, BranchChoice::Left, kTol).status ==
          IntersectStatus::Tangent);
    CHECK(intersect_circles<double>(p2(0.5, 0.5), 1.0, p2(0.5, 0.5), 1.0, BranchChoice::Left, kTol).status ==
          IntersectStatus::ConcentricCircles);
    CHECK_THROWS_AS(circle_circle_intersect<double>(p2(0, 0), 1.0, p2(3, 0), 1.0, BranchChoice::Left, kTol),
                    IntersectionError);
}

TEST_CASE("P3 from l3 and l4 of the first table")
{
    const ReferenceTable& t = testing::table(1);
    const Precision p(40);
    const EmbeddingCandidate e = candidate_from_table(t, p);
    const Point2<Real> q = circle_circle_intersect<Real>(e[line(3)], Real(1), e[line(4)], Real(1),
                                                         BranchChoice::Left, default_tolerance(p));
    CHECK(abs(q.x() - e[point(3)].x()).to_double() < 1e-13);
    CHECK(abs(q.y() - e[point(3)].y()).to_double() < 1e-13);
}

TEST_CASE("random intersections: residual, mirror symmetry, determinism")
{
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> gap(0.05, 1.95);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::acos(-1.0));

    for (int digits : {20, 40, 80}) {
        const Precision p(digits);
        const Real tol = default_tolerance(p);
        const double bound = std::pow(10.0, 2 - digits);
        for (int i = 0; i < 100; ++i) {
            const Point2<Real> c1(Real(coord(rng), p), Real(coord(rng), p));
            const double a = angle(rng);
            const double d = gap(rng);
            const Point2<Real> c2(c1.x() + Real(d * std::cos(a), p), c1.y() + Real(d * std::sin(a), p));
            const Real one(1);

            const auto l = intersect_circles<Real>(c1, one, c2, one, BranchChoice::Left, tol);
            const auto r = intersect_circles<Real>(c1, one, c2, one, BranchChoice::Right, tol);
            REQUIRE(l.ok());
            REQUIRE(r.ok());

            for (const auto* q : {&l.point, &r.point}) {
                CHECK(abs((*q - c1).squaredNorm() - 1).to_double() < bound);
                CHECK(abs((*q - c2).squaredNorm() - 1).to_double() < bound);
            }
            CHECK(side_of<Real>(c1, c2, l.point) == BranchChoice::Left);
            CHECK(side_of<Real>(c1, c2, r.point) == BranchChoice::Right);

            // The two branches are reflections of each other across c1c2.
            const Point2<Real> mid = (l.point + r.point) / Real(2);
            CHECK(std::abs(cross<Real>(c2 - c1, mid - c1).to_double()) < bound);

            const auto again = intersect_circles<Real>(c1, one, c2, one, BranchChoice::Left, tol);
            CHECK(again.point.x() == l.point.x());
            CHECK(again.point.y() == l.point.y());
        }
    }
}

TEST_CASE("point-segment distance")
{
    CHECK(point_segment_distance<double>(p2(0.5, 1), p2(0, 0), p2(1, 0)) == doctest::Approx(1.0));
    CHECK(point_segment_distance<double>(p2(2, 0), p2(0, 0), p2(1, 0)) == doctest::Approx(1.0));
    CHECK(point_segment_distance<double>(p2(-3, 4), p2(0, 0), p2(1, 0)) == doctest::Approx(5.0));
}
