// geom.hpp
// Planar geometry kernel templated on the scalar type (double for fast
// sweeps, heawood::Real for certified work).

#ifndef HEAWOOD_GEOM_HPP
#define HEAWOOD_GEOM_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "heawood/real.hpp"

namespace heawood {

template <typename S>
using Point2 = Eigen::Matrix<S, 2, 1>;

/// Which of the two circle-circle intersections to take: Left lies on the
/// positive side of the directed center line c1 -> c2 (bit 0), Right on
/// the negative side (bit 1).
enum class BranchChoice : unsigned char { Left = 0, Right = 1 };

enum class IntersectStatus { Ok, NoIntersection, Tangent, ConcentricCircles };

const char* to_string(IntersectStatus s);

template <typename S>
struct Intersection {
    IntersectStatus status = IntersectStatus::Ok;
    Point2<S> point;

    bool ok() const { return status == IntersectStatus::Ok; }
};

class IntersectionError : public std::runtime_error {
public:
    explicit IntersectionError(IntersectStatus s)
        : std::runtime_error(std::string("circle intersection failed: ") + to_string(s)), status_(s)
    {
    }
    IntersectStatus status() const { return status_; }

private:
    IntersectStatus status_;
};

template <typename S>
S cross(const Point2<S>& a, const Point2<S>& b)
{
    return a.x() * b.y() - a.y() * b.x();
}

template <typename S>
S distance(const Point2<S>& a, const Point2<S>& b)
{
    using std::sqrt;
    return sqrt((a - b).squaredNorm());
}

/// Non-throwing circle-circle intersection. `tol` bounds both the center
/// separation treated as concentric and the |h^2| band treated as tangent,
/// where h is the half chord length.
template <typename S>
Intersection<S> intersect_circles(const Point2<S>& c1, const S& r1, const Point2<S>& c2, const S& r2,
                                  BranchChoice branch, const S& tol)
{
    using std::abs;
    using std::sqrt;

    Intersection<S> out;
    const Point2<S> delta = c2 - c1;
    const S d2 = delta.squaredNorm();
    const S d = sqrt(d2);
    if (d <= tol) {
        out.status = IntersectStatus::ConcentricCircles;
        return out;
    }

    // m = c1 + a*u is the foot of the chord on the center line.
    const S a = (d2 + r1 * r1 - r2 * r2) / (S(2) * d);
    const S h2 = r1 * r1 - a * a;
    if (h2 < -tol) {
        out.status = IntersectStatus::NoIntersection;
        return out;
    }
    if (abs(h2) <= tol) {
        out.status = IntersectStatus::Tangent;
        return out;
    }

    const S h = sqrt(h2);
    const Point2<S> u = delta / d;
    const Point2<S> left(-u.y(), u.x());
    const Point2<S> m = c1 + u * a;
    out.point = branch == BranchChoice::Left ? Point2<S>(m + left * h) : Point2<S>(m - left * h);
    return out;
}

/// Throwing form of intersect_circles.
template <typename S>
Point2<S> circle_circle_intersect(const Point2<S>& c1, const S& r1, const Point2<S>& c2, const S& r2,
                                  BranchChoice branch, const S& tol)
{
    Intersection<S> r = intersect_circles(c1, r1, c2, r2, branch, tol);
    if (!r.ok())
        throw IntersectionError(r.status);
    return r.point;
}

/// Side of q relative to the directed line c1 -> c2.
template <typename S>
BranchChoice side_of(const Point2<S>& c1, const Point2<S>& c2, const Point2<S>& q)
{
    return cross<S>(c2 - c1, q - c1) >= S(0) ? BranchChoice::Left : BranchChoice::Right;
}

/// Euclidean distance from q to the closed segment [a, b].
template <typename S>
S point_segment_distance(const Point2<S>& q, const Point2<S>& a, const Point2<S>& b)
{
    const Point2<S> ab = b - a;
    const S len2 = ab.squaredNorm();
    S t = len2 > S(0) ? S((q - a).dot(ab) / len2) : S(0);
    if (t < S(0))
        t = S(0);
    else if (t > S(1))
        t = S(1);
    const Point2<S> foot = a + ab * t;
    return distance<S>(q, foot);
}

/// Default tangency tolerance at `p` digits: 10^(-p/2).
Real default_tolerance(Precision p);

} // namespace heawood

#endif // HEAWOOD_GEOM_HPP
