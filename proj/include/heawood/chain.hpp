// chain.hpp
// The constraint system for a unit-distance Heawood embedding: a pinned
// 6-cycle rectangle, l4 on the radius-2 circle about l5 with P4 as the
// midpoint, and six ruler-and-compass steps that place the remaining
// vertices. The last unit distance, |P1 - l1| = 1, is left open and its
// residual is the function whose zeros are the embeddings.

#ifndef HEAWOOD_CHAIN_HPP
#define HEAWOOD_CHAIN_HPP

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heawood/geom.hpp"
#include "heawood/incidence.hpp"
#include "heawood/real.hpp"

namespace heawood {

/// Coordinates for all 14 vertices, indexed by label.
template <typename S>
class Placement {
public:
    Point2<S>& operator[](VertexLabel v) { return pts_[v.id()]; }
    const Point2<S>& operator[](VertexLabel v) const { return pts_[v.id()]; }

    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

private:
    std::array<Point2<S>, kVertexCount> pts_{};
};

/// The pinned rectangle P5=(0,0), l5=(1,0), P7=(1,1), l7=(1,2), P2=(0,2), l3=(0,1).
struct FixedVertex {
    VertexLabel label;
    int x;
    int y;
};

inline constexpr std::array<FixedVertex, 6> kFixedConfiguration{{
    {point(5), 0, 0},
    {line(5), 1, 0},
    {point(7), 1, 1},
    {line(7), 1, 2},
    {point(2), 0, 2},
    {line(3), 0, 1},
}};

bool is_fixed(VertexLabel v);

/// One compass step: `target` is at unit distance from both centers.
struct ConstructionStep {
    VertexLabel target;
    VertexLabel first_center;
    VertexLabel second_center;
};

/// Construction order P3, P6, l2, l1, l6, P1.
inline constexpr std::array<ConstructionStep, 6> kConstructionSteps{{
    {point(3), line(3), line(4)},
    {point(6), line(7), line(4)},
    {line(2), point(2), point(4)},
    {line(1), point(7), point(3)},
    {line(6), point(5), point(6)},
    {point(1), line(2), line(6)},
}};

/// One branch choice per construction step, in construction order.
class BranchVector {
public:
    BranchVector() = default;
    explicit BranchVector(std::array<BranchChoice, 6> bits) : bits_(bits) {}

    /// Entry k is bit k of `code`, 0 <= code < 64.
    static BranchVector from_code(int code);
    int code() const;

    BranchChoice operator[](std::size_t k) const { return bits_[k]; }
    BranchChoice& operator[](std::size_t k) { return bits_[k]; }

    /// e.g. "011000", construction order left to right.
    std::string to_string() const;

    friend bool operator==(const BranchVector&, const BranchVector&) = default;

private:
    std::array<BranchChoice, 6> bits_{};
};

inline constexpr int kBranchVectorCount = 64;

class ChainBroken : public std::runtime_error {
public:
    ChainBroken(VertexLabel vertex, IntersectStatus cause);

    VertexLabel vertex() const { return vertex_; }
    IntersectStatus cause() const { return cause_; }

private:
    VertexLabel vertex_;
    IntersectStatus cause_;
};

template <typename S>
Point2<S> place_l4(const S& theta)
{
    using std::cos;
    using std::sin;
    return Point2<S>(S(1) + S(2) * cos(theta), S(2) * sin(theta));
}

template <typename S>
Placement<S> fixed_placement()
{
    Placement<S> pl;
    for (const FixedVertex& f : kFixedConfiguration)
        pl[f.label] = Point2<S>(S(f.x), S(f.y));
    return pl;
}

/// Outcome of a non-throwing chain construction.
template <typename S>
struct ChainAttempt {
    std::optional<Placement<S>> placement;
    VertexLabel failed_at{VertexKind::Point, 3};
    IntersectStatus cause = IntersectStatus::Ok;

    bool ok() const { return placement.has_value(); }
};

template <typename S>
S closure_of(const Placement<S>& pl)
{
    return (pl[point(1)] - pl[line(1)]).squaredNorm() - S(1);
}

/// Runs the construction for parameter theta and the given branches.
template <typename S>
ChainAttempt<S> try_construct(const S& theta, const BranchVector& branch, const S& tol)
{
    ChainAttempt<S> out;
    Placement<S> pl = fixed_placement<S>();
    const Point2<S> l4 = place_l4(theta);
    pl[line(4)] = l4;
    pl[point(4)] = Point2<S>((l4.x() + S(1)) / S(2), l4.y() / S(2));

    const S one(1);
    for (std::size_t k = 0; k < kConstructionSteps.size(); ++k) {
        const ConstructionStep& step = kConstructionSteps[k];
        Intersection<S> r = intersect_circles<S>(pl[step.first_center], one, pl[step.second_center], one,
                                                 branch[k], tol);
        if (!r.ok()) {
            out.failed_at = step.target;
            out.cause = r.status;
            return out;
        }
        pl[step.target] = r.point;
    }
    out.placement = std::move(pl);
    return out;
}

/// Recovers the branch bits realised by a full placement.
template <typename S>
BranchVector infer_branch(const Placement<S>& pl)
{
    BranchVector b;
    for (std::size_t k = 0; k < kConstructionSteps.size(); ++k) {
        const ConstructionStep& step = kConstructionSteps[k];
        b[k] = side_of<S>(pl[step.first_center], pl[step.second_center], pl[step.target]);
    }
    return b;
}

/// A full set of 14 coordinates at a stated precision, with the parameter
/// and branch vector that produced it.
struct EmbeddingCandidate {
    Placement<Real> coords;
    Real theta;
    BranchVector branch;
    Real closure;
    Precision precision = kDefaultPrecision;

    const Point2<Real>& operator[](VertexLabel v) const { return coords[v]; }
};

/// l4 parameter recovered from coordinates: atan2(y/2, (x-1)/2) in [0, 2pi).
Real theta_of_l4(const Point2<Real>& l4, Precision p);

/// Throws ChainBroken at the first failing step.
EmbeddingCandidate build_chain(const Real& theta, const BranchVector& branch, Precision precision);

Real closure_residual(const EmbeddingCandidate& candidate);

/// Builds a candidate from given coordinates (fixed vertices are reset to
/// the pinned values); theta, branch and closure are derived.
EmbeddingCandidate candidate_from_placement(Placement<Real> coords, Precision precision);

enum class EquationKind {
    FixedRectangle,  // pinned unit edge of the rectangle
    RadiusTwo,       // |l4 - l5| = 2
    Midpoint,        // P4 = (l4 + l5) / 2, one coordinate
    ImpliedUnit,     // unit flag implied by the radius-two and midpoint constraints
    UnitDistance,    // compass step constraint
    Closure,         // the open |P1 - l1| = 1 condition
};

const char* to_string(EquationKind k);

struct ChainEquation {
    std::string id;
    EquationKind kind;
    VertexLabel a;
    VertexLabel b;
    int axis = 0; // Midpoint only: 0 = x, 1 = y

    bool is_flag() const;
    /// The flag for flag-carrying kinds.
    std::optional<Flag> flag() const;
};

/// Every constraint of the system. The 16 equations in the dependent
/// unknowns come first (in construction order), then the implied and
/// pinned flags.
const std::vector<ChainEquation>& equation_registry();

/// Just the 16 equations that the Newton polish solves.
std::vector<ChainEquation> square_system();

} // namespace heawood

#endif // HEAWOOD_CHAIN_HPP
