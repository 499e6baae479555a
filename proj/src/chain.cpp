#include "heawood/chain.hpp"

#include <algorithm>

namespace heawood {

bool is_fixed(VertexLabel v)
{
    return std::any_of(kFixedConfiguration.begin(), kFixedConfiguration.end(),
                       [v](const FixedVertex& f) { return f.label == v; });
}

BranchVector BranchVector::from_code(int code)
{
    BranchVector b;
    for (int k = 0; k < 6; ++k)
        b.bits_[k] = ((code >> k) & 1) ? BranchChoice::Right : BranchChoice::Left;
    return b;
}

int BranchVector::code() const
{
    int c = 0;
    for (int k = 0; k < 6; ++k)
        if (bits_[k] == BranchChoice::Right)
            c |= 1 << k;
    return c;
}

std::string BranchVector::to_string() const
{
    std::string s;
    for (BranchChoice b : bits_)
        s += b == BranchChoice::Right ? '1' : '0';
    return s;
}

ChainBroken::ChainBroken(VertexLabel vertex, IntersectStatus cause)
    : std::runtime_error("chain broken at " + vertex.name() + ": " + heawood::to_string(cause)),
      vertex_(vertex), cause_(cause)
{
}

Real theta_of_l4(const Point2<Real>& l4, Precision p)
{
    Real t = atan2(l4.y().at(p) / 2, (l4.x().at(p) - 1) / 2);
    if (t < Real(0))
        t += 2 * pi(p);
    return t;
}

EmbeddingCandidate build_chain(const Real& theta, const BranchVector& branch, Precision precision)
{
    const Real t = theta.at(precision);
    ChainAttempt<Real> attempt = try_construct<Real>(t, branch, default_tolerance(precision));
    if (!attempt.ok())
        throw ChainBroken(attempt.failed_at, attempt.cause);

    EmbeddingCandidate c;
    c.coords = std::move(*attempt.placement);
    c.theta = t;
    c.branch = branch;
    c.precision = precision;
    c.closure = closure_of(c.coords);
    return c;
}

Real closure_residual(const EmbeddingCandidate& candidate) { return closure_of(candidate.coords); }

EmbeddingCandidate candidate_from_placement(Placement<Real> coords, Precision precision)
{
    for (const VertexLabel v : all_vertices())
        coords[v] = Point2<Real>(coords[v].x().at(precision), coords[v].y().at(precision));
    for (const FixedVertex& f : kFixedConfiguration)
        coords[f.label] = Point2<Real>(Real(f.x), Real(f.y));

    EmbeddingCandidate c;
    c.theta = theta_of_l4(coords[line(4)], precision);
    c.branch = infer_branch(coords);
    c.closure = closure_of(coords);
    c.coords = std::move(coords);
    c.precision = precision;
    return c;
}

const char* to_string(EquationKind k)
{
    switch (k) {
    case EquationKind::FixedRectangle:
        return "fixed_rectangle";
    case EquationKind::RadiusTwo:
        return "radius_two";
    case EquationKind::Midpoint:
        return "midpoint";
    case EquationKind::ImpliedUnit:
        return "implied_unit";
    case EquationKind::UnitDistance:
        return "unit_distance";
    case EquationKind::Closure:
        return "closure";
    }
    return "unknown";
}

bool ChainEquation::is_flag() const
{
    return kind == EquationKind::FixedRectangle || kind == EquationKind::ImpliedUnit ||
           kind == EquationKind::UnitDistance || kind == EquationKind::Closure;
}

std::optional<Flag> ChainEquation::flag() const
{
    if (!is_flag())
        return std::nullopt;
    const VertexLabel p = a.kind == VertexKind::Point ? a : b;
    const VertexLabel l = a.kind == VertexKind::Point ? b : a;
    return Flag{p.index, l.index};
}

const std::vector<ChainEquation>& equation_registry()
{
    static const std::vector<ChainEquation> registry = [] {
        std::vector<ChainEquation> eqs;
        eqs.push_back({"l4_radius_two", EquationKind::RadiusTwo, line(4), line(5)});
        eqs.push_back({"P4_midpoint_x", EquationKind::Midpoint, point(4), line(4), 0});
        eqs.push_back({"P4_midpoint_y", EquationKind::Midpoint, point(4), line(4), 1});
        for (const ConstructionStep& s : kConstructionSteps) {
            eqs.push_back({s.target.name() + "_from_" + s.first_center.name(), EquationKind::UnitDistance,
                           s.target, s.first_center});
            eqs.push_back({s.target.name() + "_from_" + s.second_center.name(), EquationKind::UnitDistance,
                           s.target, s.second_center});
        }
        eqs.push_back({"P1_l1_closure", EquationKind::Closure, point(1), line(1)});

        eqs.push_back({"P4_l4_implied", EquationKind::ImpliedUnit, point(4), line(4)});
        eqs.push_back({"P4_l5_implied", EquationKind::ImpliedUnit, point(4), line(5)});
        for (std::size_t i = 0; i < kFixedConfiguration.size(); ++i) {
            const VertexLabel u = kFixedConfiguration[i].label;
            const VertexLabel v = kFixedConfiguration[(i + 1) % kFixedConfiguration.size()].label;
            eqs.push_back({"rect_" + u.name() + "_" + v.name(), EquationKind::FixedRectangle, u, v});
        }
        return eqs;
    }();
    return registry;
}

std::vector<ChainEquation> square_system()
{
    std::vector<ChainEquation> out;
    for (const ChainEquation& e : equation_registry())
        if (e.kind != EquationKind::ImpliedUnit && e.kind != EquationKind::FixedRectangle)
            out.push_back(e);
    return out;
}

} // namespace heawood
