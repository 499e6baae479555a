#include "heawood/solver.hpp"

#include <algorithm>
#include <array>
#include <string>

#include <Eigen/LU>

namespace heawood {

namespace {

constexpr int kUnknownCount = 16;

using Vector16 = Eigen::Matrix<Real, kUnknownCount, 1>;
using Matrix16 = Eigen::Matrix<Real, kUnknownCount, kUnknownCount>;

// Unknown vertices in the order their (x, y) pairs appear in the Newton vector.
constexpr std::array<VertexLabel, 8> kUnknowns{line(4), point(4), point(3), point(6),
                                               line(2), line(1), line(6), point(1)};

int slot_of(VertexLabel v)
{
    for (std::size_t i = 0; i < kUnknowns.size(); ++i)
        if (kUnknowns[i] == v)
            return static_cast<int>(2 * i);
    return -1;
}

Real max_abs(const std::vector<Real>& v)
{
    Real m(0);
    for (const Real& x : v)
        m = max(m, abs(x));
    return m;
}

Real inf_norm(const Matrix16& m)
{
    Real best(0);
    for (int i = 0; i < kUnknownCount; ++i) {
        Real row(0);
        for (int j = 0; j < kUnknownCount; ++j)
            row += abs(m(i, j));
        best = max(best, row);
    }
    return best;
}

Matrix16 jacobian(const Placement<Real>& pl)
{
    Matrix16 J;
    for (int i = 0; i < kUnknownCount; ++i)
        for (int j = 0; j < kUnknownCount; ++j)
            J(i, j) = Real(0);

    const std::vector<ChainEquation> eqs = square_system();
    for (int row = 0; row < kUnknownCount; ++row) {
        const ChainEquation& e = eqs[static_cast<std::size_t>(row)];
        const int sa = slot_of(e.a);
        const int sb = slot_of(e.b);
        if (e.kind == EquationKind::Midpoint) {
            // P4_axis - (l4_axis + l5_axis) / 2
            J(row, sa + e.axis) = Real(1);
            J(row, sb + e.axis) = Real(-0.5);
            continue;
        }
        const Point2<Real> diff = pl[e.a] - pl[e.b];
        for (int axis = 0; axis < 2; ++axis) {
            if (sa >= 0)
                J(row, sa + axis) = 2 * diff(axis);
            if (sb >= 0)
                J(row, sb + axis) = -2 * diff(axis);
        }
    }
    return J;
}

std::optional<Real> closure_at(const Real& theta, const BranchVector& branch, const Real& tol)
{
    ChainAttempt<Real> a = try_construct<Real>(theta, branch, tol);
    if (!a.ok())
        return std::nullopt;
    return closure_of(*a.placement);
}

} // namespace

void SolveConfig::validate() const
{
    if (grid_points < 1000)
        throw std::invalid_argument("grid_points must be at least 1000");
    if (precision_stages.empty())
        throw std::invalid_argument("precision_stages must not be empty");
    for (std::size_t i = 1; i < precision_stages.size(); ++i)
        if (precision_stages[i] <= precision_stages[i - 1])
            throw std::invalid_argument("precision_stages must be strictly increasing");
    if (precision_stages.front() < 10)
        throw std::invalid_argument("precision stages below 10 digits are not supported");
    if (newton_max_iter < 1)
        throw std::invalid_argument("newton_max_iter must be positive");
    if (!(theta_min < theta_max))
        throw std::invalid_argument("theta_min must be below theta_max");
}

Real SolveConfig::effective_dedupe_tol() const
{
    if (dedupe_tol)
        return *dedupe_tol;
    const int d = final_digits();
    return pow10(d >= 26 ? -20 : 6 - d, Precision(d));
}

std::vector<Bracket> sweep(const SolveConfig& config)
{
    config.validate();
    const int n = config.grid_points;
    const double span = config.theta_max - config.theta_min;
    constexpr double kTol = 1e-8;

    std::vector<Bracket> out;
    for (int code = 0; code < kBranchVectorCount; ++code) {
        const BranchVector branch = BranchVector::from_code(code);
        bool have_prev = false;
        double prev_theta = 0.0;
        double prev_value = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double theta = config.theta_min + span * static_cast<double>(i) / n;
            const ChainAttempt<double> a = try_construct<double>(theta, branch, kTol);
            if (!a.ok()) {
                have_prev = false;
                continue;
            }
            const double value = closure_of(*a.placement);
            if (have_prev && ((prev_value < 0 && value > 0) || (prev_value > 0 && value < 0)))
                out.push_back({branch, Real(prev_theta), Real(theta), Real(prev_value), Real(value)});
            have_prev = true;
            prev_theta = theta;
            prev_value = value;
        }
    }
    return out;
}

EmbeddingCandidate refine_bracket(const Bracket& b, int digits)
{
    const Precision prec(digits);
    const Real tol = default_tolerance(prec);
    const Real target = pow10(-(digits / 2), prec);

    Real lo = b.theta_lo.at(prec);
    Real hi = b.theta_hi.at(prec);
    std::optional<Real> flo = closure_at(lo, b.branch, tol);
    const std::optional<Real> fhi = closure_at(hi, b.branch, tol);
    if (!flo || !fhi || flo->sign() * fhi->sign() >= 0)
        throw LostBracket("no sign change at working precision for branch " + b.branch.to_string());

    // Bisection halves the width each pass; the cap only guards against a
    // residual that refuses to shrink.
    const int max_iter = 8 * digits + 200;
    for (int iter = 0; iter < max_iter; ++iter) {
        const Real mid = (lo + hi) / 2;
        const std::optional<Real> fm = closure_at(mid, b.branch, tol);
        if (!fm)
            throw LostBracket("chain broke inside bracket for branch " + b.branch.to_string());
        if (hi - lo < target && abs(*fm) < target)
            return build_chain(mid, b.branch, prec);
        if (fm->is_zero())
            return build_chain(mid, b.branch, prec);
        if (fm->sign() == flo->sign()) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    throw LostBracket("bisection did not reach the target width for branch " + b.branch.to_string());
}

std::vector<Real> system_residuals(const Placement<Real>& pl)
{
    std::vector<Real> f;
    f.reserve(kUnknownCount);
    for (const ChainEquation& e : square_system()) {
        switch (e.kind) {
        case EquationKind::RadiusTwo:
            f.push_back((pl[e.a] - pl[e.b]).squaredNorm() - 4);
            break;
        case EquationKind::Midpoint:
            f.push_back(pl[e.a](e.axis) - (pl[e.b](e.axis) + pl[line(5)](e.axis)) / 2);
            break;
        default:
            f.push_back((pl[e.a] - pl[e.b]).squaredNorm() - 1);
            break;
        }
    }
    return f;
}

EmbeddingCandidate newton_polish(const EmbeddingCandidate& candidate, int digits, int max_iter, NewtonTrace* trace)
{
    const Precision prec(digits);
    if (!(abs(closure_residual(candidate)) < Real(1e-10)))
        throw std::invalid_argument("newton_polish: seed closure residual is not below 1e-10");

    Placement<Real> pl = candidate.coords;
    for (const VertexLabel v : kUnknowns)
        pl[v] = Point2<Real>(pl[v].x().at(prec), pl[v].y().at(prec));

    const Real stop = pow10(4 - digits, prec);
    const Real cond_limit = pow10(digits / 2, prec);

    for (int iter = 0;; ++iter) {
        const std::vector<Real> f = system_residuals(pl);
        const Real r = max_abs(f);
        if (trace)
            trace->residuals.push_back(r);
        if (r < stop)
            break;
        if (iter >= max_iter)
            throw NoConvergence("newton_polish: no convergence after " + std::to_string(max_iter) + " iterations");

        const Matrix16 J = jacobian(pl);
        const Eigen::PartialPivLU<Matrix16> lu(J);
        const Matrix16 inv = lu.inverse();
        const Real cond = inf_norm(J) * inf_norm(inv);
        if (!(cond < cond_limit))
            throw SingularJacobian("newton_polish: Jacobian condition estimate " + cond.to_string(6) +
                                   " exceeds 10^" + std::to_string(digits / 2));

        Vector16 rhs;
        for (int i = 0; i < kUnknownCount; ++i)
            rhs(i) = -f[static_cast<std::size_t>(i)];
        const Vector16 delta = inv * rhs;

        Real step(0);
        for (std::size_t k = 0; k < kUnknowns.size(); ++k) {
            const int s = static_cast<int>(2 * k);
            Point2<Real>& p = pl[kUnknowns[k]];
            p.x() += delta(s);
            p.y() += delta(s + 1);
            step = max(step, max(abs(delta(s)), abs(delta(s + 1))));
        }
        if (trace)
            trace->step_norms.push_back(step);
    }
    return candidate_from_placement(std::move(pl), prec);
}

Real min_vertex_separation(const Placement<Real>& pl)
{
    std::optional<Real> best;
    for (int i = 0; i < kVertexCount; ++i)
        for (int j = i + 1; j < kVertexCount; ++j) {
            const Real d = distance<Real>(pl[VertexLabel::from_id(i)], pl[VertexLabel::from_id(j)]);
            if (!best || d < *best)
                best = d;
        }
    return *best;
}

std::vector<EmbeddingCandidate> dedupe(std::vector<EmbeddingCandidate> candidates, const Real& tol)
{
    std::vector<EmbeddingCandidate> kept;
    for (EmbeddingCandidate& c : candidates) {
        const bool seen = std::any_of(kept.begin(), kept.end(), [&](const EmbeddingCandidate& k) {
            for (const VertexLabel v : all_vertices())
                if (!(abs(k[v].x() - c[v].x()) <= tol) || !(abs(k[v].y() - c[v].y()) <= tol))
                    return false;
            return true;
        });
        if (!seen)
            kept.push_back(std::move(c));
    }
    std::stable_sort(kept.begin(), kept.end(), [](const EmbeddingCandidate& a, const EmbeddingCandidate& b) {
        const Point2<Real>& la = a[line(4)];
        const Point2<Real>& lb = b[line(4)];
        if (la.x() != lb.x())
            return la.x() < lb.x();
        return la.y() < lb.y();
    });
    return kept;
}

SolveReport solve_all(const SolveConfig& config)
{
    config.validate();
    SolveReport report;
    const std::vector<Bracket> brackets = sweep(config);
    report.brackets = static_cast<int>(brackets.size());

    // Bisection runs at no fewer than 24 digits so the seed closure clears
    // the Newton precondition even when the first stage is coarse.
    const int refine_digits = std::max(config.precision_stages.front(), 24);

    std::vector<EmbeddingCandidate> found;
    for (const Bracket& b : brackets) {
        EmbeddingCandidate c;
        try {
            c = refine_bracket(b, refine_digits);
        } catch (const LostBracket&) {
            ++report.lost_brackets;
            continue;
        }
        if (min_vertex_separation(c.coords) < Real(kDegenerateSeparation)) {
            ++report.degenerate;
            continue;
        }
        try {
            for (int digits : config.precision_stages)
                c = newton_polish(c, digits, config.newton_max_iter);
        } catch (const SolverError&) {
            ++report.newton_failures;
            continue;
        }
        found.push_back(std::move(c));
    }
    const std::size_t before = found.size();
    report.embeddings = dedupe(std::move(found), config.effective_dedupe_tol());
    report.duplicates = static_cast<int>(before - report.embeddings.size());
    return report;
}

} // namespace heawood
