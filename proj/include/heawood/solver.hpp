// solver.hpp
// Finds every real solution of the chain system: a theta sweep over all 64
// branch vectors, bisection on sign changes of the closure residual, Newton
// polish on the square 16x16 system, and deduplication.

#ifndef HEAWOOD_SOLVER_HPP
#define HEAWOOD_SOLVER_HPP

#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heawood/chain.hpp"
#include "heawood/real.hpp"

namespace heawood {

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The sign change vanished or the chain broke inside the bracket.
class LostBracket : public SolverError {
public:
    using SolverError::SolverError;
};

class SingularJacobian : public SolverError {
public:
    using SolverError::SolverError;
};

class NoConvergence : public SolverError {
public:
    using SolverError::SolverError;
};

struct Bracket {
    BranchVector branch;
    Real theta_lo;
    Real theta_hi;
    Real residual_lo;
    Real residual_hi;
};

struct SolveConfig {
    int grid_points = 20000;
    std::vector<int> precision_stages{30, 60};
    /// Unset: 1e-20, loosened to 10^(6-d) when the final stage has d < 26 digits.
    std::optional<Real> dedupe_tol;
    int newton_max_iter = 100;
    /// Swept parameter range; the default is the full circle.
    double theta_min = 0.0;
    double theta_max = 2.0 * std::numbers::pi;

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;

    int final_digits() const { return precision_stages.back(); }
    Real effective_dedupe_tol() const;
};

/// Sign changes of the closure residual between adjacent grid samples that
/// share a branch vector and both construct successfully. The grid is
/// evaluated in double precision; brackets are re-validated by
/// refine_bracket at working precision.
std::vector<Bracket> sweep(const SolveConfig& config);

/// Bisection on theta at `digits` precision until the bracket is narrower
/// than 10^(-digits/2) and |closure| < 10^(-digits/2).
EmbeddingCandidate refine_bracket(const Bracket& b, int digits);

/// Per-iteration record of a Newton run.
struct NewtonTrace {
    std::vector<Real> residuals;   // max |F| before each step (and after the last)
    std::vector<Real> step_norms;  // max |delta| of each step
};

/// Newton's method on the 16 equations in the 16 dependent coordinates
/// (l4, P4, P3, P6, l2, l1, l6, P1), analytic Jacobian, at `digits`
/// precision. Stops once max |F| < 10^(4-digits).
EmbeddingCandidate newton_polish(const EmbeddingCandidate& candidate, int digits, int max_iter = 100,
                                 NewtonTrace* trace = nullptr);

/// Residuals of the 16 equations, in square_system() order.
std::vector<Real> system_residuals(const Placement<Real>& pl);

/// Smallest distance between two distinct vertices.
Real min_vertex_separation(const Placement<Real>& pl);

/// Collapses candidates whose 28 coordinates all agree within `tol`,
/// keeping the first, and sorts by (x_l4, y_l4).
std::vector<EmbeddingCandidate> dedupe(std::vector<EmbeddingCandidate> candidates, const Real& tol);

struct SolveReport {
    std::vector<EmbeddingCandidate> embeddings;
    int brackets = 0;
    int lost_brackets = 0;
    int degenerate = 0;      // real solutions with two coincident vertices
    int newton_failures = 0;
    int duplicates = 0;
};

/// Separation below which a solution counts as degenerate.
inline constexpr double kDegenerateSeparation = 1e-8;

SolveReport solve_all(const SolveConfig& config);

} // namespace heawood

#endif // HEAWOOD_SOLVER_HPP
