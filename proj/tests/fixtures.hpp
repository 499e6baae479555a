// Shared, lazily computed test data.

#ifndef HEAWOOD_TESTS_FIXTURES_HPP
#define HEAWOOD_TESTS_FIXTURES_HPP

#include <vector>

#include "heawood/solver.hpp"
#include "heawood/verify.hpp"

namespace heawood::testing {

/// solve_all with the default configuration, computed once per binary.
inline const SolveReport& default_solve()
{
    static const SolveReport report = solve_all(SolveConfig{});
    return report;
}

inline const std::vector<ReferenceTable>& reference_tables()
{
    static const std::vector<ReferenceTable> tables = load_reference_tables(default_reference_tables_path());
    return tables;
}

inline const ReferenceTable& table(int index) { return reference_tables().at(static_cast<std::size_t>(index - 1)); }

inline double log10_abs(const Real& x) { return static_cast<double>(decimal_exponent(x)); }

} // namespace heawood::testing

#endif // HEAWOOD_TESTS_FIXTURES_HPP
