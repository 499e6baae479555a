// verify.hpp
// Certification of embeddings from their coordinates alone: unit-distance
// residuals over the 21 flags, the l4-P4-l5 collinearity, regularity, and
// an exact sign-change bracket of x_l4 against the characteristic
// polynomial.

#ifndef HEAWOOD_VERIFY_HPP
#define HEAWOOD_VERIFY_HPP

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heawood/chain.hpp"
#include "heawood/charpoly.hpp"
#include "heawood/incidence.hpp"

namespace heawood {

/// One reference coordinate table: decimal strings for the 8 dependent
/// vertices.
struct ReferenceTable {
    int index = 0;
    std::map<VertexLabel, std::array<std::string, 2>> vertices;
};

std::vector<ReferenceTable> parse_reference_tables(const std::string& json_text);
std::vector<ReferenceTable> load_reference_tables(const std::filesystem::path& path);

/// The data file shipped with the library.
std::filesystem::path default_reference_tables_path();

/// The table as a candidate at precision `p`, fixed vertices pinned.
EmbeddingCandidate candidate_from_table(const ReferenceTable& table, Precision p);

struct FlagResidual {
    Flag flag;
    Real value; // |d(P, l)^2 - 1|
};

std::vector<FlagResidual> flag_residuals(const EmbeddingCandidate& e, const IncidenceStructure& inc);

/// |cross(l4 - l5, P4 - l5)|.
Real collinearity_residual(const EmbeddingCandidate& e);

/// Minimum distance from a vertex to an edge segment it is not an
/// endpoint of. Positive means no vertex lies on a foreign edge.
Real regularity_check(const EmbeddingCandidate& e, const IncidenceStructure& inc);

/// Largest coordinate difference over the 8 dependent vertices.
Real table_distance(const EmbeddingCandidate& e, const ReferenceTable& table);

/// True when p changes sign across [x - width/2, x + width/2] with x the
/// exact binary value of `x`.
bool charpoly_brackets(const BigPoly& p, const Real& x, const mpq_class& width);

inline constexpr double kTableMatchTolerance = 1e-13;

struct TableMatch {
    int index;
    Real distance;
};

struct Certificate {
    Real max_flag_residual;
    Flag worst_flag{0, 0};
    Real collinearity_residual;
    bool charpoly_bracket_ok = false;
    Real regularity_margin;
    int precision = 0;
    std::optional<int> matched_table;
    std::optional<TableMatch> nearest_table;

    bool passes() const;
};

/// Assembles the certificate. The bracket width around x_l4 is 10^-20;
/// `matched_table` is set when some table is within kTableMatchTolerance.
Certificate certify(const EmbeddingCandidate& e, const BigPoly& p, const IncidenceStructure& inc,
                    const std::vector<ReferenceTable>& tables);

/// Reflection across y = 1 followed by the relabeling P5<->P2, l5<->l7,
/// P4<->P6, l2<->l6 that maps the pinned rectangle onto itself. The result
/// is again a unit-distance embedding with the same rectangle.
EmbeddingCandidate mirror_across_y1(const EmbeddingCandidate& e);

} // namespace heawood

#endif // HEAWOOD_VERIFY_HPP
