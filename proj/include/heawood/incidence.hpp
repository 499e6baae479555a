// incidence.hpp
// The Fano plane and its point-line incidence graph (the Heawood graph).

#ifndef HEAWOOD_INCIDENCE_HPP
#define HEAWOOD_INCIDENCE_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heawood {

enum class VertexKind { Point, Line };

/// One of the 14 Heawood vertices: P1..P7 or l1..l7.
struct VertexLabel {
    VertexKind kind;
    int index; // 1..7

    /// Dense id: P1..P7 -> 0..6, l1..l7 -> 7..13.
    constexpr int id() const { return (kind == VertexKind::Point ? 0 : 7) + index - 1; }

    static constexpr VertexLabel from_id(int id)
    {
        return id < 7 ? VertexLabel{VertexKind::Point, id + 1} : VertexLabel{VertexKind::Line, id - 6};
    }

    std::string name() const;
    static std::optional<VertexLabel> parse(std::string_view name);

    friend constexpr bool operator==(VertexLabel, VertexLabel) = default;
    friend constexpr auto operator<=>(VertexLabel a, VertexLabel b) { return a.id() <=> b.id(); }
};

inline constexpr int kVertexCount = 14;

constexpr VertexLabel point(int i) { return {VertexKind::Point, i}; }
constexpr VertexLabel line(int j) { return {VertexKind::Line, j}; }

/// All 14 labels in id order.
std::array<VertexLabel, kVertexCount> all_vertices();

/// An incident (point, line) pair, 1-based indices.
struct Flag {
    int point;
    int line;

    VertexLabel point_label() const { return heawood::point(point); }
    VertexLabel line_label() const { return heawood::line(line); }

    friend constexpr bool operator==(Flag, Flag) = default;
    friend constexpr auto operator<=>(Flag, Flag) = default;
};

/// A finite point-line incidence structure. Lines are stored in order
/// (line j is lines()[j-1]) as lists of 1-based point indices. The shape is
/// not validated on construction so that broken structures can be fed to
/// verify_fano_axioms.
class IncidenceStructure {
public:
    IncidenceStructure(int point_count, std::vector<std::vector<int>> lines);

    int point_count() const { return point_count_; }
    int line_count() const { return static_cast<int>(lines_.size()); }
    const std::vector<std::vector<int>>& lines() const { return lines_; }
    const std::vector<int>& points_on(int line) const { return lines_.at(line - 1); }

    bool incident(int point, int line) const;

    /// Flags sorted by (point, line).
    std::vector<Flag> flags() const;

private:
    int point_count_;
    std::vector<std::vector<int>> lines_;
};

struct FanoAxiomReport {
    bool seven_points_and_lines = false;
    bool three_points_per_line = false;
    bool three_lines_per_point = false;
    bool unique_line_per_point_pair = false;
    bool unique_point_per_line_pair = false;

    bool all() const
    {
        return seven_points_and_lines && three_points_per_line && three_lines_per_point &&
               unique_line_per_point_pair && unique_point_per_line_pair;
    }
};

/// The fixed labeling used throughout:
/// l1={P7,P3,P1}, l2={P2,P4,P1}, l3={P2,P5,P3}, l4={P4,P3,P6},
/// l5={P5,P7,P4}, l6={P5,P6,P1}, l7={P7,P2,P6}.
IncidenceStructure build_heawood_incidence();

FanoAxiomReport verify_fano_axioms(const IncidenceStructure& inc);

/// Length of the shortest cycle of the bipartite incidence graph, or 0 if
/// the graph has no cycle.
int girth(const IncidenceStructure& inc);

} // namespace heawood

#endif // HEAWOOD_INCIDENCE_HPP
