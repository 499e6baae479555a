#include "heawood/incidence.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace heawood {

std::string VertexLabel::name() const
{
    return (kind == VertexKind::Point ? "P" : "l") + std::to_string(index);
}

std::optional<VertexLabel> VertexLabel::parse(std::string_view name)
{
    if (name.size() != 2 || name[1] < '1' || name[1] > '7')
        return std::nullopt;
    const int idx = name[1] - '0';
    if (name[0] == 'P')
        return point(idx);
    if (name[0] == 'l')
        return line(idx);
    return std::nullopt;
}

std::array<VertexLabel, kVertexCount> all_vertices()
{
    std::array<VertexLabel, kVertexCount> out{};
    for (int id = 0; id < kVertexCount; ++id)
        out[id] = VertexLabel::from_id(id);
    return out;
}

IncidenceStructure::IncidenceStructure(int point_count, std::vector<std::vector<int>> lines)
    : point_count_(point_count), lines_(std::move(lines))
{
}

bool IncidenceStructure::incident(int point, int line) const
{
    if (line < 1 || line > line_count())
        return false;
    const auto& pts = lines_[line - 1];
    return std::find(pts.begin(), pts.end(), point) != pts.end();
}

std::vector<Flag> IncidenceStructure::flags() const
{
    std::set<Flag> out;
    for (int j = 1; j <= line_count(); ++j)
        for (int p : lines_[j - 1])
            out.insert(Flag{p, j});
    return {out.begin(), out.end()};
}

IncidenceStructure build_heawood_incidence()
{
    return IncidenceStructure(7, {
                                     {7, 3, 1},
                                     {2, 4, 1},
                                     {2, 5, 3},
                                     {4, 3, 6},
                                     {5, 7, 4},
                                     {5, 6, 1},
                                     {7, 2, 6},
                                 });
}

FanoAxiomReport verify_fano_axioms(const IncidenceStructure& inc)
{
    FanoAxiomReport r;
    const int np = inc.point_count();
    const int nl = inc.line_count();
    r.seven_points_and_lines = np == 7 && nl == 7;

    r.three_points_per_line = true;
    for (const auto& pts : inc.lines()) {
        const std::set<int> distinct(pts.begin(), pts.end());
        if (pts.size() != 3 || distinct.size() != 3)
            r.three_points_per_line = false;
    }

    r.three_lines_per_point = true;
    for (int p = 1; p <= np; ++p) {
        int deg = 0;
        for (int j = 1; j <= nl; ++j)
            deg += inc.incident(p, j) ? 1 : 0;
        if (deg != 3)
            r.three_lines_per_point = false;
    }

    r.unique_line_per_point_pair = true;
    for (int a = 1; a <= np; ++a)
        for (int b = a + 1; b <= np; ++b) {
            int common = 0;
            for (int j = 1; j <= nl; ++j)
                common += (inc.incident(a, j) && inc.incident(b, j)) ? 1 : 0;
            if (common != 1)
                r.unique_line_per_point_pair = false;
        }

    r.unique_point_per_line_pair = true;
    for (int i = 1; i <= nl; ++i)
        for (int j = i + 1; j <= nl; ++j) {
            int common = 0;
            for (int p = 1; p <= np; ++p)
                common += (inc.incident(p, i) && inc.incident(p, j)) ? 1 : 0;
            if (common != 1)
                r.unique_point_per_line_pair = false;
        }
    return r;
}

int girth(const IncidenceStructure& inc)
{
    // Points are nodes 0..np-1, lines np..np+nl-1.
    const int np = inc.point_count();
    const int n = np + inc.line_count();
    std::vector<std::vector<int>> adj(n);
    for (const Flag& f : inc.flags()) {
        adj[f.point - 1].push_back(np + f.line - 1);
        adj[np + f.line - 1].push_back(f.point - 1);
    }

    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (parent[u] != v) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

} // namespace heawood
