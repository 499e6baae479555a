#include "heawood/verify.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef HEAWOOD_DATA_DIR
#define HEAWOOD_DATA_DIR "data"
#endif

namespace heawood {

std::vector<ReferenceTable> parse_reference_tables(const std::string& json_text)
{
    const nlohmann::json doc = nlohmann::json::parse(json_text);
    std::vector<ReferenceTable> out;
    for (const auto& t : doc.at("tables")) {
        ReferenceTable table;
        table.index = t.at("index").get<int>();
        for (const auto& [name, xy] : t.at("vertices").items()) {
            const std::optional<VertexLabel> v = VertexLabel::parse(name);
            if (!v)
                throw std::invalid_argument("unknown vertex label in reference table: " + name);
            table.vertices[*v] = {xy.at(0).get<std::string>(), xy.at(1).get<std::string>()};
        }
        out.push_back(std::move(table));
    }
    return out;
}

std::vector<ReferenceTable> load_reference_tables(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open reference tables: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_reference_tables(ss.str());
}

std::filesystem::path default_reference_tables_path()
{
    return std::filesystem::path(HEAWOOD_DATA_DIR) / "theorem_tables.json";
}

EmbeddingCandidate candidate_from_table(const ReferenceTable& table, Precision p)
{
    Placement<Real> pl = fixed_placement<Real>();
    for (const auto& [v, xy] : table.vertices)
        pl[v] = Point2<Real>(Real::parse(xy[0], p), Real::parse(xy[1], p));
    return candidate_from_placement(std::move(pl), p);
}

std::vector<FlagResidual> flag_residuals(const EmbeddingCandidate& e, const IncidenceStructure& inc)
{
    std::vector<FlagResidual> out;
    for (const Flag& f : inc.flags())
        out.push_back({f, abs((e[f.point_label()] - e[f.line_label()]).squaredNorm() - 1)});
    return out;
}

Real collinearity_residual(const EmbeddingCandidate& e)
{
    const Point2<Real>& l5 = e[line(5)];
    return abs(cross<Real>(e[line(4)] - l5, e[point(4)] - l5));
}

Real regularity_check(const EmbeddingCandidate& e, const IncidenceStructure& inc)
{
    std::optional<Real> best;
    for (const Flag& f : inc.flags()) {
        const VertexLabel a = f.point_label();
        const VertexLabel b = f.line_label();
        for (const VertexLabel v : all_vertices()) {
            if (v == a || v == b)
                continue;
            const Real d = point_segment_distance<Real>(e[v], e[a], e[b]);
            if (!best || d < *best)
                best = d;
        }
    }
    return best.value_or(Real(0));
}

Real table_distance(const EmbeddingCandidate& e, const ReferenceTable& table)
{
    Real worst(0);
    for (const auto& [v, xy] : table.vertices) {
        const Precision p = e.precision;
        worst = max(worst, abs(e[v].x() - Real::parse(xy[0], p)));
        worst = max(worst, abs(e[v].y() - Real::parse(xy[1], p)));
    }
    return worst;
}

bool charpoly_brackets(const BigPoly& p, const Real& x, const mpq_class& width)
{
    const mpq_class centre = to_rational(x);
    mpq_class half = width / 2;
    half.canonicalize();
    const int lo = p.sign_at(centre - half);
    const int hi = p.sign_at(centre + half);
    return lo * hi < 0;
}

bool Certificate::passes() const
{
    const Real bound = pow10(4 - precision, Precision(std::max(precision, 20)));
    return max_flag_residual < bound && collinearity_residual < bound && charpoly_bracket_ok &&
           regularity_margin > Real(0);
}

Certificate certify(const EmbeddingCandidate& e, const BigPoly& p, const IncidenceStructure& inc,
                    const std::vector<ReferenceTable>& tables)
{
    Certificate c;
    c.precision = e.precision.digits();

    c.max_flag_residual = Real(-1);
    for (const FlagResidual& r : flag_residuals(e, inc))
        if (r.value > c.max_flag_residual) {
            c.max_flag_residual = r.value;
            c.worst_flag = r.flag;
        }

    c.collinearity_residual = collinearity_residual(e);
    c.charpoly_bracket_ok = charpoly_brackets(p, e[line(4)].x(), mpq_class(1, mpz_class("100000000000000000000")));
    c.regularity_margin = regularity_check(e, inc);

    for (const ReferenceTable& t : tables) {
        const Real d = table_distance(e, t);
        if (!c.nearest_table || d < c.nearest_table->distance)
            c.nearest_table = TableMatch{t.index, d};
    }
    if (c.nearest_table && c.nearest_table->distance <= Real(kTableMatchTolerance))
        c.matched_table = c.nearest_table->index;
    return c;
}

EmbeddingCandidate mirror_across_y1(const EmbeddingCandidate& e)
{
    auto image = [](VertexLabel v) {
        if (v.kind == VertexKind::Point) {
            switch (v.index) {
            case 5: return point(2);
            case 2: return point(5);
            case 4: return point(6);
            case 6: return point(4);
            default: return v;
            }
        }
        switch (v.index) {
        case 5: return line(7);
        case 7: return line(5);
        case 2: return line(6);
        case 6: return line(2);
        default: return v;
        }
    };

    Placement<Real> pl;
    for (const VertexLabel v : all_vertices()) {
        const Point2<Real>& q = e[v];
        pl[image(v)] = Point2<Real>(q.x(), 2 - q.y());
    }
    return candidate_from_placement(std::move(pl), e.precision);
}

} // namespace heawood
