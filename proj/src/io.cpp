#include "heawood/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace heawood {

namespace {

using nlohmann::json;

json to_json_value(const EmbeddingCandidate& c)
{
    const int d = c.precision.digits();
    json vertices = json::object();
    for (const VertexLabel v : all_vertices())
        vertices[v.name()] = json::array({c[v].x().to_string(d), c[v].y().to_string(d)});

    json branch = json::array();
    for (std::size_t k = 0; k < 6; ++k)
        branch.push_back(c.branch[k] == BranchChoice::Right ? 1 : 0);

    return json{{"theta", c.theta.to_string(d)},
                {"branch", branch},
                {"precision", d},
                {"vertices", vertices},
                {"closure", c.closure.to_string(d)}};
}

EmbeddingCandidate from_json_value(const json& j)
{
    EmbeddingCandidate c;
    const Precision p(j.at("precision").get<int>());
    c.precision = p;
    c.theta = Real::parse(j.at("theta").get<std::string>(), p);
    c.closure = Real::parse(j.at("closure").get<std::string>(), p);

    const json& bits = j.at("branch");
    if (!bits.is_array() || bits.size() != 6)
        throw std::invalid_argument("branch must be an array of 6 bits");
    for (std::size_t k = 0; k < 6; ++k) {
        const int b = bits.at(k).get<int>();
        if (b != 0 && b != 1)
            throw std::invalid_argument("branch entries must be 0 or 1");
        c.branch[k] = b ? BranchChoice::Right : BranchChoice::Left;
    }

    const json& vs = j.at("vertices");
    for (const VertexLabel v : all_vertices()) {
        const json& xy = vs.at(v.name());
        c.coords[v] = Point2<Real>(Real::parse(xy.at(0).get<std::string>(), p),
                                   Real::parse(xy.at(1).get<std::string>(), p));
    }
    return c;
}

std::string rational_string(const mpq_class& q) { return q.get_str(10); }

} // namespace

std::string candidate_to_json(const EmbeddingCandidate& c) { return to_json_value(c).dump(2); }

EmbeddingCandidate candidate_from_json(const std::string& text) { return from_json_value(json::parse(text)); }

std::string candidates_to_json(const std::vector<EmbeddingCandidate>& cs)
{
    json arr = json::array();
    for (const EmbeddingCandidate& c : cs)
        arr.push_back(to_json_value(c));
    return arr.dump(2) + "\n";
}

std::vector<EmbeddingCandidate> candidates_from_json(const std::string& text)
{
    const json doc = json::parse(text);
    if (!doc.is_array())
        throw std::invalid_argument("expected a JSON array of embeddings");
    std::vector<EmbeddingCandidate> out;
    for (const json& j : doc)
        out.push_back(from_json_value(j));
    return out;
}

std::string certificates_to_json(const std::vector<Certificate>& certs)
{
    json arr = json::array();
    for (const Certificate& c : certs) {
        const int d = std::max(c.precision, 6);
        json j{{"pass", c.passes()},
               {"max_flag_residual", c.max_flag_residual.to_string(6)},
               {"worst_flag", json::array({point(c.worst_flag.point).name(), line(c.worst_flag.line).name()})},
               {"collinearity_residual", c.collinearity_residual.to_string(6)},
               {"charpoly_bracket_ok", c.charpoly_bracket_ok},
               {"regularity_margin", c.regularity_margin.to_string(d)},
               {"precision", c.precision}};
        j["matched_table"] = c.matched_table ? json(*c.matched_table) : json(nullptr);
        if (c.nearest_table)
            j["nearest_table"] = json{{"index", c.nearest_table->index},
                                      {"distance", c.nearest_table->distance.to_string(6)}};
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string incidence_to_json(const IncidenceStructure& inc)
{
    json lines = json::object();
    for (int j = 1; j <= inc.line_count(); ++j) {
        json pts = json::array();
        for (int p : inc.points_on(j))
            pts.push_back(point(p).name());
        lines[line(j).name()] = pts;
    }
    json flags = json::array();
    for (const Flag& f : inc.flags())
        flags.push_back(json::array({f.point_label().name(), f.line_label().name()}));
    return json{{"lines", lines}, {"flags", flags}}.dump(2) + "\n";
}

std::string roots_to_json(const std::vector<RootReport>& roots, int digits)
{
    json arr = json::array();
    for (const RootReport& r : roots)
        arr.push_back(json{{"lo", rational_string(r.interval.lo)},
                           {"hi", rational_string(r.interval.hi)},
                           {"root", r.root.to_string(digits)}});
    return arr.dump(2) + "\n";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace heawood
