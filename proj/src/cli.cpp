#include "heawood/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "heawood/charpoly.hpp"
#include "heawood/io.hpp"
#include "heawood/render.hpp"
#include "heawood/solver.hpp"
#include "heawood/verify.hpp"

namespace heawood::cli {

namespace {

struct Options {
    int digits = 60;
    int grid = 20000;
    std::string json_path;
    std::string svg_dir;
    std::string seed_tables;
    std::string out_path;
};

std::vector<int> stages_for(int digits)
{
    if (digits <= 30)
        return {digits};
    return {30, digits};
}

std::vector<ReferenceTable> tables_from(const Options& o)
{
    return load_reference_tables(o.seed_tables.empty() ? default_reference_tables_path()
                                                        : std::filesystem::path(o.seed_tables));
}

void write_svgs(const std::vector<EmbeddingCandidate>& es, const std::string& dir, std::ostream& err)
{
    std::filesystem::create_directories(dir);
    const IncidenceStructure inc = build_heawood_incidence();
    for (std::size_t i = 0; i < es.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "embedding_%02zu.svg", i + 1);
        write_file((std::filesystem::path(dir) / name).string(), render_svg(es[i], inc));
    }
    err << "wrote " << es.size() << " SVG files to " << dir << "\n";
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err)
{
    std::vector<EmbeddingCandidate> found;
    if (!o.seed_tables.empty()) {
        // Polish the reference tables instead of sweeping.
        for (const ReferenceTable& t : tables_from(o)) {
            EmbeddingCandidate c = candidate_from_table(t, Precision(o.digits));
            found.push_back(newton_polish(c, o.digits));
        }
        SolveConfig cfg;
        cfg.precision_stages = {o.digits};
        found = dedupe(std::move(found), cfg.effective_dedupe_tol());
    } else {
        SolveConfig cfg;
        cfg.grid_points = o.grid;
        cfg.precision_stages = stages_for(o.digits);
        const SolveReport rep = solve_all(cfg);
        err << "brackets=" << rep.brackets << " lost=" << rep.lost_brackets << " degenerate=" << rep.degenerate
            << " newton_failures=" << rep.newton_failures << " duplicates=" << rep.duplicates << "\n";
        found = rep.embeddings;
    }

    const std::string doc = candidates_to_json(found);
    const std::string summary =
        "found=" + std::to_string(found.size()) + " expected=" + std::to_string(kExpectedEmbeddings) + "\n";
    if (!o.json_path.empty()) {
        write_file(o.json_path, doc);
        out << summary;
    } else {
        out << doc;
        err << summary;
    }
    if (!o.svg_dir.empty())
        write_svgs(found, o.svg_dir, err);
    return found.size() == static_cast<std::size_t>(kExpectedEmbeddings) ? kExitOk : kExitMismatch;
}

int cmd_roots(const Options& o, std::ostream& out, std::ostream& err)
{
    const BigPoly& p = charpoly_xl4();
    std::vector<RootReport> roots;
    for (const IsolatingInterval& iv : isolate_real_roots(p))
        roots.push_back({iv, refine_root(p, iv, o.digits)});
    out << roots_to_json(roots, o.digits);
    err << "real_roots=" << roots.size() << " expected=" << kExpectedEmbeddings << "\n";
    return roots.size() == static_cast<std::size_t>(kExpectedEmbeddings) ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const std::vector<EmbeddingCandidate> es = candidates_from_json(read_file(o.json_path));
    const std::vector<ReferenceTable> tables = tables_from(o);
    const IncidenceStructure inc = build_heawood_incidence();
    std::vector<Certificate> certs;
    for (const EmbeddingCandidate& e : es)
        certs.push_back(certify(e, charpoly_xl4(), inc, tables));

    const std::string doc = certificates_to_json(certs);
    if (o.out_path.empty())
        out << doc;
    else
        write_file(o.out_path, doc);

    const auto passed = std::count_if(certs.begin(), certs.end(), [](const Certificate& c) { return c.passes(); });
    const auto matched =
        std::count_if(certs.begin(), certs.end(), [](const Certificate& c) { return c.matched_table.has_value(); });
    err << "passed=" << passed << "/" << certs.size() << " matched_tables=" << matched << "\n";
    return passed == static_cast<long>(certs.size()) ? kExitOk : kExitMismatch;
}

int cmd_render(const Options& o, std::ostream&, std::ostream& err)
{
    write_svgs(candidates_from_json(read_file(o.json_path)), o.svg_dir, err);
    return kExitOk;
}

int cmd_incidence(std::ostream& out)
{
    out << incidence_to_json(build_heawood_incidence());
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Unit-distance embeddings of the Heawood graph"};
    app.name("heawood");
    app.require_subcommand(1);
    Options o;

    auto digits_check = CLI::Range(10, 2000);

    CLI::App* solve = app.add_subcommand("solve", "Find all real solutions of the constraint system");
    solve->add_option("--grid", o.grid, "Theta grid points per branch vector")->check(CLI::Range(1000, 10000000));
    solve->add_option("--digits", o.digits, "Final working precision in decimal digits")->check(digits_check);
    solve->add_option("--json", o.json_path, "Write embeddings to this file instead of stdout");
    solve->add_option("--svg", o.svg_dir, "Also write one SVG per embedding into this directory");
    solve->add_option("--seed-tables", o.seed_tables, "Polish these reference tables instead of sweeping");

    CLI::App* roots = app.add_subcommand("roots", "Isolate and refine the real roots of the x_l4 polynomial");
    roots->add_option("--digits", o.digits, "Digits of each refined root")->check(digits_check);

    CLI::App* verify = app.add_subcommand("verify", "Certify embeddings read from a JSON file");
    verify->add_option("--json", o.json_path, "Embeddings JSON")->required();
    verify->add_option("--seed-tables", o.seed_tables, "Reference tables to match against");
    verify->add_option("--out", o.out_path, "Write certificates here instead of stdout");

    CLI::App* render = app.add_subcommand("render", "Write SVG drawings of embeddings");
    render->add_option("--json", o.json_path, "Embeddings JSON")->required();
    render->add_option("--svg", o.svg_dir, "Output directory")->required();

    CLI::App* incidence = app.add_subcommand("incidence", "Print the Fano plane lines and flags");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve)
            return cmd_solve(o, out, err);
        if (*roots)
            return cmd_roots(o, out, err);
        if (*verify)
            return cmd_verify(o, out, err);
        if (*render)
            return cmd_render(o, out, err);
        if (*incidence)
            return cmd_incidence(out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace heawood::cli
