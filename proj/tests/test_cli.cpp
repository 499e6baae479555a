#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "heawood/cli.hpp"
#include "heawood/io.hpp"
#include "heawood/verify.hpp"

using namespace heawood;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("heawood_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int count(const std::string& hay, const std::string& needle)
{
    int n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("incidence")
{
    const Result r = run({"incidence"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("flags").size() == 21);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"solve", "--digits", "3"}).code == cli::kExitUsage);
    CHECK(run({"verify"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--json", "/nonexistent/file.json"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("roots")
{
    const Result r = run({"roots", "--digits", "20"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 11);
    CHECK(j.at(0).at("root").get<std::string>().substr(0, 12) == "-7.301241649");
}

TEST_CASE("solve, verify, render")
{
    const fs::path dir = scratch("pipeline");
    const std::string json_path = (dir / "embeddings.json").string();

    const Result s = run({"solve", "--digits", "40", "--json", json_path, "--svg", (dir / "svg").string()});
    CHECK(s.code == 0);
    CHECK(s.out == "found=11 expected=11\n");
    CHECK(candidates_from_json(read_file(json_path)).size() == 11);

    // Same input, same bytes.
    const std::string first = read_file(json_path);
    CHECK(run({"solve", "--digits", "40", "--json", json_path}).code == 0);
    CHECK(read_file(json_path) == first);

    const Result v = run({"verify", "--json", json_path});
    CHECK(v.code == 0);
    CHECK(nlohmann::json::parse(v.out).size() == 11);
    CHECK(v.err.find("passed=11/11") != std::string::npos);

    const fs::path svg_dir = dir / "render";
    CHECK(run({"render", "--json", json_path, "--svg", svg_dir.string()}).code == 0);
    int files = 0;
    for (const auto& entry : fs::directory_iterator(svg_dir)) {
        ++files;
        const std::string svg = read_file(entry.path().string());
        CHECK(count(svg, "<line ") == 21);
        CHECK(count(svg, "<circle ") == 14);
    }
    CHECK(files == 11);
    CHECK(read_file((svg_dir / "embedding_01.svg").string()) ==
          read_file((dir / "svg" / "embedding_01.svg").string()));
    fs::remove_all(dir);
}

TEST_CASE("solve from the reference tables")
{
    const Result r = run({"solve", "--digits", "30", "--seed-tables", default_reference_tables_path().string()});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).size() == 11);
}
