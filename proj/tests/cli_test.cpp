#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "ultragraph/gh.hpp"
#include "ultragraph/io.hpp"
#include "ultragraph/serialize.hpp"

using namespace ultragraph;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "ultragraph");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ULTRAGRAPH_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "ultragraph_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("dist") {
    auto r = run({"dist", data("path3.graph"), "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "a,b,c\n0,2,3\n2,0,3\n3,3,0\n");
    r = run({"dist", data("single.graph"), "--format", "csv"});
    CHECK(r.out == "a\n0\n");
    r = run({"dist", data("path3.graph")});
    CHECK(r.out == "  a b c\na 0 2 3\nb 2 0 3\nc 3 3 0\n");
    r = run({"dist", data("disconnected.graph")});
    CHECK(r.code == 2);
    CHECK(r.err.find("a and c") != std::string::npos);
    r = run({"dist", data("square.graph"), "--oracle", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1/2") != std::string::npos);
    CHECK(run({"dist", data("square.graph"), "--oracle", "--cap-paths", "2"}).code == 2);
}

TEST_CASE("dist JSON round-trips") {
    const auto r = run({"dist", data("square.graph"), "--format", "json"});
    REQUIRE(r.code == 0);
    const auto dm = distance_matrix_from_json(nlohmann::json::parse(r.out));
    std::ifstream in(data("square.graph"));
    const std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(dm == distance_matrix(parse_graph(text)));
}

TEST_CASE("check") {
    auto r = run({"check", data("path3.graph"), "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["gh"] == true);
    CHECK(j["tree_equivalences"]["degree_sum_equality"] == true);
    CHECK(j["distance_set"] == nlohmann::json{"0", "2", "3"});
    r = run({"check", data("path3_repeated.graph"), "--format", "json"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["gh"] == false);
    r = run({"check", data("zero_edge.graph"), "--format", "json"});
    CHECK(r.code == 1);
    j = nlohmann::json::parse(r.out);
    CHECK(j["classification"] == "pseudoultrametric-only");
    CHECK_FALSE(j.contains("gh"));
    r = run({"check", data("triangle.graph")});
    CHECK(r.code == 0);
    CHECK(r.out.find("gh: true") != std::string::npos);
}

TEST_CASE("label output is a GH-generating graph file") {
    auto r = run({"label", data("triangle.graph")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("v a 1\nv b 2\nv c 3\n") == 0);
    const auto out = scratch("labeled.graph");
    std::ofstream(out) << r.out;
    CHECK(run({"check", out.string()}).code == 0);

    r = run({"label", data("path3_repeated.graph"), "--root", "a"});
    CHECK(r.out.find("v a 1\nv b 2\nv c 3\n") == 0);
    r = run({"label", data("path3.graph"), "--root", "c"});
    CHECK(r.out.find("v a 3\nv b 2\nv c 1\n") == 0);
    r = run({"label", data("single.graph")});
    CHECK(r.out == "v a 1\n");
    CHECK(run({"label", data("path3.graph"), "--root", "zz"}).code == 2);
    CHECK(run({"label", data("disconnected.graph")}).code == 2);
}

TEST_CASE("quotient") {
    auto r = run({"quotient", data("path3_zero_pair.graph"), "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["representatives"] == nlohmann::json{"a", "c"});
    CHECK(j["distance_set"] == nlohmann::json{"0", "1"});
    r = run({"quotient", data("path3.graph")});
    CHECK(r.out.find("already ultrametric") != std::string::npos);
    r = run({"quotient", data("zero_edge.graph"), "--format", "json"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["representatives"] == nlohmann::json{"u"});
    CHECK(j["distance_set"] == nlohmann::json{"0"});
}

TEST_CASE("realizable") {
    auto r = run({"realizable", data("triangle_123.wgraph"), "--oracle"});
    CHECK(r.code == 1);
    CHECK(r.out.find("witness edge: c a weight 3 minimax 2") != std::string::npos);
    r = run({"realizable", data("triangle_133.wgraph"), "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "realizable: yes\n");
    CHECK(run({"realizable", data("tree.wgraph")}).code == 0);
    r = run({"realizable", data("triangle_123.wgraph"), "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["witness"]["minimax"] == "2");
    CHECK(run({"realizable", data("path3.graph")}).code == 2);
}

TEST_CASE("canon and isometric") {
    auto r = run({"canon", data("two_points.graph")});
    CHECK(r.code == 0);
    CHECK(r.out == "(5··)\n");
    r = run({"canon", data("path3.graph"), data("path4.graph")});
    CHECK(r.out == "(3(2··)·)\n(4(3(2··)·)·)\n");
    r = run({"canon", data("zero_edge.graph")});
    CHECK(r.code == 2);
    CHECK(r.err.find("quotient") != std::string::npos);

    r = run({"isometric", data("path4.graph"), data("star4.graph")});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    r = run({"isometric", data("path3.graph"), data("path3_repeated.graph")});
    CHECK(r.code == 1);
    CHECK(r.out == "false\n");
    CHECK(run({"isometric", data("path3.graph")}).code == 2);
}

TEST_CASE("explore") {
    auto r = run({"explore", "--max-n", "3", "--labels", "1,2,3"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["counterexample_count"] == 0);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"explore", "--max-n", "2"}).code == 0);
    const auto a = run({"explore", "--max-n", "4", "--labels", "1,2,3,4", "--jobs", "1"});
    const auto b = run({"explore", "--max-n", "4", "--labels", "1,2,3,4", "--jobs", "8"});
    CHECK(a.out == b.out);
    CHECK(run({"explore", "--labels", "1,x"}).code == 2);
    CHECK(run({"explore", "--labels", "0,1"}).code == 2);
    CHECK(run({"explore", "--max-n", "9"}).code == 2);
    CHECK(run({"explore", "--jobs", "0"}).code == 2);
}

TEST_CASE("input errors exit 2 without throwing") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"dist"}).code == 2);
    CHECK(run({"dist", data("missing.graph")}).code == 2);
    CHECK(run({"dist", data("undeclared.graph")}).code == 2);
    CHECK(run({"dist", data("path3.graph"), "--format", "xml"}).code == 2);
    CHECK(run({"check", data("tree.wgraph")}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
