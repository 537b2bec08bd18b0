#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "dsep/net_format.hpp"
#include "helpers.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(DSEP_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("minsep on a chain") {
    const auto file = write_file(
        "dsep_cli_chain.json",
        R"({"format":"dsep-net/1","nodes":[{"id":"x"},{"id":"z"},{"id":"y"}],"arcs":[["x","z"],["z","y"]]})");
    const RunResult r = run("minsep -g " + file.string() + " -x x -y y");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["separator"] == json::array({"z"}));
    CHECK(doc["size"] == 1);
}

TEST_CASE("test subcommand on a collider") {
    const auto file = write_file(
        "dsep_cli_collider.json",
        R"({"format":"dsep-net/1","nodes":[{"id":"a"},{"id":"b"},{"id":"c"}],"arcs":[["a","b"],["c","b"]]})");
    RunResult r = run("test -g " + file.string() + " -x a -y c -z b");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["d_separated"] == false);

    r = run("test -g " + file.string() + " -x a -y c --method both");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["d_separated"] == true);
}

TEST_CASE("not separable exits with code 2") {
    const auto file = write_file(
        "dsep_cli_adjacent.json",
        R"({"format":"dsep-net/1","nodes":[{"id":"x"},{"id":"y"}],"arcs":[["x","y"]]})");
    const RunResult r = run("minsep -g " + file.string() + " -x x -y y");
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.output)["not_separable"] == true);
}

TEST_CASE("parse and precondition errors exit with code 1") {
    const auto bad = write_file("dsep_cli_bad.json", "{ not json");
    CHECK(run("minsep -g " + bad.string() + " -x x -y y").exit_code == 1);
    CHECK(run("minsep -g /nonexistent.json -x x -y y").exit_code == 1);

    const auto ok = write_file(
        "dsep_cli_ok.json",
        R"({"format":"dsep-net/1","nodes":[{"id":"x"},{"id":"y"}],"arcs":[]})");
    CHECK(run("minsep -g " + ok.string() + " -x x -y zz").exit_code == 1);
    CHECK(run("minsep -g " + ok.string() + " -x x -y x").exit_code == 1);
}

TEST_CASE("random output feeds back into the other subcommands") {
    const RunResult generated = run("random -n 8 -p 0.3 --seed 5 --cards 2,4");
    REQUIRE(generated.exit_code == 0);
    const dsep::Dag g = dsep::parse_network(generated.output);
    CHECK(g.node_count() == 8);

    const auto file = write_file("dsep_cli_random.json", generated.output);
    const RunResult oracle =
        run("oracle -g " + file.string() + " -x x1 -y x8 --budget 16");
    if (oracle.exit_code == 0) {
        const json doc = json::parse(oracle.output);
        CHECK(doc.contains("minimum_size"));
        CHECK(doc.contains("all_minimum_sets"));
    } else {
        CHECK(oracle.exit_code == 2);  // adjacent pair in this draw
    }

    // same seed, same document
    const RunResult again = run("random -n 8 -p 0.3 --seed 5 --cards 2,4");
    CHECK(again.output == generated.output);
}

TEST_CASE("weighted minsep flag") {
    const auto file = write_file(
        "dsep_cli_weighted.json",
        R"({"format":"dsep-net/1",
            "nodes":[{"id":"x"},{"id":"b"},{"id":"c"},{"id":"m","card":8},{"id":"y"}],
            "arcs":[["x","b"],["b","m"],["x","c"],["c","m"],["m","y"]]})");
    const RunResult plain = run("minsep -g " + file.string() + " -x x -y y");
    CHECK(json::parse(plain.output)["separator"] == json::array({"m"}));
    const RunResult weighted = run("minsep -g " + file.string() + " -x x -y y --weighted");
    const json doc = json::parse(weighted.output);
    CHECK(doc["separator"].size() == 2);
    CHECK(doc["weight"] == 2.0);
}

TEST_CASE("fixed separator nodes via --fixed") {
    const auto file = write_file(
        "dsep_cli_fixed.json",
        R"({"format":"dsep-net/1",
            "nodes":[{"id":"x"},{"id":"z"},{"id":"w"},{"id":"y"}],
            "arcs":[["x","z"],["z","y"],["x","w"],["w","y"]]})");
    const RunResult r = run("minsep -g " + file.string() + " -x x -y y --fixed z");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["separator"] == json::array({"w"}));
}
