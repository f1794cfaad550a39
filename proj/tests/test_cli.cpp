#include "orbitint/errors.hpp"
#include "orbitint/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace orbitint;
using nlohmann::json;

namespace {

Report run(const std::string& sub, const std::string& text, RunOptions o = {}) {
    return run_subcommand(sub, parse_config(text), o);
}

int exit_code(const std::string& args) {
    const std::string cmd = std::string(ORBITINT_BINARY) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string config_path(const char* name) { return std::string(ORBITINT_CONFIGS) + "/" + name; }

}  // namespace

TEST_CASE("config defaults and validation") {
    const auto c = parse_config(R"({"system": ["z^2"], "point": "2"})");
    CHECK(c.epsilon == Rational(1, 2));
    CHECK(c.depth == 6);
    CHECK(c.precision == 128);
    CHECK(c.limits.max_nodes == 1'000'000);
    CHECK(c.point_a.is_infinity());
    CHECK_THROWS_AS(parse_config(R"({"sytem": ["z^2"]})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"j({"system": ["(z^2-1)/(z-1)"]})j"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"system": ["z^2"], "epsilon": "3/2"})"), ValidationError);
    CHECK_THROWS_AS(parse_config("{not json"), ValidationError);
    const auto d = parse_config(R"({"system": [{"f": [0, 0, 1], "g": [1]}], "word": {"letters": [1], "mode": "finite"}})");
    CHECK(d.system.letter(1) == RatMap::parse("z^2"));
    CHECK_FALSE(d.word.is_periodic());
}

TEST_CASE("census report lists the integral hits") {
    const auto r = run("census", R"({"system": ["1/z^2"], "point": "2", "places": ["inf"], "depth": 4})");
    const json j = json::parse(r.json);
    CHECK(j["count"] == 2);
    CHECK(j["hits"][0]["value"] == "16");
    CHECK(j["hits"][1]["value"] == "65536");
}

TEST_CASE("gamma report is all In for squaring toward infinity") {
    const auto r = run("gamma", R"({"system": ["z^2"], "point": "2", "pointA": "inf", "depth": 5})");
    const json j = json::parse(r.json);
    REQUIRE(j["members"].size() == 6);
    for (const auto& m : j["members"]) CHECK(m["verdict"] == "in");
}

TEST_CASE("reports are byte-identical across worker counts") {
    const std::string cfg = R"({"system": ["(z^2+1)/z", "z^2-2", "1/z^2"], "point": "3", "depth": 4})";
    for (const char* sub : {"orbit", "census", "system-height"}) {
        RunOptions one, many;
        many.workers = 8;
        const auto a = run(sub, cfg, one), b = run(sub, cfg, many);
        CHECK(a.json == b.json);
        CHECK(a.csv == b.csv);
    }
}

TEST_CASE("config hash depends on content, depth and seed only") {
    const std::string a = R"({"system": ["z^2"], "point": "2"})";
    const std::string b = R"({ "point" : "2", "system" : ["z^2"] })";
    RunOptions o;
    CHECK(config_hash(a, o) == config_hash(b, o));
    CHECK(config_hash(a, o).size() == 16);
    RunOptions deeper;
    deeper.depth = 3;
    CHECK(config_hash(a, o) != config_hash(a, deeper));
    RunOptions workers;
    workers.workers = 4;
    CHECK(config_hash(a, o) == config_hash(a, workers));
}

TEST_CASE("floating output is locale independent and round-trips") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(std::stod(format_double(0.1)) == 0.1);
}

TEST_CASE("cli exit codes") {
    const std::string out = (std::filesystem::temp_directory_path() / "orbitint-cli-test").string();
    CHECK(exit_code("census --config " + config_path("census_inverse_square.json") + " --out " + out) == 0);
    CHECK(exit_code("orbit --config " + config_path("malformed_map.json") + " --out " + out) == 2);
    CHECK(exit_code("orbit --config " + config_path("orbit_monomials.json") + " --depth 40 --out " + out) == 3);
    CHECK(exit_code("nosuch") == 2);
    bool found = false;
    for (const auto& e : std::filesystem::directory_iterator(out)) {
        found = found || e.path().filename().string().rfind("census-", 0) == 0;
    }
    CHECK(found);
}

TEST_CASE("cli reports the witness of a malformed map") {
    const std::string err = (std::filesystem::temp_directory_path() / "orbitint-cli-err.json").string();
    const std::string cmd = std::string(ORBITINT_BINARY) + " orbit --config " + config_path("malformed_map.json") +
                            " --out /tmp > /dev/null 2> " + err;
    CHECK(std::system(cmd.c_str()) != 0);
    std::ifstream in(err);
    const json j = json::parse(in);
    CHECK(j["exitCode"] == 2);
    CHECK(j["witness"] == "z-1");
}
