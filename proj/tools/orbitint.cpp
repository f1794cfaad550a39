#include "orbitint/errors.hpp"
#include "orbitint/report.hpp"
#include "orbitint/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace orbitint;

namespace {

const std::map<std::string, std::string> kDescriptions{
    {"orbit", "enumerate the word tree of a point"},
    {"canonical", "canonical height along a periodic word"},
    {"system-height", "canonical height for the whole system"},
    {"gamma", "proximity set of an orbit to a point A"},
    {"census", "S-integral points in the orbit tree"},
    {"ratios", "log|a_n| / log|b_n| along a word"},
    {"bounds", "explicit count bounds against empirical counts"},
    {"verify", "run the property suites"},
};

int fail(int code, const std::string& kind, const std::string& message, const std::string& witness = {}) {
    nlohmann::json j = {{"error", kind}, {"message", message}, {"exitCode", code}};
    if (!witness.empty()) j["witness"] = witness;
    std::cerr << j.dump() << '\n';
    return code;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbitint: heights, orbits and integral points for systems of rational maps"};
    app.require_subcommand(1, 1);

    std::string config_path, out_dir = ".";
    RunOptions options;
    std::size_t depth = 0, scale = 1;
    unsigned precision = 0;

    for (const auto& name : kSubcommands) {
        auto* sub = app.add_subcommand(name, kDescriptions.at(name));
        auto* cfg = sub->add_option("--config", config_path, "experiment config (JSON)")->check(CLI::ExistingFile);
        if (name != "verify") cfg->required();
        sub->add_option("--depth", depth, "override the config depth");
        sub->add_option("--seed", options.seed, "random seed");
        sub->add_option("--workers", options.workers, "worker threads for tree enumeration")->check(CLI::Range(1u, 256u));
        sub->add_option("--out", out_dir, "report directory");
        if (name == "verify") {
            sub->add_option("--precision", precision, "interval precision in bits")->check(CLI::Range(8u, 4096u));
            sub->add_option("--scale", scale, "multiply the case counts")->check(CLI::Range(1u, 1000u));
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fail(2, "usage", e.what());
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    if (app.get_subcommands().front()->count("--depth")) options.depth = depth;

    try {
        std::string text = "{}";
        if (!config_path.empty()) {
            std::ifstream in(config_path, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        Report report;
        if (sub == "verify") {
            VerifyOptions v;
            v.seed = options.seed;
            v.scale = scale;
            if (precision) v.precision = precision;
            const auto results = run_verify(v);
            report.json = verify_json(results, v);
            report.csv = verify_table(results);
            report.status = all_passed(results) ? 0 : 1;
            std::cout << *report.csv;
        } else {
            report = run_subcommand(sub, parse_config(text), options);
        }
        fs::create_directories(out_dir);
        const std::string stem = sub + "-" + config_hash(text, options);
        write_file(fs::path(out_dir) / (stem + ".json"), report.json);
        if (report.csv && sub != "verify") write_file(fs::path(out_dir) / (stem + ".csv"), *report.csv);
        std::cout << (fs::path(out_dir) / (stem + ".json")).string() << '\n';
        return report.status == 0 ? 0 : 1;
    } catch (const ValidationError& e) {
        return fail(2, "validation", e.what(), e.witness());
    } catch (const FactorizationError& e) {
        return fail(2, "factorization", e.what());
    } catch (const WorkLimitError& e) {
        return fail(3, "work-limit", e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(2, "validation", e.what());
    } catch (const std::exception& e) {
        return fail(1, "internal", e.what());
    }
}
