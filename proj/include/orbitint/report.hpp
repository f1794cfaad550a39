#pragma once

#include "orbitint/bounds.hpp"
#include "orbitint/limits.hpp"
#include "orbitint/places.hpp"
#include "orbitint/proj1.hpp"
#include "orbitint/ratmap.hpp"
#include "orbitint/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbitint {

struct ExperimentConfig {
    MapSystem system{std::vector<RatMap>{RatMap::parse("z^2")}};
    std::optional<ProjPoint> point;
    ProjPoint point_a = ProjPoint::infinity();
    PlaceSet places = PlaceSet::parse({"inf"});
    Rational epsilon = Rational(1, 2);
    Word word = Word::periodic({1});
    std::size_t depth = 6;
    WorkLimits limits;
    BoundParameters bounds;
    mpfr_prec_t precision = kDefaultPrecision;
    std::size_t period_bound = 2;
    bool dedupe = true;
    std::size_t average_depth = 2;
    /// Depth limit for canonical heights along words.
    std::size_t height_depth = 24;
};

/// Parses and validates a JSON config; throws ValidationError.
ExperimentConfig parse_config(const std::string& json_text);

struct RunOptions {
    std::optional<std::size_t> depth;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

/// 16 hex digits of FNV-1a over the canonical config dump plus the depth and seed overrides.
std::string config_hash(const std::string& json_text, const RunOptions& options);

struct Report {
    std::string json;
    std::optional<std::string> csv;
    /// Nonzero when the computation ran but a checked property failed (verify, bounds).
    int status = 0;
};

extern const std::vector<std::string> kSubcommands;

/// Runs one subcommand. Throws ValidationError / WorkLimitError.
Report run_subcommand(const std::string& subcommand, const ExperimentConfig& config, const RunOptions& options);

/// Shortest round-trip decimal form, locale independent.
std::string format_double(double x);

}  // namespace orbitint
