#include "orbitint/report.hpp"

#include "orbitint/errors.hpp"
#include "orbitint/heights.hpp"
#include "orbitint/integrality.hpp"
#include "orbitint/orbits.hpp"
#include "orbitint/verify.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace orbitint {

using nlohmann::json;

const std::vector<std::string> kSubcommands{"orbit", "canonical", "system-height", "gamma",
                                            "census", "ratios",    "bounds",        "verify"};

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

// ---- config parsing ----

std::string scalar_text(const json& j, const std::string& what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ValidationError(what + " must be a string or an integer");
}

Rational rational_field(const json& j, const std::string& what) { return parse_rational(scalar_text(j, what)); }

std::size_t size_field(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ValidationError(what + " must be a non-negative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

RatMap parse_map(const json& j) {
    if (j.is_string()) return RatMap::parse(j.get<std::string>());
    if (!j.is_object() || !j.contains("f") || !j.contains("g")) {
        throw ValidationError("a map is a display string or {\"f\": [...], \"g\": [...]}");
    }
    for (const auto& [key, _] : j.items()) {
        if (key != "f" && key != "g") throw ValidationError("unknown map field '" + key + "'");
    }
    auto coeffs = [](const json& arr, const char* name) {
        if (!arr.is_array()) throw ValidationError(std::string("map field ") + name + " must be an array");
        std::vector<Rational> out;
        for (const auto& a : arr) out.push_back(rational_field(a, std::string("coefficient of ") + name));
        return out;
    };
    return RatMap::make(coeffs(j["f"], "f"), coeffs(j["g"], "g"));
}

Word parse_word(const json& j) {
    std::vector<int> letters;
    Word::Mode mode = Word::Mode::Periodic;
    const json* arr = &j;
    if (j.is_object()) {
        for (const auto& [key, _] : j.items()) {
            if (key != "letters" && key != "mode") throw ValidationError("unknown word field '" + key + "'");
        }
        if (!j.contains("letters")) throw ValidationError("word needs 'letters'");
        arr = &j["letters"];
        if (j.contains("mode")) {
            const std::string m = j["mode"].get<std::string>();
            if (m == "finite") {
                mode = Word::Mode::Finite;
            } else if (m != "periodic") {
                throw ValidationError("word mode must be 'periodic' or 'finite'");
            }
        }
    }
    if (!arr->is_array()) throw ValidationError("word letters must be an array");
    for (const auto& a : *arr) {
        if (!a.is_number_integer()) throw ValidationError("word letters must be integers");
        letters.push_back(a.get<int>());
    }
    return Word(std::move(letters), mode);
}

BoundParameters parse_bounds(const json& j) {
    BoundParameters b;
    for (const auto& [key, value] : j.items()) {
        if (key == "r1") {
            b.roth_r1 = rational_field(value, key);
        } else if (key == "r2") {
            b.roth_r2 = rational_field(value, key);
        } else if (key == "mu") {
            b.roth_mu = rational_field(value, key);
        } else if (key == "gamma") {
            b.gamma = rational_field(value, key);
        } else if (key == "c") {
            if (!value.is_array()) throw ValidationError("boundParameters.c must be an array of 11 values");
            b.c.clear();
            for (const auto& a : value) b.c.push_back(rational_field(a, "c"));
        } else {
            throw ValidationError("unknown boundParameters field '" + key + "'");
        }
    }
    b.validate();
    return b;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
}

// ---- report helpers ----

json interval_json(const Interval& iv) {
    auto num = [](double x) -> json {
        if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
        return x;
    };
    return {{"lo", num(iv.lo())}, {"hi", num(iv.hi())}};
}

json point_json(const ProjPoint& p) {
    return {{"x", to_string(p.x())}, {"y", to_string(p.y())}, {"value", p.to_string()}};
}

json estimate_json(const HeightEstimate& e) {
    json j = interval_json(e.value);
    j["depth"] = e.depth;
    j["certified"] = e.certified;
    j["partial"] = e.partial;
    j["degreeProduct"] = to_string(e.degree_product);
    return j;
}

json system_json(const MapSystem& s) {
    json arr = json::array();
    for (const auto& phi : s.maps()) arr.push_back(phi.to_string());
    return arr;
}

json word_json(const std::vector<int>& w) { return w; }

json word_json(const Word& w) {
    return {{"letters", w.letters()}, {"mode", w.is_periodic() ? "periodic" : "finite"}};
}

json params_json(const BoundParameters& b) {
    json c = json::array();
    for (const auto& x : b.c) c.push_back(to_string(x));
    return {{"r1", to_string(b.roth_r1)},
            {"r2", to_string(b.roth_r2)},
            {"mu", to_string(b.roth_mu)},
            {"c", c},
            {"gamma", to_string(b.gamma)}};
}

std::string word_csv(const std::vector<int>& w) {
    std::string s = "\"[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + "]\"";
}

json header(const std::string& sub, const ExperimentConfig& c, std::size_t depth) {
    return {{"subcommand", sub},
            {"system", system_json(c.system)},
            {"depth", depth},
            {"precisionBits", static_cast<long>(c.precision)},
            {"numbers", "binary64, shortest round-trip; interval lo rounded down, hi rounded up"}};
}

const ProjPoint& need_point(const ExperimentConfig& c) {
    if (!c.point) throw ValidationError("this subcommand needs 'point'");
    return *c.point;
}

HeightOptions height_options(const ExperimentConfig& c) {
    HeightOptions h;
    h.max_depth = c.height_depth;
    h.max_bits = c.limits.max_bits;
    h.precision = c.precision;
    return h;
}

// Deepest n <= depth whose word tree fits the node cap.
std::size_t fitting_depth(std::size_t k, std::size_t depth, const WorkLimits& limits) {
    while (depth > 0 && tree_size(k, depth) > limits.max_nodes) --depth;
    return depth;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- subcommands ----

Report run_orbit(const ExperimentConfig& c, std::size_t depth, const RunOptions& o) {
    const auto records = enumerate_tree(c.system, need_point(c), depth, c.dedupe, c.limits, o.workers);
    json j = header("orbit", c, depth);
    j["point"] = point_json(need_point(c));
    j["dedupe"] = c.dedupe;
    j["count"] = records.size();
    json arr = json::array();
    std::ostringstream csv;
    csv << "word,n,x,y,height_nats\n";
    for (const auto& r : records) {
        const double h = r.height.to_double();
        arr.push_back({{"word", word_json(r.word)},
                       {"n", r.depth},
                       {"x", to_string(r.point.x())},
                       {"y", to_string(r.point.y())},
                       {"height_nats", h}});
        csv << word_csv(r.word) << ',' << r.depth << ',' << r.point.x() << ',' << r.point.y() << ','
            << format_double(h) << '\n';
    }
    j["records"] = std::move(arr);
    return {dump(j), csv.str()};
}

Report run_canonical(const ExperimentConfig& c, std::size_t depth) {
    HeightOptions h = height_options(c);
    h.max_depth = depth;
    const auto e = canonical_height_word(c.system, c.word, need_point(c), h);
    json j = estimate_json(e);
    j["subcommand"] = "canonical";
    j["system"] = system_json(c.system);
    j["word"] = word_json(c.word);
    j["point"] = point_json(need_point(c));
    return {dump(j), std::nullopt};
}

Report run_system_height(const ExperimentConfig& c, std::size_t depth, const RunOptions& o) {
    SystemHeightOptions s;
    s.limits = c.limits;
    s.workers = o.workers;
    s.precision = c.precision;
    const auto e = canonical_height_system(c.system, need_point(c), depth, s);
    json j = estimate_json(e);
    j["subcommand"] = "system-height";
    j["system"] = system_json(c.system);
    j["point"] = point_json(need_point(c));
    j["iterate"] = interval_json(e.approximant);
    return {dump(j), std::nullopt};
}

json gamma_json(const GammaRecord& g) {
    json members = json::array();
    for (const auto& m : g.members) {
        members.push_back({{"n", m.n},
                           {"point", m.point.to_string()},
                           {"proximity", interval_json(m.proximity)},
                           {"threshold", interval_json(m.threshold)},
                           {"verdict", to_string(m.verdict)}});
    }
    return {{"word", word_json(g.word)},
            {"pointA", point_json(g.a)},
            {"point", point_json(g.p)},
            {"places", g.s.names()},
            {"epsilon", to_string(g.epsilon)},
            {"canonicalHeight", estimate_json(g.hhat)},
            {"degenerate", g.degenerate},
            {"members", members},
            {"in", g.count(GammaVerdict::In)},
            {"out", g.count(GammaVerdict::Out)},
            {"ambiguous", g.count(GammaVerdict::Ambiguous)}};
}

GammaRecord compute_gamma(const ExperimentConfig& c, std::size_t depth) {
    GammaOptions g;
    g.height = height_options(c);
    g.limits = c.limits;
    return gamma_set(c.system, c.word, c.places, c.point_a, need_point(c), c.epsilon, depth, g);
}

Report run_gamma(const ExperimentConfig& c, std::size_t depth) {
    json j = header("gamma", c, depth);
    j.update(gamma_json(compute_gamma(c, depth)));
    return {dump(j), std::nullopt};
}

Report run_census(const ExperimentConfig& c, std::size_t depth, const RunOptions& o) {
    const auto r = s_integral_census(c.system, need_point(c), c.places, depth, c.limits, o.workers);
    json j = header("census", c, depth);
    j["point"] = point_json(need_point(c));
    j["places"] = c.places.names();
    json hits = json::array();
    for (const auto& h : r.hits) {
        hits.push_back({{"value", h.point.to_string()}, {"word", word_json(h.word)}, {"n", h.depth}});
    }
    j["hits"] = hits;
    j["count"] = r.count;
    j["pointsExamined"] = r.points_examined;
    return {dump(j), std::nullopt};
}

Report run_ratios(const ExperimentConfig& c, std::size_t depth) {
    const ProjPoint& p = need_point(c);
    if (p.is_infinity()) throw ValidationError("ratios need an affine point");
    const auto terms = ratio_series(c.system, c.word, *p.affine(), depth, c.limits, c.precision);
    std::ostringstream csv;
    csv << "n,a_bits,b_bits,ratio,verdict\n";
    json arr = json::array();
    for (const auto& t : terms) {
        const std::string ratio_text = t.ratio ? format_double(t.ratio->mid()) : "";
        csv << t.n << ',' << bit_length(t.a) << ',' << bit_length(t.b) << ',' << ratio_text << ','
            << to_string(t.status) << '\n';
        json row = {{"n", t.n},
                    {"a_bits", bit_length(t.a)},
                    {"b_bits", bit_length(t.b)},
                    {"verdict", to_string(t.status)}};
        if (t.ratio) row["ratio"] = interval_json(*t.ratio);
        arr.push_back(row);
    }
    json j = header("ratios", c, depth);
    j["point"] = point_json(p);
    j["word"] = word_json(c.word);
    j["terms"] = arr;
    const std::size_t avg_depth = fitting_depth(c.system.size(), c.average_depth, c.limits);
    const auto avg = averaged_ratio(c.system, *p.affine(), avg_depth, c.limits, c.precision);
    j["average"] = {{"n", avg_depth}, {"included", avg.included}, {"excluded", avg.excluded}};
    if (avg.mean) j["average"]["mean"] = interval_json(*avg.mean);
    return {dump(j), csv.str()};
}

Report run_bounds(const ExperimentConfig& c, std::size_t depth, const RunOptions& o) {
    const ProjPoint& p = need_point(c);
    json j = header("bounds", c, depth);
    j["point"] = point_json(p);
    j["pointA"] = point_json(c.point_a);
    j["places"] = c.places.names();
    j["epsilon"] = to_string(c.epsilon);
    j["word"] = word_json(c.word);
    j["boundParameters"] = params_json(c.bounds);
    int status = 0;

    const LogValue hf = system_height(c.system);
    j["systemHeight"] = {{"exact", hf.to_string()}, {"value", interval_json(hf.to_interval(c.precision))}};

    const auto kn = kappa_constants(c.system, RamificationConstants::Mode::NotTotallyRamified);
    const auto kd = kappa_constants(c.system, RamificationConstants::Mode::DistinctOrbit);
    const auto mc = choose_m(c.epsilon, kn);
    j["kappa"] = {{"notTotallyRamified", {{"logKappa1", to_string(kn.log_kappa1)}, {"kappa2", to_string(kn.kappa2)}}},
                  {"distinctOrbit", {{"logKappa1", to_string(kd.log_kappa1)}, {"kappa2", to_string(kd.kappa2)}}},
                  {"m", mc.m},
                  {"smallCaseBound", interval_json(mc.small_case_bound)}};

    json comp = json::array();
    for (unsigned n = 1; n <= 4; ++n) {
        const auto b = composition_height_bound(n, c.system.max_degree(), hf);
        comp.push_back({{"n", n}, {"exact", b.to_string()}, {"value", interval_json(b.to_interval(c.precision))}});
    }
    j["compositionHeightBound"] = comp;

    // The bounds assume, for the relevant base point, no total ramification
    // along its orbit or no repeated points in it.
    auto hypothesis_json = [&](const ProjPoint& base) {
        const auto hyp = hypothesis_check(c.system, base, depth, c.limits);
        json hj = {{"point", base.to_string()},
                   {"repeatedPointFree", hyp.repeated_point_free},
                   {"totallyRamifiedFree", hyp.totally_ramified_free},
                   {"holds", hyp.repeated_point_free || hyp.totally_ramified_free},
                   {"label", "verified to depth " + std::to_string(hyp.depth_checked)}};
        if (hyp.repeat_witness) hj["repeatWitness"] = {hyp.repeat_witness->first, hyp.repeat_witness->second};
        if (hyp.ramification_witness) {
            hj["ramificationWitness"] = {{"map", hyp.ramification_witness->first},
                                         {"point", hyp.ramification_witness->second.to_string()}};
        }
        return hj;
    };
    j["hypothesis"] = hypothesis_json(c.point_a);
    j["hypothesisInfinity"] = hypothesis_json(ProjPoint::infinity());
    const bool gamma_applies = j["hypothesis"]["holds"].get<bool>();
    const bool corollaries_apply = j["hypothesisInfinity"]["holds"].get<bool>();

    SystemHeightOptions so;
    so.limits = c.limits;
    so.workers = o.workers;
    so.precision = c.precision;
    const auto hhat_a = canonical_height_system(c.system, c.point_a, fitting_depth(c.system.size(), depth, c.limits), so);
    j["systemCanonicalHeightA"] = estimate_json(hhat_a);

    const auto gamma = compute_gamma(c, depth);
    const std::size_t gamma_count = gamma.count(GammaVerdict::In) + gamma.count(GammaVerdict::Ambiguous);
    json gj = {{"empiricalCount", gamma_count}, {"depth", depth}, {"canonicalHeightP", estimate_json(gamma.hhat)}};
    if (gamma.hhat.value.lo_positive()) {
        const auto b = gamma_count_bound(c.system, c.places, c.epsilon, hhat_a.value, hf, gamma.hhat.value, c.bounds);
        gj["m"] = b.m;
        gj["nT2"] = interval_json(b.n_t2);
        gj["nT3"] = interval_json(b.n_t3);
        gj["maxN"] = interval_json(b.max_n);
        gj["tailCount"] = to_string(b.tail_count);
        gj["totalCount"] = interval_json(b.total_count);
        gj["displayed"] = interval_json(b.displayed);
        gj["dominates"] = b.total_count.lo() >= static_cast<double>(gamma_count);
        gj["applicable"] = gamma_applies;
        if (gamma_applies && !gj["dominates"].get<bool>()) status = 1;
    } else {
        gj["skipped"] = "canonical height of P not certified positive";
    }
    j["gammaCount"] = gj;

    const auto hmin = hmin_estimate(c.system, p, c.period_bound, height_options(c));
    json cj = {{"hmin", interval_json(hmin.value)},
               {"hminPreperiodic", hmin.preperiodic},
               {"hminWitness", word_json(hmin.witness)},
               {"wordsExamined", hmin.words_examined}};
    if (c.places.contains_infinity() && hmin.value.lo_positive()) {
        const auto cb = corollary_bounds(c.system, c.places, hf, hmin.value, c.bounds);
        // Integral points along the chosen word, n >= 1.
        std::size_t along_word = 0;
        for (const auto& r : iterate_word(c.system, c.word, p, depth, c.limits)) {
            if (r.depth >= 1 && !r.point.is_infinity() && is_s_integer(*r.point.affine(), c.places)) ++along_word;
        }
        const std::size_t census_depth = fitting_depth(c.system.size(), depth, c.limits);
        const auto census = s_integral_census(c.system, p, c.places, census_depth, c.limits, o.workers);
        cj["sIntegralBound"] = interval_json(cb.s_integral_bound);
        cj["sIntegralAlongWord"] = along_word;
        cj["treeDepthM"] = cb.tree_depth;
        cj["treeCount"] = to_string(cb.tree_count);
        cj["census"] = {{"count", census.count}, {"depth", census_depth}};
        const bool dominates = cb.s_integral_bound.lo() >= static_cast<double>(along_word) &&
                               cb.tree_count >= static_cast<unsigned long>(census.count);
        cj["dominates"] = dominates;
        cj["applicable"] = corollaries_apply;
        if (corollaries_apply && !dominates) status = 1;
    } else {
        cj["skipped"] = hmin.value.lo_positive() ? "places must contain inf" : "minimal canonical height not certified positive";
    }
    j["corollaries"] = cj;
    return {dump(j), std::nullopt, status};
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    static const std::set<std::string> known{"system",        "point",        "pointA",         "places",
                                             "epsilon",       "word",         "depth",          "workLimits",
                                             "boundParameters", "precisionBits", "periodBound", "dedupe",
                                             "averageDepth",  "heightDepth"};
    for (const auto& [key, _] : j.items()) {
        if (!known.count(key)) throw ValidationError("unknown config field '" + key + "'");
    }
    ExperimentConfig c;
    if (!j.contains("system") || !j["system"].is_array()) throw ValidationError("config needs a 'system' array");
    std::vector<RatMap> maps;
    for (const auto& m : j["system"]) maps.push_back(parse_map(m));
    c.system = MapSystem(std::move(maps));
    if (j.contains("point")) c.point = ProjPoint::parse(scalar_text(j["point"], "point"));
    if (j.contains("pointA")) c.point_a = ProjPoint::parse(scalar_text(j["pointA"], "pointA"));
    if (j.contains("places")) {
        if (!j["places"].is_array()) throw ValidationError("places must be an array");
        c.places = PlaceSet::parse(j["places"].get<std::vector<std::string>>());
    }
    if (j.contains("epsilon")) c.epsilon = rational_field(j["epsilon"], "epsilon");
    if (c.epsilon <= 0 || c.epsilon > 1) throw ValidationError("epsilon must lie in (0, 1]");
    if (j.contains("word")) c.word = parse_word(j["word"]);
    c.word.validate(c.system.size());
    if (j.contains("depth")) c.depth = size_field(j["depth"], "depth");
    if (j.contains("workLimits")) {
        for (const auto& [key, value] : j["workLimits"].items()) {
            if (key == "maxNodes") {
                c.limits.max_nodes = size_field(value, key);
            } else if (key == "maxBits") {
                c.limits.max_bits = size_field(value, key);
            } else {
                throw ValidationError("unknown workLimits field '" + key + "'");
            }
        }
    }
    if (j.contains("boundParameters")) c.bounds = parse_bounds(j["boundParameters"]);
    if (j.contains("precisionBits")) {
        const std::size_t bits = size_field(j["precisionBits"], "precisionBits");
        if (bits < 8 || bits > 100000) throw ValidationError("precisionBits must lie in [8, 100000]");
        c.precision = static_cast<mpfr_prec_t>(bits);
    }
    if (j.contains("periodBound")) c.period_bound = std::max<std::size_t>(1, size_field(j["periodBound"], "periodBound"));
    if (j.contains("dedupe")) {
        if (!j["dedupe"].is_boolean()) throw ValidationError("dedupe must be a boolean");
        c.dedupe = j["dedupe"].get<bool>();
    }
    if (j.contains("averageDepth")) c.average_depth = size_field(j["averageDepth"], "averageDepth");
    if (j.contains("heightDepth")) c.height_depth = size_field(j["heightDepth"], "heightDepth");
    return c;
}

std::string config_hash(const std::string& json_text, const RunOptions& options) {
    std::string canonical = parse_json(json_text).dump();
    canonical += "|depth=" + (options.depth ? std::to_string(*options.depth) : std::string("-"));
    canonical += "|seed=" + std::to_string(options.seed);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Report run_subcommand(const std::string& subcommand, const ExperimentConfig& config, const RunOptions& options) {
    const std::size_t depth = options.depth.value_or(config.depth);
    if (subcommand == "orbit") return run_orbit(config, depth, options);
    if (subcommand == "canonical") return run_canonical(config, options.depth.value_or(config.height_depth));
    if (subcommand == "system-height") return run_system_height(config, depth, options);
    if (subcommand == "gamma") return run_gamma(config, depth);
    if (subcommand == "census") return run_census(config, depth, options);
    if (subcommand == "ratios") return run_ratios(config, depth);
    if (subcommand == "bounds") return run_bounds(config, depth, options);
    if (subcommand == "verify") {
        VerifyOptions v;
        v.seed = options.seed;
        v.precision = config.precision;
        const auto results = run_verify(v);
        Report r;
        r.json = verify_json(results, v);
        r.csv = verify_table(results);
        r.status = all_passed(results) ? 0 : 1;
        return r;
    }
    throw ValidationError("unknown subcommand '" + subcommand + "'");
}

}  // namespace orbitint
