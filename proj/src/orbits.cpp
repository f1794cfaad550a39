#include "orbitint/orbits.hpp"

#include "orbitint/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace orbitint {

std::uint64_t tree_size(std::size_t k, std::size_t depth) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0, level = 1;
    for (std::size_t n = 0; n <= depth; ++n) {
        if (total > cap - level) return cap;
        total += level;
        if (n < depth) {
            if (k != 0 && level > cap / k) return cap;
            level *= k;
        }
    }
    return total;
}

namespace {

void check_bits(const ProjPoint& q, const WorkLimits& limits) {
    if (q.bits() > limits.max_bits) {
        throw WorkLimitError("coordinate of " + std::to_string(q.bits()) + " bits exceeds the cap of " +
                             std::to_string(limits.max_bits));
    }
}

void check_nodes(std::size_t k, std::size_t depth, const WorkLimits& limits) {
    const auto nodes = tree_size(k, depth);
    if (nodes > limits.max_nodes) {
        throw WorkLimitError("word tree to depth " + std::to_string(depth) + " has " +
                             (nodes == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                                 : std::to_string(nodes)) +
                             " nodes, cap is " + std::to_string(limits.max_nodes));
    }
}

OrbitRecord make_record(ProjPoint q, std::vector<int> word) {
    OrbitRecord r;
    r.height = height(q);
    r.point = std::move(q);
    r.depth = word.size();
    r.word = std::move(word);
    return r;
}

// Preorder walk of the subtree rooted at `rec`, down to total depth `depth`.
void walk_from(const MapSystem& system, const OrbitRecord& rec, std::size_t depth, const WorkLimits& limits,
               const std::function<void(const OrbitRecord&)>& visit) {
    visit(rec);
    if (rec.depth == depth) return;
    for (std::size_t j = 0; j < system.size(); ++j) {
        ProjPoint q = eval(system.maps()[j], rec.point);
        check_bits(q, limits);
        std::vector<int> word = rec.word;
        word.push_back(static_cast<int>(j + 1));
        walk_from(system, make_record(std::move(q), std::move(word)), depth, limits, visit);
    }
}

}  // namespace

std::vector<OrbitRecord> iterate_word(const MapSystem& system, const Word& w, const ProjPoint& p, std::size_t n,
                                      const WorkLimits& limits) {
    w.validate(system.size());
    std::vector<OrbitRecord> out;
    out.push_back(make_record(p, {}));
    for (std::size_t i = 0; i < n; ++i) {
        const int letter = w.letter_at(i);
        ProjPoint q = eval(system.letter(letter), out.back().point);
        check_bits(q, limits);
        std::vector<int> word = out.back().word;
        word.push_back(letter);
        out.push_back(make_record(std::move(q), std::move(word)));
    }
    return out;
}

void walk_tree(const MapSystem& system, const ProjPoint& p, std::size_t depth, const WorkLimits& limits,
               const std::function<void(const OrbitRecord&)>& visit) {
    check_nodes(system.size(), depth, limits);
    check_bits(p, limits);
    walk_from(system, make_record(p, {}), depth, limits, visit);
}

std::vector<OrbitRecord> enumerate_tree(const MapSystem& system, const ProjPoint& p, std::size_t depth, bool dedupe,
                                        const WorkLimits& limits, unsigned workers) {
    const std::size_t k = system.size();
    check_nodes(k, depth, limits);
    check_bits(p, limits);
    const OrbitRecord root = make_record(p, {});

    std::vector<OrbitRecord> all;
    if (depth == 0 || workers <= 1) {
        walk_from(system, root, depth, limits, [&](const OrbitRecord& r) { all.push_back(r); });
    } else {
        // Each first-letter subtree is filled independently and concatenated in
        // letter order, which is exactly the sequential preorder.
        std::vector<std::vector<OrbitRecord>> parts(k);
        std::vector<std::exception_ptr> errors(k);
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t j; (j = next.fetch_add(1)) < k;) {
                try {
                    ProjPoint q = eval(system.maps()[j], p);
                    check_bits(q, limits);
                    const OrbitRecord child = make_record(std::move(q), {static_cast<int>(j + 1)});
                    walk_from(system, child, depth, limits, [&](const OrbitRecord& r) { parts[j].push_back(r); });
                } catch (...) {
                    errors[j] = std::current_exception();
                }
            }
        };
        const unsigned n_threads = std::min<unsigned>(workers, static_cast<unsigned>(k));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        all.push_back(root);
        for (auto& part : parts) {
            std::move(part.begin(), part.end(), std::back_inserter(all));
        }
    }
    if (!dedupe) return all;

    std::vector<OrbitRecord> out;
    std::unordered_set<ProjPoint, ProjPointHash> seen;
    for (auto& r : all) {
        if (seen.insert(r.point).second) out.push_back(std::move(r));
    }
    return out;
}

HypothesisReport hypothesis_check(const MapSystem& system, const ProjPoint& a, std::size_t depth,
                                  const WorkLimits& limits) {
    HypothesisReport report;
    report.depth_checked = depth;
    std::unordered_map<ProjPoint, std::vector<int>, ProjPointHash> first_word;
    walk_tree(system, a, depth, limits, [&](const OrbitRecord& r) {
        auto [it, inserted] = first_word.try_emplace(r.point, r.word);
        if (!inserted) {
            if (report.repeated_point_free) {
                report.repeated_point_free = false;
                report.repeat_witness = std::make_pair(it->second, r.word);
            }
            return;
        }
        if (!report.totally_ramified_free) return;
        for (std::size_t j = 0; j < system.size(); ++j) {
            if (is_totally_ramified(system.maps()[j], r.point)) {
                report.totally_ramified_free = false;
                report.ramification_witness = std::make_pair(static_cast<int>(j + 1), r.point);
                break;
            }
        }
    });
    return report;
}

PreperiodicityVerdict preperiodicity_check(const MapSystem& system, const Word& w, const ProjPoint& p,
                                           std::size_t depth, const HeightOptions& options) {
    if (!w.is_periodic()) throw ValidationError("preperiodicity_check needs a periodic word");
    w.validate(system.size());
    PreperiodicityVerdict out;
    const std::size_t period = w.size();
    // The orbit is eventually periodic iff some (point, n mod period) state repeats.
    std::map<std::size_t, std::unordered_map<ProjPoint, std::size_t, ProjPointHash>> seen;
    std::vector<ProjPoint> orbit{p};
    ProjPoint q = p;
    for (std::size_t n = 0; n <= depth; ++n) {
        if (n > 0) {
            q = eval(system.letter(w.letter_at(n - 1)), q);
            if (q.bits() > options.max_bits) break;
            orbit.push_back(q);
        }
        auto [it, inserted] = seen[n % period].try_emplace(q, n);
        if (!inserted) {
            out.kind = PreperiodicityVerdict::Kind::Preperiodic;
            out.tail = it->second;
            out.cycle.assign(orbit.begin() + static_cast<long>(it->second), orbit.begin() + static_cast<long>(n));
            return out;
        }
    }
    out.height = canonical_height_word(system, w, p, options);
    out.kind = out.height->value.lo_positive() ? PreperiodicityVerdict::Kind::WanderingCertified
                                               : PreperiodicityVerdict::Kind::Unknown;
    return out;
}

std::string to_string(PreperiodicityVerdict::Kind kind) {
    switch (kind) {
        case PreperiodicityVerdict::Kind::Preperiodic: return "preperiodic";
        case PreperiodicityVerdict::Kind::WanderingCertified: return "wandering-certified";
        case PreperiodicityVerdict::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace orbitint
