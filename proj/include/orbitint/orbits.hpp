#pragma once

#include "orbitint/heights.hpp"
#include "orbitint/limits.hpp"
#include "orbitint/proj1.hpp"
#include "orbitint/ratmap.hpp"
#include "orbitint/words.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace orbitint {

struct OrbitRecord {
    ProjPoint point;
    std::vector<int> word;  // prefix applied to the root, first letter first
    std::size_t depth = 0;
    LogValue height;
};

/// Phi^0(P), ..., Phi^n(P) along w.
std::vector<OrbitRecord> iterate_word(const MapSystem& system, const Word& w, const ProjPoint& p, std::size_t n,
                                      const WorkLimits& limits = {});

/// Streams every node of the word tree to `visit` in lexicographic (preorder) order.
/// Throws WorkLimitError if the tree exceeds max_nodes or a coordinate max_bits.
void walk_tree(const MapSystem& system, const ProjPoint& p, std::size_t depth, const WorkLimits& limits,
               const std::function<void(const OrbitRecord&)>& visit);

/// All nodes with n <= depth in lexicographic word order. With dedupe, only the
/// first occurrence of each point is kept. Subtrees below the first letter are
/// explored by up to `workers` threads; the output does not depend on it.
std::vector<OrbitRecord> enumerate_tree(const MapSystem& system, const ProjPoint& p, std::size_t depth, bool dedupe,
                                        const WorkLimits& limits = {}, unsigned workers = 1);

struct HypothesisReport {
    bool repeated_point_free = true;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> repeat_witness;
    bool totally_ramified_free = true;
    /// 1-based map index and the orbit point.
    std::optional<std::pair<int, ProjPoint>> ramification_witness;
    std::size_t depth_checked = 0;
};

HypothesisReport hypothesis_check(const MapSystem& system, const ProjPoint& a, std::size_t depth,
                                  const WorkLimits& limits = {});

struct PreperiodicityVerdict {
    enum class Kind { Preperiodic, WanderingCertified, Unknown };
    Kind kind = Kind::Unknown;
    std::size_t tail = 0;  // Phi^tail(P) is the first point on the cycle
    std::vector<ProjPoint> cycle;
    std::optional<HeightEstimate> height;
};

/// Cycle detection on (point, position mod period) up to `depth`, then an
/// attempt to certify a positive canonical height.
PreperiodicityVerdict preperiodicity_check(const MapSystem& system, const Word& w, const ProjPoint& p,
                                           std::size_t depth, const HeightOptions& options = {});

std::string to_string(PreperiodicityVerdict::Kind kind);

}  // namespace orbitint
