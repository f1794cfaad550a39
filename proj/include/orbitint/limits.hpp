#pragma once

#include <cstddef>
#include <cstdint>

namespace orbitint {

struct WorkLimits {
    std::uint64_t max_nodes = 1'000'000;
    std::size_t max_bits = 1'000'000;  // per coordinate
};

/// 1 + k + ... + k^depth, saturating at UINT64_MAX.
std::uint64_t tree_size(std::size_t k, std::size_t depth);

}  // namespace orbitint
