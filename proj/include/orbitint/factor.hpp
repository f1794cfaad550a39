#pragma once

#include "orbitint/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace orbitint {

struct FactorOptions {
    std::uint64_t trial_bound = 1u << 16;
    /// Pollard-Brent iterations allowed per composite cofactor before giving up.
    std::uint64_t rho_iterations = 1u << 22;
};

/// Miller-Rabin. Deterministic below 3.3e24 (first 13 prime bases); above that
/// GMP's BPSW-plus-MR test is used.
bool is_probable_prime(const Integer& n);

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
/// Trial division to `trial_bound`, then primality testing and Pollard-Brent on
/// the cofactor. Throws FactorizationError if a cofactor resists.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n, const FactorOptions& options = {});

/// Positive divisors of |n| in ascending order (n != 0).
std::vector<Integer> divisors(const Integer& n, const FactorOptions& options = {});

}  // namespace orbitint
