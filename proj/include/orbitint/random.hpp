#pragma once

#include "orbitint/numeric.hpp"
#include "orbitint/proj1.hpp"
#include "orbitint/ratmap.hpp"
#include "orbitint/words.hpp"

#include <cstdint>
#include <random>

namespace orbitint {

/// Seeded source of random test inputs. Same seed, same sequence.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed);

    std::mt19937_64& engine() { return rng_; }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    long between(long lo, long hi);

    /// Uniform in [0, 2^bits).
    Integer bits(unsigned b);
    /// Nonzero, random sign, |n| < 2^b.
    Integer nonzero(unsigned b);
    /// Nonzero rational with numerator and denominator below 2^b.
    Rational rational(unsigned b);
    /// Affine point, or infinity with probability 1/16.
    ProjPoint point(unsigned b);

    /// Random map of exact degree d, coefficients in [-bound, bound].
    RatMap map(unsigned d, long bound = 3);
    /// Polynomial of exact degree d.
    RatMap polynomial(unsigned d, long bound = 3);
    /// k maps with degrees drawn from [2, dmax].
    MapSystem system(std::size_t k, unsigned dmax, long bound = 3);
    /// Periodic word with seed length in [1, max_len].
    Word periodic_word(std::size_t k, std::size_t max_len);

private:
    std::mt19937_64 rng_;
    gmp_randclass gmp_;
};

}  // namespace orbitint
