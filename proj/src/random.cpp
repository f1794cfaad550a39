#include "orbitint/random.hpp"

#include "orbitint/errors.hpp"

namespace orbitint {

Sampler::Sampler(std::uint64_t seed) : rng_(seed), gmp_(gmp_randinit_mt) {
    gmp_.seed(Integer(std::to_string(seed)));
}

std::uint64_t Sampler::below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

long Sampler::between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Integer Sampler::bits(unsigned b) { return gmp_.get_z_bits(b); }

Integer Sampler::nonzero(unsigned b) {
    Integer n;
    do {
        n = gmp_.get_z_bits(b);
    } while (n == 0);
    return below(2) ? Integer(-n) : n;
}

Rational Sampler::rational(unsigned b) { return ratio(nonzero(b), abs_value(nonzero(b))); }

ProjPoint Sampler::point(unsigned b) {
    if (below(16) == 0) return ProjPoint::infinity();
    if (below(16) == 0) return ProjPoint();
    return ProjPoint(rational(b));
}

RatMap Sampler::map(unsigned d, long bound) {
    for (;;) {
        std::vector<Rational> f(d + 1), g(d + 1);
        for (auto& a : f) a = between(-bound, bound);
        for (auto& a : g) a = between(-bound, bound);
        // exact degree d: one of the two leading coefficients is nonzero
        if (f[d] == 0 && g[d] == 0) continue;
        try {
            return RatMap::make(f, g);
        } catch (const ValidationError&) {
        }
    }
}

RatMap Sampler::polynomial(unsigned d, long bound) {
    std::vector<Rational> f(d + 1);
    for (auto& a : f) a = between(-bound, bound);
    while (f[d] == 0) f[d] = between(-bound, bound);
    return RatMap::make(f, {Rational(1)});
}

MapSystem Sampler::system(std::size_t k, unsigned dmax, long bound) {
    std::vector<RatMap> maps;
    for (std::size_t i = 0; i < k; ++i) maps.push_back(map(static_cast<unsigned>(between(2, dmax)), bound));
    return MapSystem(std::move(maps));
}

Word Sampler::periodic_word(std::size_t k, std::size_t max_len) {
    std::vector<int> letters(static_cast<std::size_t>(between(1, static_cast<long>(max_len))));
    for (auto& a : letters) a = static_cast<int>(between(1, static_cast<long>(k)));
    return Word::periodic(std::move(letters));
}

}  // namespace orbitint
