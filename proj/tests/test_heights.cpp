#include "orbitint/heights.hpp"
#include "orbitint/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace orbitint;

namespace {

RatMap M(const char* s) { return RatMap::parse(s); }

// Overlap with the outward-rounded enclosure of log 2 (a double cannot sit inside a 128-bit interval).
bool holds_log2(const Interval& v) {
    const Interval l = Interval::log_of(Integer(2));
    return v.lo() <= l.hi() && l.lo() <= v.hi();
}

// max over samples of |h(phi(x))/d - h(x)|, evaluated with exact heights
double sampled_defect(const RatMap& phi, std::size_t samples, std::uint64_t seed) {
    Sampler s(seed);
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const ProjPoint x = s.point(24);
        const LogValue defect = height(eval(phi, x)) * Rational(1, phi.degree()) - height(x);
        worst = std::max(worst, std::abs(defect.to_double()));
    }
    return worst;
}

}  // namespace

TEST_CASE("defect bound is exact zero for monomials") {
    for (const char* s : {"z^2", "z^3", "1/z^2"}) {
        const auto b = c_bound(M(s));
        CHECK(b.c.hi() == 0.0);
        REQUIRE(b.exact);
        CHECK(b.exact->exact_sign() == std::optional<int>(0));
        Sampler smp(3);
        for (int i = 0; i < 2000; ++i) {
            const ProjPoint x = smp.point(24);
            const LogValue defect = height(eval(M(s), x)) - height(x) * Rational(M(s).degree());
            CHECK(defect.exact_sign() == std::optional<int>(0));
        }
    }
}

TEST_CASE("certified defect bound dominates sampled defects") {
    for (const char* s : {"(z^2+1)/z", "z^2-1", "(z^2-1)/(z^2+1)", "(3z^2+1)/(z-5)", "(z^3+1)/z^2", "z^3-7z+2"}) {
        const auto b = c_bound(M(s));
        CHECK(b.c.lo() >= 0.0);
        CHECK(sampled_defect(M(s), 2000, 5) <= b.c.hi());
    }
    Sampler s(7);
    for (int i = 0; i < 60; ++i) {
        const RatMap phi = s.map(static_cast<unsigned>(s.between(2, 3)));
        CHECK(sampled_defect(phi, 200, static_cast<std::uint64_t>(i)) <= c_bound(phi).c.hi());
    }
}

TEST_CASE("cofactor identities hold") {
    Sampler s(31);
    for (int i = 0; i < 40; ++i) {
        const RatMap phi = s.map(static_cast<unsigned>(s.between(2, 4)));
        const unsigned d = phi.degree();
        const auto [x_id, y_id] = resultant_cofactors(phi);
        // Homogenized coefficient vectors in powers of X (Y is implicit).
        auto homog = [&](const IntPoly& p) {
            std::vector<Integer> c(d + 1, 0);
            for (std::size_t k = 0; k <= d; ++k) c[k] = p[k];
            return c;
        };
        const auto F = homog(phi.f()), G = homog(phi.g());
        auto combine = [&](const CofactorIdentity& id) {
            std::vector<Integer> out(2 * d, 0);
            for (std::size_t a = 0; a < id.u.size(); ++a) {
                for (std::size_t b = 0; b <= d; ++b) out[a + b] += id.u[a] * F[b] + id.v[a] * G[b];
            }
            return out;
        };
        std::vector<Integer> want_x(2 * d, 0), want_y(2 * d, 0);
        want_x[2 * d - 1] = x_id.scale;
        want_y[0] = y_id.scale;
        CHECK(combine(x_id) == want_x);
        CHECK(combine(y_id) == want_y);
        CHECK(x_id.scale != 0);
        CHECK(homogeneous_resultant(phi) != 0);
    }
}

TEST_CASE("empirical defect bound is flagged and nonnegative") {
    const auto b = c_bound(M("(z^2+1)/z"), HeightDifferenceBound::Mode::Empirical);
    CHECK(b.mode == HeightDifferenceBound::Mode::Empirical);
    CHECK(b.samples > 0);
    CHECK(b.c.lo() >= 0.0);
}

TEST_CASE("canonical height along words: worked values") {
    const MapSystem sq({M("z^2")});
    const auto e = canonical_height_word(sq, Word::periodic({1}), ProjPoint(Rational(2)));
    CHECK(holds_log2(e.value));
    CHECK(e.certified);

    const MapSystem cheb({M("z^2-1")});
    CHECK(canonical_height_word(cheb, Word::periodic({1}), ProjPoint()).value.contains(0.0));

    const MapSystem mono({M("z^2"), M("z^3")});
    const auto m = canonical_height_word(mono, Word::periodic({1, 2}), ProjPoint(Rational(2)));
    CHECK(holds_log2(m.value));
    CHECK(m.degree_product == degree_product(mono, Word::periodic({1, 2}), m.depth));
}

TEST_CASE("canonical height interval width tracks the defect bound") {
    const MapSystem sys({M("(z^2+1)/z")});
    const double c = c_bound(sys.maps()[0]).c.hi();
    for (std::size_t n = 2; n <= 12; n += 2) {
        HeightOptions o;
        o.max_depth = n;
        const auto e = canonical_height_word(sys, Word::periodic({1}), ProjPoint(Rational(2)), o);
        // radius c * dmin/(dmin - 1) / D_n on each side
        CHECK(e.value.width() <= 4 * c / std::pow(2.0, static_cast<double>(e.depth)) + 1e-12);
        CHECK(e.value.lo() >= 0.0);
    }
}

TEST_CASE("canonical height target width stops early") {
    const MapSystem sys({M("(z^2+1)/z")});
    HeightOptions o;
    o.target_width = 0.05;
    const auto e = canonical_height_word(sys, Word::periodic({1}), ProjPoint(Rational(3)), o);
    CHECK(e.value.width() <= 0.05);
    CHECK_FALSE(e.partial);
    o.target_width = 1e-300;
    o.max_depth = 4;
    CHECK(canonical_height_word(sys, Word::periodic({1}), ProjPoint(Rational(3)), o).partial);
}

TEST_CASE("system height: worked values") {
    const MapSystem mono({M("z^2"), M("z^3")});
    CHECK(holds_log2(canonical_height_system(mono, ProjPoint(Rational(2)), 5).value));
    CHECK(canonical_height_system(mono, ProjPoint(Rational(1)), 5).value.contains(0.0));
    CHECK(canonical_height_system(mono, ProjPoint(), 5).value.contains(0.0));
}

TEST_CASE("system height is independent of worker count") {
    const MapSystem sys({M("(z^2+1)/z"), M("(z^3+1)/z^2")});
    SystemHeightOptions one, many;
    many.workers = 4;
    const auto a = canonical_height_system(sys, ProjPoint(Rational(2)), 6, one);
    const auto b = canonical_height_system(sys, ProjPoint(Rational(2)), 6, many);
    CHECK(a.value.to_string() == b.value.to_string());
}

TEST_CASE("system height tail dominates successive iterate differences") {
    const MapSystem sys({M("(z^2+1)/z"), M("z^2-2")});
    double c = 0;
    for (const auto& phi : sys.maps()) c = std::max(c, c_bound(phi).c.hi());
    const double k = 2, D = 4;
    Interval prev = canonical_height_system(sys, ProjPoint(Rational(3)), 0).approximant;
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto e = canonical_height_system(sys, ProjPoint(Rational(3)), n);
        const double tail = 2 * c * std::pow(k / D, static_cast<double>(n - 1)) / (1 - k / D);
        CHECK(std::abs(e.approximant.mid() - prev.mid()) <= tail + 1e-12);
        prev = e.approximant;
    }
}

TEST_CASE("hmin: worked values") {
    const MapSystem mono({M("z^2"), M("z^3")});
    const auto a = hmin_estimate(mono, ProjPoint(Rational(2)), 2);
    CHECK(holds_log2(a.value));
    CHECK_FALSE(a.preperiodic);
    CHECK(a.words_examined == 6);

    const auto b = hmin_estimate(MapSystem({M("z^2")}), ProjPoint(), 2);
    CHECK(b.preperiodic);
    CHECK(b.value.contains(0.0));

    const auto c = hmin_estimate(MapSystem({M("z^2-1"), M("z^2")}), ProjPoint(), 1);
    CHECK(c.preperiodic);
    CHECK(c.witness == Word::periodic({1}));
    CHECK(c.value.hi() == 0.0);
}
