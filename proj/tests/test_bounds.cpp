#include "orbitint/bounds.hpp"
#include "orbitint/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace orbitint;

namespace {

RatMap M(const char* s) { return RatMap::parse(s); }
using Mode = RamificationConstants::Mode;

bool same(const LogValue& a, const LogValue& b) { return (a - b).exact_sign() == std::optional<int>(0); }

Interval at(double x) { return Interval::from_doubles(x, x); }

// Smallest m with k1 * k2^m <= eps / 5, by brute force in doubles.
unsigned scan_m(double k1, double k2, double eps) {
    unsigned m = 1;
    while (k1 * std::pow(k2, m) > eps / 5 * (1 + 1e-12)) ++m;
    return m;
}

}  // namespace

TEST_CASE("kappa constants") {
    const MapSystem a({M("z^2"), M("z^3")});
    const auto n = kappa_constants(a, Mode::NotTotallyRamified);
    CHECK(n.log_kappa1 == 0);
    CHECK(n.kappa2 == Rational(2, 3));
    CHECK(kappa_constants(MapSystem({M("z^2"), M("z^2+1")}), Mode::NotTotallyRamified).kappa2 == Rational(1, 2));
    const auto d = kappa_constants(a, Mode::DistinctOrbit);
    CHECK(d.log_kappa1 == 6);
    CHECK(d.kappa2 * 2 == 1);
}

TEST_CASE("choose_m worked values") {
    RamificationConstants k;
    k.mode = Mode::NotTotallyRamified;
    k.log_kappa1 = 0;
    k.kappa2 = Rational(1, 2);
    CHECK(choose_m(Rational(1, 2), k).m == 4);
    CHECK(choose_m(Rational(1), k).m == 3);
    k.kappa2 = Rational(9, 10);
    CHECK(choose_m(Rational(1), k).m == 16);
    CHECK_THROWS_AS(choose_m(Rational(0), k), ValidationError);
    k.kappa2 = 1;
    CHECK_THROWS_AS(choose_m(Rational(1, 2), k), ValidationError);
    CHECK_THROWS_AS(choose_m(Rational(1, 2), kappa_constants(MapSystem({M("z^2")}), Mode::DistinctOrbit)),
                    ValidationError);
}

TEST_CASE("choose_m agrees with a floating scan") {
    RamificationConstants k;
    k.mode = Mode::NotTotallyRamified;
    for (long num = 1; num < 20; ++num) {
        for (const Rational eps : {Rational(1), Rational(1, 2), Rational(1, 7), Rational(2, 3)}) {
            k.kappa2 = Rational(num, 20);
            k.log_kappa1 = 0;
            CHECK(choose_m(eps, k).m == scan_m(1, k.kappa2.get_d(), eps.get_d()));
            k.log_kappa1 = Rational(3, 2);
            CHECK(choose_m(eps, k).m == scan_m(std::exp(1.5), k.kappa2.get_d(), eps.get_d()));
        }
    }
}

TEST_CASE("composition height bound worked values") {
    const LogValue hf = LogValue::log_of(Integer(5)), l8 = LogValue::log_of(Integer(8));
    CHECK(same(composition_height_bound(1, 2, hf), hf));
    CHECK(same(composition_height_bound(2, 2, hf), hf * Rational(3) + l8 * Rational(4)));
    CHECK(same(composition_height_bound(3, 2, hf), hf * Rational(7) + l8 * Rational(12)));
    CHECK(same(composition_height_bound(2, 3, hf), hf * Rational(4) + l8 * Rational(9)));
}

TEST_CASE("composition heights of explicit words stay under the bound") {
    const MapSystem sys({M("(z^2+1)/z"), M("z^2-3"), M("(2z^2-1)/(z^2+z)")});
    const LogValue hf = system_height(sys);
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int c = 1; c <= 3; ++c) {
                const RatMap two = compose(sys.letter(b), sys.letter(a));
                const RatMap three = compose(sys.letter(c), two);
                CHECK(compare(map_height(two), composition_height_bound(2, 2, hf)) <= std::optional<int>(0));
                CHECK(compare(map_height(three), composition_height_bound(3, 2, hf)) <= std::optional<int>(0));
            }
        }
    }
}

TEST_CASE("gamma count bound: log-plus term vanishes for large canonical height") {
    const MapSystem sys({M("z^2"), M("z^3")});
    const PlaceSet one = PlaceSet::parse({"inf"}), two = PlaceSet::parse({"inf", "p2"});
    const LogValue hf;  // h(F) = 0
    const auto b = gamma_count_bound(sys, one, Rational(1, 2), at(0.5), hf, at(10.0));
    CHECK(b.displayed.mid() == doctest::Approx(4 * 2.0));
    CHECK(b.tail_count == 4);
    const auto b2 = gamma_count_bound(sys, two, Rational(1, 2), at(0.5), hf, at(10.0));
    CHECK(b2.tail_count == 4 * b.tail_count);
    CHECK(b.m == 6);
    CHECK(b.total_count.lo() == static_cast<double>(b.tail_count.get_d() + std::floor(b.max_n.hi()) + 1));
}

TEST_CASE("gamma count bound rejects unproven positivity") {
    const MapSystem sys({M("z^2")});
    CHECK_THROWS_AS(gamma_count_bound(sys, PlaceSet::parse({"inf"}), Rational(1, 2), at(0), LogValue{},
                                      Interval::from_doubles(0.0, 1.0)),
                    ValidationError);
    BoundParameters bad;
    bad.roth_mu = 2;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("gamma count bound monotonicity sweep") {
    const MapSystem sys({M("(z^2+1)/z"), M("z^3-2")});
    const PlaceSet one = PlaceSet::parse({"inf"}), two = PlaceSet::parse({"inf", "p3"});
    const LogValue small = LogValue::log_of(Integer(2)), big = LogValue::log_of(Integer(50));
    for (double hp = 0.01; hp < 20; hp *= 1.7) {
        for (double ha = 0; ha < 10; ha += 2.5) {
            const auto base = gamma_count_bound(sys, one, Rational(1, 2), at(ha), small, at(hp));
            const auto more_p = gamma_count_bound(sys, one, Rational(1, 2), at(ha), small, at(hp * 1.5));
            const auto more_a = gamma_count_bound(sys, one, Rational(1, 2), at(ha + 1), small, at(hp));
            const auto more_f = gamma_count_bound(sys, one, Rational(1, 2), at(ha), big, at(hp));
            const auto more_s = gamma_count_bound(sys, two, Rational(1, 2), at(ha), small, at(hp));
            CHECK(more_p.total_count.hi() <= base.total_count.hi());
            CHECK(more_p.displayed.hi() <= base.displayed.hi());
            CHECK(more_a.total_count.lo() >= base.total_count.lo());
            CHECK(more_f.total_count.lo() >= base.total_count.lo());
            CHECK(more_s.total_count.lo() >= base.total_count.lo());
            CHECK(more_s.displayed.lo() >= base.displayed.lo());
        }
    }
}

TEST_CASE("corollary bounds worked values") {
    const MapSystem mono({M("z^2"), M("z^3")});
    const auto a = corollary_bounds(mono, PlaceSet::parse({"inf"}), LogValue{}, at(std::log(2.0)));
    // h(F) = 0: M = ceil(gamma) + 1 = 3, count = (2^3 - 1)/(2 - 1)
    CHECK(a.tree_depth == 3);
    CHECK(a.tree_count == 7);
    CHECK(a.s_integral_bound.mid() == doctest::Approx(8.0));

    const auto b = corollary_bounds(MapSystem({M("z^2")}), PlaceSet::parse({"inf"}), LogValue{}, at(1.0));
    CHECK(b.tree_count == b.tree_depth);

    const auto c = corollary_bounds(mono, PlaceSet::parse({"inf"}), LogValue::log_of(Integer(1024)), at(std::log(2.0)));
    // log+_2(10 log 2 / log 2) = log2(10)
    CHECK(c.s_integral_bound.mid() == doctest::Approx(8.0 + std::log2(10.0)));
    CHECK(c.tree_depth == static_cast<unsigned long>(std::ceil(2.0 + std::log2(10.0))) + 1);
    CHECK_THROWS_AS(corollary_bounds(mono, PlaceSet::parse({"inf"}), LogValue{}, at(0.0)), ValidationError);
}
