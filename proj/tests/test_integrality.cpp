#include "orbitint/errors.hpp"
#include "orbitint/integrality.hpp"

#include <doctest.h>

#include <cmath>

using namespace orbitint;

namespace {

RatMap M(const char* s) { return RatMap::parse(s); }
ProjPoint Q(long n) { return ProjPoint(Rational(n)); }
PlaceSet S(std::vector<std::string> names) { return PlaceSet::parse(names); }

}  // namespace

TEST_CASE("quasi-integrality worked values") {
    CHECK(quasi_integral_test(Rational(5), S({"inf"}), 1));
    CHECK_FALSE(quasi_integral_test(Rational(8, 3), S({"inf"}), 1));
    CHECK(quasi_integral_test(Rational(8, 3), S({"inf", "p3"}), 1));
    CHECK(quasi_integral_test(Rational(8, 3), S({"inf"}), Rational(1, 3)));
    CHECK_THROWS_AS(quasi_integral_test(Rational(2), S({"inf"}), 0), ValidationError);
    CHECK_THROWS_AS(quasi_integral_test(Rational(2), S({"inf"}), Rational(3, 2)), ValidationError);
}

TEST_CASE("quasi-integrality against floating point away from the boundary") {
    for (long a = -40; a <= 40; a += 3) {
        for (long b = 1; b <= 40; b += 4) {
            const Rational x = ratio(Integer(a), Integer(b));
            const double lhs = std::max(0.0, std::log(std::abs(x.get_d())));
            const double h = height(ProjPoint(x)).to_double();
            const double rhs = 0.5 * h;
            if (std::abs(lhs - rhs) < 1e-9) continue;
            CHECK(quasi_integral_test(x, S({"inf"}), Rational(1, 2)) == (lhs > rhs));
        }
    }
}

TEST_CASE("gamma worked values") {
    const MapSystem sq({M("z^2")});
    const auto in = gamma_set(sq, Word::periodic({1}), S({"inf"}), ProjPoint::infinity(), Q(2), Rational(1, 2), 5);
    REQUIRE(in.members.size() == 6);
    CHECK(in.count(GammaVerdict::In) == 6);
    CHECK_FALSE(in.degenerate);

    const auto out = gamma_set(sq, Word::periodic({1}), S({"inf"}), Q(0), Q(2), Rational(1, 2), 5);
    for (const auto& m : out.members) {
        if (m.n >= 1) CHECK(m.verdict == GammaVerdict::Out);
    }
}

TEST_CASE("gamma thresholds follow the degree product") {
    const MapSystem mono({M("z^2"), M("z^3")});
    const auto g = gamma_set(mono, Word::periodic({1, 2}), S({"inf"}), ProjPoint::infinity(), Q(2), Rational(1, 2), 4);
    long dn = 1;
    for (const auto& m : g.members) {
        if (m.n > 0) dn *= m.n % 2 == 1 ? 2 : 3;
        CHECK(m.threshold.mid() == doctest::Approx(0.5 * static_cast<double>(dn) * g.hhat.value.mid()));
    }
}

TEST_CASE("gamma is ambiguous rather than wrong when the height straddles") {
    // preperiodic point: hhat = 0 exactly, threshold interval is [0, slack]
    const MapSystem cheb({M("z^2-1")});
    const auto g = gamma_set(cheb, Word::periodic({1}), S({"inf"}), Q(1), Q(0), Rational(1, 2), 4);
    CHECK(g.degenerate);
    for (const auto& m : g.members) CHECK(m.verdict != GammaVerdict::Out);
}

TEST_CASE("hitting A is an In verdict with infinite proximity") {
    const MapSystem inv({M("1/z^2")});
    const auto g = gamma_set(inv, Word::periodic({1}), S({"inf"}), ProjPoint::infinity(), Q(0), Rational(1, 2), 2);
    CHECK(g.members[1].verdict == GammaVerdict::In);
    CHECK(std::isinf(g.members[1].proximity.lo()));
}

TEST_CASE("census worked values") {
    const auto a = s_integral_census(MapSystem({M("1/z^2")}), Q(2), S({"inf"}), 4);
    REQUIRE(a.count == 2);
    CHECK(a.hits[0].point == Q(16));
    CHECK(a.hits[1].point == Q(65536));

    const auto b = s_integral_census(MapSystem({M("z^2")}), Q(2), S({"inf"}), 4);
    CHECK(b.count == 4);

    const auto c = s_integral_census(MapSystem({M("z^2"), M("1/z^2")}), ProjPoint::infinity(), S({"inf"}), 3);
    for (const auto& r : c.hits) CHECK(is_s_integer(*r.point.affine(), S({"inf"})));

    CHECK(s_integral_census(MapSystem({M("z^2")}), ProjPoint::infinity(), S({"inf"}), 3).count == 0);
    CHECK_THROWS_AS(s_integral_census(MapSystem({M("z^2")}), Q(2), S({"p2"}), 3), ValidationError);
}

TEST_CASE("ratio series worked values") {
    const MapSystem sys({M("(z^2-1)/(z^2+1)")});
    const auto t = ratio_series(sys, Word::periodic({1}), Rational(2), 2);
    REQUIRE(t.size() == 2);
    CHECK(t[0].a == 3);
    CHECK(t[0].b == 5);
    CHECK(t[0].ratio->mid() == doctest::Approx(std::log(3.0) / std::log(5.0)).epsilon(1e-14));
    CHECK(t[0].ratio->mid() == doctest::Approx(0.6826).epsilon(1e-4));
    CHECK(t[1].a == -8);
    CHECK(t[1].b == 17);
    CHECK(t[1].ratio->mid() == doctest::Approx(std::log(8.0) / std::log(17.0)).epsilon(1e-14));

    for (const auto& r : ratio_series(MapSystem({M("z^2")}), Word::periodic({1}), Rational(2), 4)) {
        CHECK(r.status == RatioTerm::Status::Undefined);
    }
}

TEST_CASE("ratio series for an inversion alternates rather than staying at 1") {
    // 2/3 -> 9/4 -> 16/81
    const auto t = ratio_series(MapSystem({M("1/z^2")}), Word::periodic({1}), Rational(2, 3), 2);
    REQUIRE(t.size() == 2);
    CHECK(t[0].ratio->mid() == doctest::Approx(std::log(3.0) / std::log(2.0)));
    CHECK(t[1].ratio->mid() == doctest::Approx(std::log(2.0) / std::log(3.0)));
}

TEST_CASE("ratio series stops at infinity") {
    const auto t = ratio_series(MapSystem({M("1/z^2")}), Word::periodic({1}), Rational(0), 5);
    REQUIRE(t.size() == 1);
    CHECK(t[0].status == RatioTerm::Status::Infinity);
}

TEST_CASE("averaged ratio") {
    const MapSystem one({M("(z^2-1)/(z^2+1)")});
    const auto avg = averaged_ratio(one, Rational(2), 2);
    const auto series = ratio_series(one, Word::periodic({1}), Rational(2), 2);
    REQUIRE(avg.mean);
    CHECK(avg.mean->mid() == doctest::Approx(series[1].ratio->mid()));

    const MapSystem two({M("(z^2-1)/(z^2+1)"), M("(z^3-2)/(z^3+2)")});
    const auto a2 = averaged_ratio(two, Rational(2), 2);
    CHECK(a2.included + a2.excluded == 4);
    // independent evaluation of the four depth-2 ratios
    double sum = 0;
    std::size_t used = 0;
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            const ProjPoint q = eval(two.letter(j), eval(two.letter(i), ProjPoint(Rational(2))));
            const double a = std::abs(q.x().get_d()), b = std::abs(q.y().get_d());
            if (a <= 1 || b <= 1) continue;
            sum += std::log(a) / std::log(b);
            ++used;
        }
    }
    CHECK(a2.included == used);
    REQUIRE(a2.mean);
    CHECK(a2.mean->mid() == doctest::Approx(sum / static_cast<double>(used)));
}
