#include "orbitint/errors.hpp"
#include "orbitint/random.hpp"
#include "orbitint/ratmap.hpp"

#include <doctest.h>

using namespace orbitint;

namespace {

bool is_zero(const LogValue& v) { return v.exact_sign() == std::optional<int>(0); }

RatMap M(const char* s) { return RatMap::parse(s); }

// Vanishing order at z = a of f(z) g(a) - g(z) f(a), or of g at a pole.
unsigned naive_index(const RatMap& phi, const Rational& a) {
    RatPoly f = to_rational(phi.f()), g = to_rational(phi.g());
    RatPoly h = g(a) == 0 ? g : f * g(a) - g * f(a);
    unsigned order = 0;
    while (!h.is_zero() && h(a) == 0) {
        h = h.derivative();
        ++order;
    }
    return order;
}

}  // namespace

TEST_CASE("make_map worked values") {
    const RatMap sq = RatMap::make(std::vector<Rational>{0, 0, 1}, std::vector<Rational>{1});
    CHECK(sq.degree() == 2);
    CHECK(sq == M("z^2"));
    CHECK(RatMap::make(std::vector<Rational>{2, 2}, std::vector<Rational>{2}) == M("z+1"));
    try {
        RatMap::make(std::vector<Rational>{-1, 0, 1}, std::vector<Rational>{-1, 1});
        FAIL("expected a common factor error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.witness()).find('z') != std::string::npos);
    }
    CHECK_THROWS_AS(RatMap::make(std::vector<Rational>{1}, std::vector<Rational>{}), ValidationError);
}

TEST_CASE("parser canonicalizes") {
    CHECK(M("(2z^2+2)/(2z)") == M("(z^2+1)/z"));
    CHECK(M("z/(-z^2-1)") == M("-z/(z^2+1)"));
    CHECK(M("1/2*z^2") == RatMap::make(std::vector<Rational>{0, 0, 1}, std::vector<Rational>{2}));
    CHECK_THROWS_AS(M("z^2+"), ValidationError);
    CHECK_THROWS_AS(M("(z^2-1)/(z-1)"), ValidationError);
}

TEST_CASE("evaluation worked values") {
    CHECK(eval(M("z^2"), ProjPoint(Rational(2))) == ProjPoint(Rational(4)));
    CHECK(eval(M("1/z"), ProjPoint()) == ProjPoint::infinity());
    CHECK(eval(M("(z^2+1)/z"), ProjPoint::infinity()) == ProjPoint::infinity());
    CHECK(eval(M("(z^2-1)/(z^2+1)"), ProjPoint(Rational(2))) == ProjPoint(Rational(3, 5)));
    CHECK(eval(M("(z^2-1)/(z^2+1)"), ProjPoint(Rational(3, 5))) == ProjPoint(Rational(-8, 17)));
    CHECK(eval(M("(z^2-1)/(z^2+1)"), ProjPoint::infinity()) == ProjPoint(Rational(1)));
}

TEST_CASE("evaluation agrees with rational arithmetic") {
    Sampler s(21);
    for (int i = 0; i < 300; ++i) {
        const RatMap phi = s.map(static_cast<unsigned>(s.between(1, 4)));
        const Rational x = s.rational(16);
        const Rational gx = to_rational(phi.g())(x);
        const ProjPoint got = eval(phi, ProjPoint(x));
        if (gx == 0) {
            CHECK(got.is_infinity());
        } else {
            CHECK(got == ProjPoint(Rational(to_rational(phi.f())(x) / gx)));
        }
    }
}

TEST_CASE("composition worked values") {
    CHECK(compose(M("z^2"), M("z^3")) == M("z^6"));
    CHECK(compose(M("1/z"), M("1/z")) == M("z"));
    CHECK(compose(M("z^2+1"), M("z+1")) == M("z^2+2z+2"));
}

TEST_CASE("map heights worked values") {
    CHECK(is_zero(map_height(M("z^2"))));
    CHECK(is_zero(map_height(M("(3z^2+1)/(z-5)")) - LogValue::log_of(Integer(5))));
    const MapSystem sys({M("z^2"), M("(3z^2+1)/(z-5)")});
    CHECK(is_zero(system_height(sys) - LogValue::log_of(Integer(5))));
}

TEST_CASE("map systems sort by degree and reject degree one") {
    const MapSystem sys({M("z^3"), M("z^2")});
    CHECK(sys.min_degree() == 2);
    CHECK(sys.letter(1) == M("z^2"));
    CHECK(sys.degree_sum() == 5);
    CHECK_THROWS_AS(MapSystem({M("z+1")}), ValidationError);
    CHECK_THROWS_AS(sys.letter(3), ValidationError);
}

TEST_CASE("ramification worked values") {
    CHECK(ramification_index(M("z^2"), ProjPoint()) == 2);
    CHECK(ramification_index(M("z^2"), ProjPoint(Rational(1))) == 1);
    CHECK(ramification_index(M("z^2+3"), ProjPoint::infinity()) == 2);
    CHECK(is_totally_ramified(M("z^2"), ProjPoint()));
    CHECK_FALSE(is_totally_ramified(M("z^2"), ProjPoint(Rational(1))));
    CHECK_FALSE(is_totally_ramified(M("(z^2+1)/z"), ProjPoint::infinity()));
    CHECK(ramification_index(M("1/z^2"), ProjPoint::infinity()) == 2);
    CHECK(ramification_index(M("(z^2+1)/z"), ProjPoint(Rational(1))) == 2);
}

TEST_CASE("ramification agrees with vanishing order") {
    Sampler s(23);
    for (int i = 0; i < 300; ++i) {
        const RatMap phi = s.map(static_cast<unsigned>(s.between(2, 4)));
        std::vector<Rational> candidates{s.rational(6)};
        for (const auto& [r, m] : rational_roots(wronskian(phi))) candidates.push_back(r);
        for (const auto& a : candidates) CHECK(ramification_index(phi, ProjPoint(a)) == naive_index(phi, a));
    }
}

TEST_CASE("ramification is invariant under conjugation choice") {
    Sampler s(29);
    for (int i = 0; i < 100; ++i) {
        const RatMap phi = s.map(static_cast<unsigned>(s.between(2, 4)));
        const ProjPoint inf = ProjPoint::infinity(), image = eval(phi, inf);
        std::vector<Rational> cs;
        for (long c = -3; cs.size() < 3; ++c) {
            if (ProjPoint(Rational(c)) != image) cs.push_back(Rational(c));
        }
        const unsigned e = ramification_index(phi, inf);
        for (const auto& c : cs) CHECK(ramification_index_conjugated(phi, inf, c) == e);
    }
}
