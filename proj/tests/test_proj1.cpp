#include "oracle.hpp"

#include "orbitint/errors.hpp"
#include "orbitint/proj1.hpp"
#include "orbitint/random.hpp"

#include <doctest.h>

using namespace orbitint;

namespace {

bool is_zero(const LogValue& v) { return v.exact_sign() == std::optional<int>(0); }
const Place INF = Place::infinity();

}  // namespace

TEST_CASE("normalization worked values") {
    CHECK(normalize(Integer(2), Integer(4)) == ProjPoint(Integer(1), Integer(2)));
    const ProjPoint q = normalize(Integer(-1), Integer(-2));
    CHECK(q.x() == 1);
    CHECK(q.y() == 2);
    CHECK(normalize(Integer(3), Integer(0)) == ProjPoint::infinity());
    CHECK(normalize(Integer(-3), Integer(0)) == ProjPoint::infinity());
    CHECK_THROWS_AS(normalize(Integer(0), Integer(0)), ValidationError);
    CHECK(ProjPoint::parse("inf").is_infinity());
    CHECK(ProjPoint::parse("-6/4") == ProjPoint(Rational(-3, 2)));
    CHECK(ProjPoint::parse("[2:-4]") == ProjPoint(Rational(-1, 2)));
}

TEST_CASE("normalization agrees with gcd reduction") {
    for (long a = -30; a <= 30; a += 7) {
        for (long b = -30; b <= 30; b += 5) {
            if (a == 0 && b == 0) continue;
            const auto [x, y] = oracle::reduce(a, b);
            const ProjPoint p = normalize(Integer(a), Integer(b));
            if (b == 0) {
                CHECK(p.is_infinity());
            } else {
                CHECK(p.x() == x);
                CHECK(p.y() == y);
            }
        }
    }
}

TEST_CASE("height worked values") {
    CHECK(is_zero(height(ProjPoint(Integer(1), Integer(1)))));
    CHECK(is_zero(height(ProjPoint(Rational(8, 3))) - LogValue::log_of(Integer(8))));
    CHECK(is_zero(height(ProjPoint::infinity())));
    Sampler s(9);
    for (int i = 0; i < 300; ++i) {
        const long a = s.between(-100000, 100000), b = s.between(1, 100000);
        const ProjPoint p(ratio(Integer(a), Integer(b)));
        if (a == 0) continue;
        CHECK(height(p).to_double() == doctest::Approx(oracle::height(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("chordal distance worked values") {
    const ProjPoint zero, one(Rational(1)), three(Rational(3));
    CHECK(is_zero(log_chordal(zero, ProjPoint::infinity(), INF).value()));
    const auto d = log_chordal(one, three, Place::prime(2));
    CHECK(d.finite_part == 1);
    CHECK(is_zero(d.value() - LogValue::log_of(Integer(2))));
    const auto e = log_chordal(one, zero, INF);
    CHECK(e.arch_square == Rational(1, 2));
    CHECK(is_zero(e.value() - LogValue::log_of(Integer(2)) * Rational(1, 2)));
    CHECK(log_chordal(one, one, INF).infinite);
    CHECK(log_chordal(one, one, INF).to_interval().lo() == std::numeric_limits<double>::infinity());
}

TEST_CASE("archimedean chordal distance against floating point") {
    Sampler s(13);
    for (int i = 0; i < 500; ++i) {
        const ProjPoint p = s.point(20), q = s.point(20);
        if (p == q) continue;
        const double rho = oracle::chordal_inf(p.x().get_d(), p.y().get_d(), q.x().get_d(), q.y().get_d());
        CHECK(log_chordal(p, q, INF).value().to_double() == doctest::Approx(-std::log(rho)).epsilon(1e-9));
    }
}

TEST_CASE("finite chordal distance against repeated division") {
    Sampler s(17);
    for (int i = 0; i < 500; ++i) {
        const long a = s.between(-5000, 5000), b = s.between(1, 5000), c = s.between(-5000, 5000), e = s.between(1, 5000);
        const auto [x1, y1] = oracle::reduce(a, b);
        const auto [x2, y2] = oracle::reduce(c, e);
        if (x1 * y2 == x2 * y1) continue;
        for (long p : {2, 3, 5}) {
            // rho_p = |x1 y2 - x2 y1|_p when both points are p-integral-normalized
            const auto d = log_chordal(ProjPoint(Integer(x1), Integer(y1)), ProjPoint(Integer(x2), Integer(y2)),
                                       Place::prime(p));
            CHECK(d.finite_part == oracle::valuation(x1 * y2 - x2 * y1, p));
        }
    }
}
