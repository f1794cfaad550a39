#include "orbitint/errors.hpp"
#include "orbitint/orbits.hpp"

#include <doctest.h>

#include <set>

using namespace orbitint;

namespace {

RatMap M(const char* s) { return RatMap::parse(s); }
ProjPoint Q(long n) { return ProjPoint(Rational(n)); }

std::vector<ProjPoint> points(const std::vector<OrbitRecord>& rs) {
    std::vector<ProjPoint> out;
    for (const auto& r : rs) out.push_back(r.point);
    return out;
}

}  // namespace

TEST_CASE("iterate_word worked values") {
    const MapSystem pm({M("z^2+1"), M("z^2-1")});
    CHECK(points(iterate_word(pm, Word::periodic({1, 2}), Q(0), 2)) == std::vector<ProjPoint>{Q(0), Q(1), Q(0)});
    CHECK(points(iterate_word(pm, Word::periodic({2}), Q(5), 0)) == std::vector<ProjPoint>{Q(5)});
    const MapSystem sq({M("z^2")});
    CHECK(points(iterate_word(sq, Word::finite({1, 1, 1}), Q(2), 3)) ==
          std::vector<ProjPoint>{Q(2), Q(4), Q(16), Q(256)});
    CHECK_THROWS_AS(iterate_word(sq, Word::finite({1}), Q(2), 2), ValidationError);
}

TEST_CASE("enumerate_tree worked values") {
    const MapSystem mono({M("z^2"), M("z^3")});
    const auto dd = enumerate_tree(mono, Q(2), 2, true);
    CHECK(points(dd) == std::vector<ProjPoint>{Q(2), Q(4), Q(16), Q(64), Q(8), Q(512)});
    const auto full = enumerate_tree(mono, Q(2), 2, false);
    CHECK(full.size() == 7);
    CHECK(full[4].word == std::vector<int>{2});
    CHECK(points(enumerate_tree(mono, Q(7), 0, false)) == std::vector<ProjPoint>{Q(7)});
    CHECK(points(enumerate_tree(mono, Q(1), 3, true)) == std::vector<ProjPoint>{Q(1)});
}

TEST_CASE("tree records re-evaluate along their words") {
    const MapSystem sys({M("(z^2+1)/z"), M("z^2-2"), M("1/z^3")});
    for (const auto& r : enumerate_tree(sys, Q(3), 3, false)) {
        ProjPoint q = Q(3);
        for (int a : r.word) q = eval(sys.letter(a), q);
        CHECK(q == r.point);
        CHECK(r.depth == r.word.size());
    }
}

TEST_CASE("tree enumeration is identical across worker counts") {
    const MapSystem sys({M("(z^2+1)/z"), M("z^2-2"), M("1/z^2")});
    const auto ref = enumerate_tree(sys, Q(2), 4, true, {}, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        const auto got = enumerate_tree(sys, Q(2), 4, true, {}, w);
        REQUIRE(got.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK(got[i].word == ref[i].word);
            CHECK(got[i].point == ref[i].point);
        }
    }
}

TEST_CASE("work limits fail loudly") {
    const MapSystem mono({M("z^2"), M("z^3")});
    WorkLimits tight;
    tight.max_nodes = 100;
    CHECK_THROWS_AS(enumerate_tree(mono, Q(2), 10, false, tight), WorkLimitError);
    WorkLimits bits;
    bits.max_bits = 64;
    CHECK_THROWS_AS(iterate_word(mono, Word::periodic({2}), Q(2), 10, bits), WorkLimitError);
    CHECK(tree_size(2, 3) == 15);
    CHECK(tree_size(1, 3) == 4);
    CHECK(tree_size(10, 100) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("hypothesis_check worked values") {
    const auto a = hypothesis_check(MapSystem({M("z^2")}), ProjPoint::infinity(), 4);
    CHECK_FALSE(a.repeated_point_free);
    CHECK_FALSE(a.totally_ramified_free);
    REQUIRE(a.ramification_witness);
    CHECK(a.ramification_witness->second.is_infinity());

    const auto b = hypothesis_check(MapSystem({M("(z^2+1)/z")}), ProjPoint::infinity(), 4);
    CHECK_FALSE(b.repeated_point_free);
    CHECK(b.totally_ramified_free);

    const MapSystem inv({M("1/z^2")});
    const auto c = hypothesis_check(inv, ProjPoint::infinity(), 4);
    CHECK_FALSE(c.repeated_point_free);
    CHECK_FALSE(c.totally_ramified_free);
    REQUIRE(c.repeat_witness);
    ProjPoint x = ProjPoint::infinity(), y = ProjPoint::infinity();
    for (int l : c.repeat_witness->first) x = eval(inv.letter(l), x);
    for (int l : c.repeat_witness->second) y = eval(inv.letter(l), y);
    CHECK(x == y);
    CHECK(c.depth_checked == 4);
}

TEST_CASE("preperiodicity worked values") {
    const auto a = preperiodicity_check(MapSystem({M("z^2-1")}), Word::periodic({1}), Q(0), 10);
    CHECK(a.kind == PreperiodicityVerdict::Kind::Preperiodic);
    CHECK(a.tail == 0);
    CHECK(a.cycle == std::vector<ProjPoint>{Q(0), Q(-1)});

    const auto b = preperiodicity_check(MapSystem({M("z^2")}), Word::periodic({1}), Q(2), 10);
    CHECK(b.kind == PreperiodicityVerdict::Kind::WanderingCertified);
    REQUIRE(b.height);
    CHECK(b.height->value.lo_positive());

    const auto c = preperiodicity_check(MapSystem({M("z^2")}), Word::periodic({1}), Q(1), 10);
    CHECK(c.kind == PreperiodicityVerdict::Kind::Preperiodic);
    CHECK(c.cycle == std::vector<ProjPoint>{Q(1)});

    // word period 2: 0 -> 1 -> 0 under [z^2+1, z^2-1]
    const auto d = preperiodicity_check(MapSystem({M("z^2+1"), M("z^2-1")}), Word::periodic({1, 2}), Q(0), 10);
    CHECK(d.kind == PreperiodicityVerdict::Kind::Preperiodic);
}
