#include "orbitint/errors.hpp"
#include "orbitint/ratmap.hpp"
#include "orbitint/words.hpp"

#include <doctest.h>

using namespace orbitint;

TEST_CASE("shift worked values") {
    CHECK(Word::finite({1, 2, 1}).shift() == Word::finite({2, 1}));
    CHECK(Word::periodic({1, 2}).shift() == Word::periodic({2, 1}));
    CHECK(Word::finite({2}).shift() == Word::finite({}));
    CHECK(Word::periodic({1, 2, 3}).shift(4) == Word::periodic({2, 3, 1}));
    CHECK_THROWS_AS(Word::periodic({}), ValidationError);
}

TEST_CASE("letters of periodic and finite words") {
    const Word w = Word::periodic({1, 2, 3});
    CHECK(w.letter_at(0) == 1);
    CHECK(w.letter_at(4) == 2);
    CHECK_THROWS_AS(Word::finite({1}).letter_at(1), ValidationError);
    CHECK_THROWS_AS(Word::periodic({1, 3}).validate(2), ValidationError);
    CHECK(concat(Word::finite({1}), Word::finite({2, 2})) == Word::finite({1, 2, 2}));
}

TEST_CASE("enumerate_words worked values") {
    CHECK(enumerate_words(2, 0) == std::vector<Word>{Word::finite({})});
    CHECK(enumerate_words(2, 2) == std::vector<Word>{Word::finite({1, 1}), Word::finite({1, 2}),
                                                     Word::finite({2, 1}), Word::finite({2, 2})});
    CHECK(enumerate_words(3, 1) == std::vector<Word>{Word::finite({1}), Word::finite({2}), Word::finite({3})});
    CHECK(enumerate_words(3, 4).size() == 81);
}

TEST_CASE("degree products") {
    const MapSystem sys({RatMap::parse("z^2"), RatMap::parse("z^3")});
    CHECK(degree_product(sys, Word::periodic({1, 2}), 0) == 1);
    CHECK(degree_product(sys, Word::periodic({1, 2}), 5) == 2 * 3 * 2 * 3 * 2);
    CHECK(degree_product(sys, Word::finite({2, 2}), 2) == 9);
}

TEST_CASE("sampled words are weighted by degree") {
    const MapSystem sys({RatMap::parse("z^2"), RatMap::parse("z^3")});
    std::mt19937_64 rng(5);
    std::size_t twos = 0, total = 0;
    for (int i = 0; i < 2000; ++i) {
        const Word w = sample_word(sys, 5, rng);
        for (int a : w.letters()) {
            twos += a == 2;
            ++total;
        }
    }
    // P(letter 2) = 3/5
    CHECK(static_cast<double>(twos) / static_cast<double>(total) == doctest::Approx(0.6).epsilon(0.05));
}
