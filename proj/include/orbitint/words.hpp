#pragma once

#include "orbitint/numeric.hpp"
#include "orbitint/ratmap.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace orbitint {

/// A word over {1..k}. Finite words are used as given; periodic words stand for
/// the infinite extension seed seed seed ...
class Word {
public:
    enum class Mode { Finite, Periodic };

    Word() = default;
    /// Throws ValidationError for a periodic word without letters or a letter < 1.
    Word(std::vector<int> letters, Mode mode);
    static Word finite(std::vector<int> letters) { return Word(std::move(letters), Mode::Finite); }
    static Word periodic(std::vector<int> letters) { return Word(std::move(letters), Mode::Periodic); }

    const std::vector<int>& letters() const { return letters_; }
    Mode mode() const { return mode_; }
    bool is_periodic() const { return mode_ == Mode::Periodic; }
    /// Seed length (the period for periodic words).
    std::size_t size() const { return letters_.size(); }
    /// Letter w_{i+1} (0-based index i). Finite words throw past their end.
    int letter_at(std::size_t i) const;
    /// Whether letter_at(i) is defined.
    bool has_letter(std::size_t i) const { return is_periodic() || i < letters_.size(); }

    /// Drops the first letter; periodic words rotate. Throws on an empty finite word.
    Word shift() const;
    Word shift(std::size_t n) const;

    /// Throws ValidationError if a letter exceeds k.
    void validate(std::size_t k) const;

    /// "[1,2]" or "[1,2]^per".
    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
    Mode mode_ = Mode::Finite;
};

/// Concatenation of two finite words.
Word concat(const Word& u, const Word& v);

/// All k^n finite words of length n, lexicographic.
std::vector<Word> enumerate_words(std::size_t k, std::size_t n);

/// D_n = d_{w_1} ... d_{w_n}; D_0 = 1.
Integer degree_product(const MapSystem& system, const Word& w, std::size_t n);

/// First n letters of w drawn independently with P(j) = d_j / D.
Word sample_word(const MapSystem& system, std::size_t n, std::mt19937_64& rng);

}  // namespace orbitint
