#include "orbitint/words.hpp"

#include "orbitint/errors.hpp"

namespace orbitint {

Word::Word(std::vector<int> letters, Mode mode) : letters_(std::move(letters)), mode_(mode) {
    if (mode_ == Mode::Periodic && letters_.empty()) throw ValidationError("a periodic word needs letters");
    for (int a : letters_) {
        if (a < 1) throw ValidationError("word letters are 1-based, got " + std::to_string(a));
    }
}

int Word::letter_at(std::size_t i) const {
    if (is_periodic()) return letters_[i % letters_.size()];
    if (i >= letters_.size()) {
        throw ValidationError("finite word " + to_string() + " has no letter at position " + std::to_string(i + 1));
    }
    return letters_[i];
}

Word Word::shift() const {
    if (letters_.empty()) throw ValidationError("shift of the empty word");
    std::vector<int> out(letters_.begin() + 1, letters_.end());
    if (is_periodic()) out.push_back(letters_.front());
    return Word(std::move(out), mode_);
}

Word Word::shift(std::size_t n) const {
    if (is_periodic()) {
        n %= letters_.size();
        std::vector<int> out(letters_.begin() + static_cast<long>(n), letters_.end());
        out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<long>(n));
        return Word(std::move(out), mode_);
    }
    if (n > letters_.size()) throw ValidationError("shift past the end of a finite word");
    return Word(std::vector<int>(letters_.begin() + static_cast<long>(n), letters_.end()), mode_);
}

void Word::validate(std::size_t k) const {
    for (int a : letters_) {
        if (static_cast<std::size_t>(a) > k) {
            throw ValidationError("letter " + std::to_string(a) + " exceeds system size " + std::to_string(k));
        }
    }
}

std::string Word::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(letters_[i]);
    }
    s += "]";
    if (is_periodic()) s += "^per";
    return s;
}

Word concat(const Word& u, const Word& v) {
    if (u.is_periodic() || v.is_periodic()) throw ValidationError("concat needs finite words");
    std::vector<int> out = u.letters();
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word::finite(std::move(out));
}

std::vector<Word> enumerate_words(std::size_t k, std::size_t n) {
    if (k < 1) throw ValidationError("enumerate_words needs k >= 1");
    std::vector<Word> out;
    std::vector<int> cur(n, 1);
    for (;;) {
        out.push_back(Word::finite(cur));
        // odometer, last position fastest
        std::size_t i = n;
        while (i > 0 && static_cast<std::size_t>(cur[i - 1]) == k) cur[--i] = 1;
        if (i == 0) return out;
        ++cur[i - 1];
    }
}

Integer degree_product(const MapSystem& system, const Word& w, std::size_t n) {
    Integer d = 1;
    for (std::size_t i = 0; i < n; ++i) d *= system.degree_of_letter(w.letter_at(i));
    return d;
}

Word sample_word(const MapSystem& system, std::size_t n, std::mt19937_64& rng) {
    const auto degrees = system.degrees();
    std::discrete_distribution<int> pick(degrees.begin(), degrees.end());
    std::vector<int> letters(n);
    for (auto& a : letters) a = pick(rng) + 1;
    return Word::finite(std::move(letters));
}

}  // namespace orbitint
