// Recursive-descent parser for rational-function display strings over Q(z):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | juxtaposed power)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' digits)?
//   primary := digits | 'z' | '(' expr ')'
// Values are kept as unreduced pairs (num, den) so that make() sees, and
// rejects, common factors the user wrote.

#include "orbitint/errors.hpp"
#include "orbitint/ratmap.hpp"

#include <cctype>

namespace orbitint {

namespace {

struct Fraction {
    RatPoly num;
    RatPoly den;
};

Fraction add(const Fraction& a, const Fraction& b, bool subtract) {
    const RatPoly rhs = subtract ? -b.num : b.num;
    if (a.den == b.den) return {a.num + rhs, a.den};
    return {a.num * b.den + rhs * a.den, a.den * b.den};
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Fraction parse() {
        Fraction v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("cannot parse map '" + std::string(s_) + "': " + why + " at offset " +
                              std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    Fraction expr() {
        Fraction v = term();
        for (;;) {
            if (accept('+')) {
                v = add(v, term(), false);
            } else if (accept('-')) {
                v = add(v, term(), true);
            } else {
                return v;
            }
        }
    }

    Fraction term() {
        Fraction v = unary();
        for (;;) {
            if (accept('*')) {
                Fraction r = unary();
                v = {v.num * r.num, v.den * r.den};
            } else if (accept('/')) {
                Fraction r = unary();
                if (r.num.is_zero()) fail("division by zero");
                v = {v.num * r.den, v.den * r.num};
            } else if (starts_primary()) {
                Fraction r = power();
                v = {v.num * r.num, v.den * r.den};
            } else {
                return v;
            }
        }
    }

    Fraction unary() {
        if (accept('-')) {
            Fraction v = unary();
            return {-v.num, v.den};
        }
        if (accept('+')) return unary();
        return power();
    }

    Fraction power() {
        Fraction base = primary();
        if (!accept('^')) return base;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer exponent");
        const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
        if (e > 4096) fail("exponent too large");
        return {base.num.pow(static_cast<unsigned>(e)), base.den.pow(static_cast<unsigned>(e))};
    }

    Fraction primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        const RatPoly one = RatPoly::constant(Rational(1));
        if (c == 'z') {
            ++pos_;
            return {RatPoly::monomial(Rational(1), 1), one};
        }
        if (c == '(') {
            ++pos_;
            Fraction v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {RatPoly::constant(Rational(parse_integer(s_.substr(start, pos_ - start)))), one};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatMap RatMap::parse(std::string_view text) {
    Fraction v = Parser(text).parse();
    return make(v.num, v.den);
}

}  // namespace orbitint
