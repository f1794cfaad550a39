#include "orbitint/numeric.hpp"

#include "orbitint/errors.hpp"

#include <cctype>

namespace orbitint {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string s = trim(text);
    if (!is_integer_text(s)) throw ValidationError("malformed integer: '" + s + "'");
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    std::string s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(std::string_view(s).substr(0, slash));
    Integer den = parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::size_t bit_length(const Integer& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw ValidationError("0 raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational r(pow(Integer(base.get_num()), static_cast<unsigned long>(exponent)),
               pow(Integer(base.get_den()), static_cast<unsigned long>(exponent)));
    r.canonicalize();
    return r;
}

}  // namespace orbitint
