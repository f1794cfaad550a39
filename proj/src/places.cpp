#include "orbitint/places.hpp"

#include "orbitint/errors.hpp"
#include "orbitint/factor.hpp"

#include <algorithm>

namespace orbitint {

Place Place::prime(const Integer& p) {
    if (!is_probable_prime(p)) throw ValidationError("not a prime: " + orbitint::to_string(p));
    Place v;
    v.kind_ = Kind::Finite;
    v.p_ = p;
    return v;
}

Place Place::parse(std::string_view text) {
    if (text == "inf") return infinity();
    if (text.size() >= 2 && text.front() == 'p') return prime(parse_integer(text.substr(1)));
    throw ValidationError("malformed place '" + std::string(text) + "' (expected \"inf\" or \"p<prime>\")");
}

std::string Place::to_string() const {
    return is_archimedean() ? "inf" : "p" + orbitint::to_string(p_);
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.is_archimedean() != b.is_archimedean()) {
        return a.is_archimedean() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const int c = cmp(a.p_, b.p_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

PlaceSet::PlaceSet(std::vector<Place> places) : places_(std::move(places)) {
    std::sort(places_.begin(), places_.end());
    places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
}

PlaceSet PlaceSet::parse(const std::vector<std::string>& names) {
    std::vector<Place> places;
    places.reserve(names.size());
    for (const auto& name : names) places.push_back(Place::parse(name));
    return PlaceSet(std::move(places));
}

bool PlaceSet::contains(const Place& v) const {
    return std::binary_search(places_.begin(), places_.end(), v);
}

bool PlaceSet::contains_infinity() const {
    return !places_.empty() && places_.front().is_archimedean();
}

std::vector<std::string> PlaceSet::names() const {
    std::vector<std::string> out;
    for (const auto& v : places_) out.push_back(v.to_string());
    return out;
}

long padic_valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw ValidationError("p-adic valuation of 0");
    Integer rest = n;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long padic_valuation(const Rational& x, const Integer& p) {
    if (x == 0) throw ValidationError("p-adic valuation of 0");
    return padic_valuation(Integer(x.get_num()), p) - padic_valuation(Integer(x.get_den()), p);
}

ExtendedLog abs_log(const Rational& x, const Place& v) {
    if (x == 0) return ExtendedLog::minus_infinity();
    if (v.is_archimedean()) return {ExtendedLog::Kind::Finite, LogValue::log_of(abs_value(x))};
    return {ExtendedLog::Kind::Finite, LogValue::log_of(v.p()) * Rational(-padic_valuation(x, v.p()))};
}

LogValue log_plus(const Rational& x, const Place& v) {
    if (x == 0) return {};
    if (v.is_archimedean()) {
        const Rational a = abs_value(x);
        return a > 1 ? LogValue::log_of(a) : LogValue{};
    }
    const long val = padic_valuation(x, v.p());
    return val < 0 ? LogValue::log_of(v.p()) * Rational(-val) : LogValue{};
}

bool is_s_integer(const Rational& x, const PlaceSet& s) {
    if (!s.contains_infinity()) throw ValidationError("S-integrality requires the infinite place in S");
    Integer den = x.get_den();
    for (const auto& v : s) {
        if (v.is_archimedean()) continue;
        mpz_remove(den.get_mpz_t(), den.get_mpz_t(), v.p().get_mpz_t());
    }
    return den == 1;
}

}  // namespace orbitint
