#include "orbitint/log_value.hpp"

#include <stdexcept>

namespace orbitint {

LogValue LogValue::log_of(const Integer& n) {
    if (n <= 0) throw std::invalid_argument("LogValue::log_of: non-positive argument");
    LogValue v;
    v.add_term(n, Rational(1));
    return v;
}

LogValue LogValue::log_of(const Rational& q) {
    if (q <= 0) throw std::invalid_argument("LogValue::log_of: non-positive argument");
    LogValue v;
    v.add_term(Integer(q.get_num()), Rational(1));
    v.add_term(Integer(q.get_den()), Rational(-1));
    return v;
}

void LogValue::add_term(const Integer& arg, const Rational& coeff) {
    if (arg == 1 || coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(arg, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LogValue& LogValue::operator+=(const LogValue& rhs) {
    for (const auto& [arg, coeff] : rhs.terms_) add_term(arg, coeff);
    return *this;
}

LogValue& LogValue::operator-=(const LogValue& rhs) {
    for (const auto& [arg, coeff] : rhs.terms_) add_term(arg, Rational(-coeff));
    return *this;
}

LogValue& LogValue::operator*=(const Rational& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [arg, coeff] : terms_) coeff *= scale;
    return *this;
}

Interval LogValue::to_interval(mpfr_prec_t precision) const {
    Interval sum(precision);
    for (const auto& [arg, coeff] : terms_) sum += Interval::log_of(arg, precision) * coeff;
    return sum;
}

double LogValue::to_double() const { return to_interval(kDefaultPrecision).mid(); }

std::optional<int> LogValue::exact_sign(std::size_t bit_budget) const {
    if (terms_.empty()) return 0;
    Integer common = 1;
    for (const auto& [arg, coeff] : terms_) common = lcm(common, Integer(coeff.get_den()));

    // sum c_i log a_i >= 0  <=>  prod_{e_i>0} a_i^{e_i} >= prod_{e_i<0} a_i^{-e_i}
    std::size_t bits = 0;
    for (const auto& [arg, coeff] : terms_) {
        Integer e = abs_value(Integer(coeff.get_num() * (common / coeff.get_den())));
        if (!e.fits_ulong_p()) return std::nullopt;
        const double estimate = e.get_d() * static_cast<double>(bit_length(arg));
        if (estimate > static_cast<double>(bit_budget)) return std::nullopt;
        bits += static_cast<std::size_t>(estimate);
        if (bits > bit_budget) return std::nullopt;
    }
    Integer positive = 1;
    Integer negative = 1;
    for (const auto& [arg, coeff] : terms_) {
        Integer e = Integer(coeff.get_num() * (common / coeff.get_den()));
        if (e > 0) {
            positive *= pow(arg, e.get_ui());
        } else {
            negative *= pow(arg, Integer(-e).get_ui());
        }
    }
    const int c = cmp(positive, negative);
    return (c > 0) - (c < 0);
}

std::string LogValue::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [arg, coeff] : terms_) {
        Rational mag = abs_value(coeff);
        if (first) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        if (mag != 1) out += orbitint::to_string(mag) + "*";
        out += "log(" + orbitint::to_string(arg) + ")";
        first = false;
    }
    return out;
}

std::optional<int> compare(const LogValue& a, const LogValue& b, mpfr_prec_t precision) {
    const LogValue diff = a - b;
    if (diff.is_structurally_zero()) return 0;
    const Interval enclosure = diff.to_interval(precision);
    if (enclosure.lo_positive()) return 1;
    if (enclosure.hi() < 0) return -1;
    return diff.exact_sign();
}

}  // namespace orbitint
