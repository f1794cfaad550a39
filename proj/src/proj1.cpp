#include "orbitint/proj1.hpp"

#include "orbitint/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace orbitint {

ProjPoint::ProjPoint(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_ == 0 && y_ == 0) throw ValidationError("[0:0] is not a point of P^1");
    const Integer g = gcd(x_, y_);
    if (g != 1) {
        x_ /= g;
        y_ /= g;
    }
    if (y_ < 0 || (y_ == 0 && x_ < 0)) {
        x_ = -x_;
        y_ = -y_;
    }
}

ProjPoint::ProjPoint(const Rational& affine) : x_(affine.get_num()), y_(affine.get_den()) {}

ProjPoint ProjPoint::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text == "inf" || text == "infinity") return infinity();
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw ValidationError("malformed point '" + std::string(text) + "'");
        const auto inner = text.substr(1, text.size() - 2);
        const auto colon = inner.find(':');
        if (colon == std::string_view::npos) {
            throw ValidationError("malformed point '" + std::string(text) + "'");
        }
        return ProjPoint(parse_integer(inner.substr(0, colon)), parse_integer(inner.substr(colon + 1)));
    }
    return ProjPoint(parse_rational(text));
}

std::optional<Rational> ProjPoint::affine() const {
    if (is_infinity()) return std::nullopt;
    Rational q(x_, y_);
    q.canonicalize();
    return q;
}

std::size_t ProjPoint::bits() const {
    return std::max(bit_length(x_), bit_length(y_));
}

std::string ProjPoint::to_string() const {
    if (is_infinity()) return "inf";
    if (y_ == 1) return orbitint::to_string(x_);
    return orbitint::to_string(x_) + "/" + orbitint::to_string(y_);
}

std::size_t ProjPointHash::operator()(const ProjPoint& p) const {
    // Low limbs are enough to spread points; equality decides collisions.
    const auto limb = [](const Integer& n) -> std::size_t {
        return mpz_size(n.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(n.get_mpz_t(), 0));
    };
    std::size_t h = limb(p.x()) * 0x9e3779b97f4a7c15ULL;
    h ^= limb(p.y()) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(mpz_sgn(p.x().get_mpz_t()) + 1);
    return h;
}

ProjPoint normalize(const Integer& x, const Integer& y) { return ProjPoint(x, y); }

LogValue height(const ProjPoint& p) {
    return LogValue::log_of(std::max(abs_value(p.x()), abs_value(p.y())));
}

LogValue LocalDistance::value() const {
    if (infinite) throw std::logic_error("LocalDistance::value on coincident points");
    if (place.is_archimedean()) return LogValue::log_of(arch_square) * Rational(-1, 2);
    return LogValue::log_of(place.p()) * Rational(finite_part);
}

Interval LocalDistance::to_interval(mpfr_prec_t precision) const {
    if (infinite) return Interval::positive_infinity(precision);
    return value().to_interval(precision);
}

LocalDistance log_chordal(const ProjPoint& p, const ProjPoint& q, const Place& v) {
    LocalDistance out;
    out.place = v;
    const Integer det = p.x() * q.y() - q.x() * p.y();
    if (det == 0) {
        out.infinite = true;
        return out;
    }
    if (v.is_archimedean()) {
        const Integer n1 = p.x() * p.x() + p.y() * p.y();
        const Integer n2 = q.x() * q.x() + q.y() * q.y();
        out.arch_square = Rational(det * det, n1 * n2);
        out.arch_square.canonicalize();
    } else {
        // Normalized coordinates are coprime integers, so both max-terms are 1.
        out.finite_part = padic_valuation(det, v.p());
    }
    return out;
}

}  // namespace orbitint
