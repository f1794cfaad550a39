#pragma once

#include "orbitint/log_value.hpp"
#include "orbitint/numeric.hpp"
#include "orbitint/places.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace orbitint {

/// Point [x : y] of P^1(Q) in canonical form: gcd(x, y) = 1 and either y > 0,
/// or y = 0 and x = 1. The affine point a/b is [a : b]; infinity is [1 : 0].
class ProjPoint {
public:
    /// [0 : 1]
    ProjPoint() : x_(0), y_(1) {}
    /// Normalizes (x, y); throws ValidationError for (0, 0).
    ProjPoint(Integer x, Integer y);
    explicit ProjPoint(const Rational& affine);

    static ProjPoint infinity() { return ProjPoint(Integer(1), Integer(0)); }
    /// "a/b", "a", "inf", or "[a:b]".
    static ProjPoint parse(std::string_view text);

    const Integer& x() const { return x_; }
    const Integer& y() const { return y_; }
    bool is_infinity() const { return y_ == 0; }
    /// z(P) = x / y; nullopt at infinity.
    std::optional<Rational> affine() const;

    /// Bit length of max(|x|, |y|).
    std::size_t bits() const;

    /// "a/b", "a" or "inf".
    std::string to_string() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    Integer x_;
    Integer y_;
};

struct ProjPointHash {
    std::size_t operator()(const ProjPoint& p) const;
};

/// Normalizes a coordinate pair; same as the ProjPoint constructor.
ProjPoint normalize(const Integer& x, const Integer& y);

/// h(P) = log max(|x|, |y|) for normalized coordinates.
LogValue height(const ProjPoint& p);

/// Local chordal distance lambda_v(P, Q) = -log rho_v(P, Q), kept exact:
/// at a prime, lambda_p = finite_part * log p with finite_part = v_p(x1 y2 - x2 y1);
/// at infinity, lambda = -1/2 log(arch_square) where arch_square = rho^2 is rational.
struct LocalDistance {
    Place place = Place::infinity();
    bool infinite = false;  // P == Q
    long finite_part = 0;
    Rational arch_square = 1;

    /// Throws std::logic_error when infinite.
    LogValue value() const;
    /// +infinity is represented by an interval with both ends at +inf.
    Interval to_interval(mpfr_prec_t precision = kDefaultPrecision) const;
};

LocalDistance log_chordal(const ProjPoint& p, const ProjPoint& q, const Place& v);

}  // namespace orbitint
