#pragma once

#include "orbitint/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace orbitint {

/// Dense univariate polynomial, coefficients in ascending order of degree.
/// The zero polynomial has no coefficients; otherwise the top one is nonzero.
template <class Scalar>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Scalar& a) { return Poly(std::vector<Scalar>{a}); }
    static Poly monomial(const Scalar& a, std::size_t degree) {
        std::vector<Scalar> c(degree + 1, Scalar(0));
        c[degree] = a;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    /// Coefficient of z^i (0 beyond the degree).
    Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
    const Scalar& leading() const { return c_.back(); }

    Poly& operator+=(const Poly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Scalar& s) {
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    Poly operator-() const { return *this * Scalar(-1); }
    friend bool operator==(const Poly&, const Poly&) = default;

    Scalar operator()(const Scalar& z) const {
        Scalar acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Scalar> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
        return Poly(std::move(d));
    }

    /// p(z + shift), by repeated synthetic division.
    Poly taylor_shift(const Scalar& shift) const {
        std::vector<Scalar> c = c_;
        const std::size_t n = c.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = n - 1; j > i; --j) c[j - 1] += shift * c[j];
        }
        return Poly(std::move(c));
    }

    /// Number of vanishing low-order coefficients: the order of the root z = 0.
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        return k;
    }

    Poly pow(unsigned e) const {
        Poly result = constant(Scalar(1));
        Poly base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return result;
    }

    std::string to_string(const char* var = "z") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

/// gcd of all coefficients (0 for the zero polynomial).
Integer content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);
RatPoly to_rational(const IntPoly& p);
/// Clears denominators: returns an integer multiple of p that is primitive.
IntPoly clear_denominators(const RatPoly& p);

/// Quotient and remainder over Q.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd over Q (zero if both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Rational roots of a nonzero integer polynomial with their multiplicities,
/// by the rational root test; requires factoring the extreme coefficients.
std::vector<std::pair<Rational, unsigned>> rational_roots(const IntPoly& p);

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
Integer determinant(std::vector<std::vector<Integer>> m);

}  // namespace orbitint
