#pragma once

#include "orbitint/log_value.hpp"
#include "orbitint/poly.hpp"
#include "orbitint/proj1.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orbitint {

/// Rational self-map phi = f/g of P^1 over Q in normalized form: f, g integer
/// polynomials, coprime over Q, jointly primitive, with the leading nonzero
/// coefficient of g positive. degree() = max(deg f, deg g) >= 1.
class RatMap {
public:
    /// Normalizes and validates. Throws ValidationError for g = 0, a constant
    /// map, or a common factor (the primitive gcd is the error's witness).
    static RatMap make(const RatPoly& f, const RatPoly& g);
    /// Ascending coefficient lists.
    static RatMap make(const std::vector<Rational>& f, const std::vector<Rational>& g);
    /// Display string such as "(z^2+1)/z", "1/z^2" or "3z^2-1".
    static RatMap parse(std::string_view text);
    /// (a z + b) / (c z + d) with ad - bc != 0.
    static RatMap mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

    const IntPoly& f() const { return f_; }
    const IntPoly& g() const { return g_; }
    unsigned degree() const { return degree_; }

    std::string to_string() const;

    friend bool operator==(const RatMap&, const RatMap&) = default;

private:
    friend RatMap compose(const RatMap& outer, const RatMap& inner);
    // Coprimality is the caller's responsibility; only content and sign are fixed here.
    RatMap(IntPoly f, IntPoly g);

    IntPoly f_;
    IntPoly g_;
    unsigned degree_ = 0;
};

/// Finite system F = {phi_1, ..., phi_k} of maps of degree >= 2, stored sorted
/// by degree ascending (stable), so maps()[0] has the least degree d_1.
class MapSystem {
public:
    explicit MapSystem(std::vector<RatMap> maps);

    std::size_t size() const { return maps_.size(); }
    const std::vector<RatMap>& maps() const { return maps_; }
    /// 1-based letter, as used in words.
    const RatMap& letter(int j) const;
    unsigned degree_of_letter(int j) const { return letter(j).degree(); }
    std::vector<unsigned> degrees() const;
    unsigned min_degree() const { return maps_.front().degree(); }
    unsigned max_degree() const { return maps_.back().degree(); }
    /// D = d_1 + ... + d_k
    unsigned long degree_sum() const;

private:
    std::vector<RatMap> maps_;
};

/// Evaluates the degree-d homogenizations at [x : y] and normalizes.
ProjPoint eval(const RatMap& phi, const ProjPoint& p);

/// outer o inner.
RatMap compose(const RatMap& outer, const RatMap& inner);

/// log of the largest coefficient magnitude of f and g.
LogValue map_height(const RatMap& phi);
/// max over members.
LogValue system_height(const MapSystem& system);

/// e_P(phi) = ord_P(phi(z) - phi(P)). When P or phi(P) is infinity the map is
/// first conjugated by L(z) = c + 1/z with the smallest c in {0, 1, 2, ...}
/// avoiding z(P) and z(phi(P)).
unsigned ramification_index(const RatMap& phi, const ProjPoint& p);
/// e_P(phi) computed after conjugating by L(z) = c + 1/z, whatever P is.
/// Throws ValidationError if c equals z(P) or z(phi(P)).
unsigned ramification_index_conjugated(const RatMap& phi, const ProjPoint& p, const Rational& c);
bool is_totally_ramified(const RatMap& phi, const ProjPoint& p);

/// W = f' g - f g'.
IntPoly wronskian(const RatMap& phi);

}  // namespace orbitint
