#include "orbitint/ratmap.hpp"

#include "orbitint/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitint {

namespace {

std::size_t nonzero_terms(const IntPoly& p) {
    return static_cast<std::size_t>(
        std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Integer& a) { return a != 0; }));
}

// Homogeneous Horner: sum_i a_i x^i y^(d-i).
Integer eval_form(const IntPoly& p, unsigned d, const Integer& x, const std::vector<Integer>& ypow) {
    Integer acc = p[d];
    for (unsigned i = d; i-- > 0;) {
        acc *= x;
        if (i < p.size() && p.coeffs()[i] != 0) acc += p.coeffs()[i] * ypow[d - i];
    }
    return acc;
}

unsigned affine_order(const RatMap& phi, const Rational& z0) {
    const RatPoly f = to_rational(phi.f());
    const RatPoly g = to_rational(phi.g());
    const Rational g0 = g(z0);
    if (g0 == 0) throw std::logic_error("affine_order: pole at the base point");
    const Rational f0 = f(z0);
    const RatPoly numerator = f.taylor_shift(z0) * g0 - g.taylor_shift(z0) * f0;
    return static_cast<unsigned>(numerator.low_order());
}

}  // namespace

RatMap::RatMap(IntPoly f, IntPoly g) : f_(std::move(f)), g_(std::move(g)) {
    Integer common = gcd(content(f_), content(g_));
    if (g_.leading() < 0) common = -common;
    if (common != 1) {
        std::vector<Integer> fc = f_.coeffs();
        std::vector<Integer> gc = g_.coeffs();
        for (auto& a : fc) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), common.get_mpz_t());
        for (auto& a : gc) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), common.get_mpz_t());
        f_ = IntPoly(std::move(fc));
        g_ = IntPoly(std::move(gc));
    }
    degree_ = static_cast<unsigned>(std::max(f_.degree(), g_.degree()));
}

RatMap RatMap::make(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw ValidationError("rational map with zero denominator");
    if (std::max(f.degree(), g.degree()) < 1) throw ValidationError("constant map (degree 0)");
    const RatPoly common = gcd(f, g);
    if (common.degree() >= 1) {
        throw ValidationError("f and g share a common factor", clear_denominators(common).to_string());
    }
    // Joint denominator clearing keeps the ratio f/g.
    Integer den = 1;
    for (const auto& a : f.coeffs()) den = lcm(den, Integer(a.get_den()));
    for (const auto& a : g.coeffs()) den = lcm(den, Integer(a.get_den()));
    auto to_int = [&](const RatPoly& p) {
        std::vector<Integer> c;
        for (const auto& a : p.coeffs()) c.push_back(Integer(a.get_num() * (den / a.get_den())));
        return IntPoly(std::move(c));
    };
    return RatMap(to_int(f), to_int(g));
}

RatMap RatMap::make(const std::vector<Rational>& f, const std::vector<Rational>& g) {
    return make(RatPoly(f), RatPoly(g));
}

RatMap RatMap::mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    if (a * d - b * c == 0) throw ValidationError("degenerate Mobius transformation");
    return make(RatPoly{b, a}, RatPoly{d, c});
}

std::string RatMap::to_string() const {
    if (g_.degree() == 0 && g_[0] == 1) return f_.to_string();
    auto wrap = [](const IntPoly& p) {
        const std::string s = p.to_string();
        return nonzero_terms(p) > 1 ? "(" + s + ")" : s;
    };
    return wrap(f_) + "/" + wrap(g_);
}

MapSystem::MapSystem(std::vector<RatMap> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw ValidationError("a map system needs at least one map");
    for (const auto& phi : maps_) {
        if (phi.degree() < 2) {
            throw ValidationError("map " + phi.to_string() + " has degree < 2; systems require degree >= 2");
        }
    }
    std::stable_sort(maps_.begin(), maps_.end(),
                     [](const RatMap& a, const RatMap& b) { return a.degree() < b.degree(); });
}

const RatMap& MapSystem::letter(int j) const {
    if (j < 1 || static_cast<std::size_t>(j) > maps_.size()) {
        throw ValidationError("letter " + std::to_string(j) + " out of range 1.." + std::to_string(maps_.size()));
    }
    return maps_[static_cast<std::size_t>(j - 1)];
}

std::vector<unsigned> MapSystem::degrees() const {
    std::vector<unsigned> out;
    for (const auto& phi : maps_) out.push_back(phi.degree());
    return out;
}

unsigned long MapSystem::degree_sum() const {
    unsigned long sum = 0;
    for (const auto& phi : maps_) sum += phi.degree();
    return sum;
}

ProjPoint eval(const RatMap& phi, const ProjPoint& p) {
    const unsigned d = phi.degree();
    std::vector<Integer> ypow(d + 1);
    ypow[0] = 1;
    for (unsigned i = 1; i <= d; ++i) ypow[i] = ypow[i - 1] * p.y();
    return ProjPoint(eval_form(phi.f(), d, p.x(), ypow), eval_form(phi.g(), d, p.x(), ypow));
}

RatMap compose(const RatMap& outer, const RatMap& inner) {
    const unsigned d = outer.degree();
    std::vector<IntPoly> ppow(d + 1), qpow(d + 1);
    ppow[0] = IntPoly::constant(Integer(1));
    qpow[0] = IntPoly::constant(Integer(1));
    for (unsigned i = 1; i <= d; ++i) {
        ppow[i] = ppow[i - 1] * inner.f();
        qpow[i] = qpow[i - 1] * inner.g();
    }
    auto substitute = [&](const IntPoly& poly) {
        IntPoly acc;
        for (unsigned i = 0; i <= d; ++i) {
            const Integer a = poly[i];
            if (a != 0) acc += ppow[i] * qpow[d - i] * a;
        }
        return acc;
    };
    RatMap result(substitute(outer.f()), substitute(outer.g()));
    if (result.degree() != outer.degree() * inner.degree()) {
        throw std::logic_error("compose: degree is not multiplicative");
    }
    return result;
}

LogValue map_height(const RatMap& phi) {
    Integer largest = 0;
    for (const auto& a : phi.f().coeffs()) largest = std::max(largest, abs_value(a));
    for (const auto& a : phi.g().coeffs()) largest = std::max(largest, abs_value(a));
    return LogValue::log_of(largest);
}

LogValue system_height(const MapSystem& system) {
    Integer largest = 0;
    for (const auto& phi : system.maps()) {
        for (const auto& a : phi.f().coeffs()) largest = std::max(largest, abs_value(a));
        for (const auto& a : phi.g().coeffs()) largest = std::max(largest, abs_value(a));
    }
    return LogValue::log_of(largest);
}

unsigned ramification_index_conjugated(const RatMap& phi, const ProjPoint& p, const Rational& c) {
    const ProjPoint image = eval(phi, p);
    const ProjPoint cpt(c);
    if (p == cpt || image == cpt) {
        throw ValidationError("conjugation constant coincides with P or phi(P)");
    }
    // L(z) = (c z + 1)/z, L^{-1}(w) = 1/(w - c).
    const RatMap l = RatMap::mobius(c, Rational(1), Rational(1), Rational(0));
    const RatMap l_inv = RatMap::mobius(Rational(0), Rational(1), Rational(1), Rational(-c));
    const RatMap conjugate = compose(l_inv, compose(phi, l));
    const ProjPoint beta = eval(l_inv, p);
    return affine_order(conjugate, *beta.affine());
}

unsigned ramification_index(const RatMap& phi, const ProjPoint& p) {
    const ProjPoint image = eval(phi, p);
    if (!p.is_infinity() && !image.is_infinity()) return affine_order(phi, *p.affine());
    for (long c = 0;; ++c) {
        const ProjPoint cpt{Rational(c)};
        if (cpt != p && cpt != image) return ramification_index_conjugated(phi, p, Rational(c));
    }
}

bool is_totally_ramified(const RatMap& phi, const ProjPoint& p) {
    return ramification_index(phi, p) == phi.degree();
}

IntPoly wronskian(const RatMap& phi) {
    return phi.f().derivative() * phi.g() - phi.f() * phi.g().derivative();
}

}  // namespace orbitint
