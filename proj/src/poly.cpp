#include "orbitint/poly.hpp"

#include "orbitint/errors.hpp"
#include "orbitint/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitint {

namespace {

template <class Scalar>
std::string poly_to_string(const std::vector<Scalar>& c, const char* var) {
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        const Scalar& a = c[k];
        if (a == 0) continue;
        const bool negative = a < 0;
        const Scalar mag = negative ? Scalar(-a) : a;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (k == 0 || mag != 1) {
            out += orbitint::to_string(mag);
        }
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

template <>
std::string Poly<Integer>::to_string(const char* var) const { return poly_to_string(c_, var); }
template <>
std::string Poly<Rational>::to_string(const char* var) const { return poly_to_string(c_, var); }

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& a : p.coeffs()) g = gcd(g, a);
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Integer> c = p.coeffs();
    for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& a : p.coeffs()) c.emplace_back(a);
    return RatPoly(std::move(c));
}

IntPoly clear_denominators(const RatPoly& p) {
    Integer common = 1;
    for (const auto& a : p.coeffs()) common = lcm(common, Integer(a.get_den()));
    std::vector<Integer> c;
    c.reserve(p.size());
    for (const auto& a : p.coeffs()) c.push_back(Integer(a.get_num() * (common / a.get_den())));
    return primitive_part(IntPoly(std::move(c)));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    const Rational lead = b.leading();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + db] / lead;
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    }
    rem.resize(db);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a;
    RatPoly y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * Rational(1 / x.leading());
}

std::vector<std::pair<Rational, unsigned>> rational_roots(const IntPoly& p) {
    if (p.is_zero()) throw ValidationError("rational_roots of the zero polynomial");
    std::vector<std::pair<Rational, unsigned>> roots;
    const std::size_t zeros = p.low_order();
    if (zeros > 0) roots.emplace_back(Rational(0), static_cast<unsigned>(zeros));
    std::vector<Integer> rest(p.coeffs().begin() + static_cast<long>(zeros), p.coeffs().end());
    RatPoly q = to_rational(primitive_part(IntPoly(rest)));
    if (q.degree() <= 0) return roots;

    const auto numerators = divisors(Integer(q[0].get_num()));
    const auto denominators = divisors(Integer(q.leading().get_num()));
    std::vector<Rational> candidates;
    for (const auto& a : numerators) {
        for (const auto& b : denominators) {
            Rational r(a, b);
            r.canonicalize();
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        unsigned mult = 0;
        const RatPoly linear{Rational(-r), Rational(1)};
        while (q.degree() >= 1 && q(r) == 0) {
            q = divmod(q, linear).first;
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace orbitint
