#include "orbitint/bounds.hpp"

#include "orbitint/errors.hpp"

#include <cmath>

namespace orbitint {

namespace {

Interval point(double x) { return Interval::from_doubles(x, x); }

Rational four_pow(std::size_t s) { return Rational(pow(Integer(4), s)); }

}  // namespace

std::string to_string(RamificationConstants::Mode mode) {
    return mode == RamificationConstants::Mode::DistinctOrbit ? "distinct-orbit" : "not-totally-ramified";
}

RamificationConstants kappa_constants(const MapSystem& system, RamificationConstants::Mode mode) {
    RamificationConstants k;
    k.mode = mode;
    if (mode == RamificationConstants::Mode::DistinctOrbit) {
        long sum = 0;
        for (unsigned d : system.degrees()) sum += 2 * static_cast<long>(d) - 2;
        k.log_kappa1 = sum;
        k.kappa2 = ratio(1, system.min_degree());
    } else {
        k.log_kappa1 = 0;
        k.kappa2 = 1 - ratio(1, system.max_degree());
    }
    return k;
}

MChoice choose_m(const Rational& eps, const RamificationConstants& kappa) {
    if (eps <= 0 || eps > 1) throw ValidationError("epsilon must lie in (0, 1]");
    if (kappa.mode == RamificationConstants::Mode::DistinctOrbit) {
        throw ValidationError("choose_m needs decaying constants; the distinct-orbit bound is constant in m");
    }
    if (kappa.kappa2 <= 0 || kappa.kappa2 >= 1) throw ValidationError("choose_m needs 0 < kappa2 < 1");

    MChoice out;
    const Rational target = eps / 5;
    const Interval log_target = Interval::log_of(target);
    const Interval log_k1 = Interval::enclose(kappa.log_kappa1);
    const Interval log_k2 = Interval::log_of(kappa.kappa2);
    for (unsigned m = 1;; ++m) {
        bool ok;
        if (kappa.log_kappa1 == 0) {
            ok = pow(kappa.kappa2, static_cast<long>(m)) <= target;
        } else {
            ok = (log_k1 + log_k2 * Rational(m)).hi() <= log_target.lo();
        }
        if (ok) {
            out.m = m;
            break;
        }
        if (m > 10'000'000) throw ValidationError("choose_m: no m below 10^7");
    }
    // (log 5 + log kappa1 + log(1/eps)) / log(1/kappa2) + 1
    out.small_case_bound = (log_k1 - log_target) / (-log_k2) + Interval::enclose(Rational(1));
    return out;
}

LogValue composition_height_bound(unsigned n, unsigned d, const LogValue& hf) {
    if (n < 1 || d < 2) throw ValidationError("composition_height_bound needs n >= 1 and d >= 2");
    const Integer dd(d);
    const Rational a = ratio(pow(dd, n) - 1, dd - 1);
    const Rational b = ratio(dd * dd * (pow(dd, n - 1) - 1), dd - 1);
    return hf * a + LogValue::log_of(Integer(8)) * b;
}

void BoundParameters::validate() const {
    if (roth_r1 <= 0 || roth_r2 <= 0) throw ValidationError("Roth constants must be positive");
    if (roth_mu <= 2) throw ValidationError("mu must exceed 2");
    if (c.size() != 11) throw ValidationError("expected 11 c-constants");
    for (const auto& x : c) {
        if (x <= 0) throw ValidationError("c-constants must be positive");
    }
    if (gamma <= 0) throw ValidationError("gamma must be positive");
}

Interval log_plus_base(const Interval& t, unsigned base) {
    // log+(t) = log max(t, 1)
    return Interval::max(t, Interval::enclose(Rational(1))).log() / Interval::log_of(Integer(base));
}

GammaCountBound gamma_count_bound(const MapSystem& system, const PlaceSet& s, const Rational& eps,
                               const Interval& hhat_a, const LogValue& hf, const Interval& hhat_p,
                               const BoundParameters& params) {
    params.validate();
    if (!hhat_p.lo_positive()) throw ValidationError("gamma_count_bound needs a certified positive canonical height");
    const unsigned d1 = system.min_degree();

    GammaCountBound out;
    out.m = choose_m(eps, kappa_constants(system, RamificationConstants::Mode::NotTotallyRamified)).m;
    const Interval hi_a = point(hhat_a.hi());
    const Interval lo_p = point(hhat_p.lo());
    const Interval h_f = hf.to_interval();
    const Interval one = Interval::enclose(Rational(1));

    out.n_t3 = Interval::enclose(Rational(out.m)) +
               log_plus_base((hi_a * params.ci(5) + h_f * params.ci(6) + Interval::enclose(params.ci(7))) / lo_p, d1);
    out.n_t2 = log_plus_base((hi_a + h_f + one) * (2 * params.ci(10)) / (lo_p * eps), d1);
    out.max_n = Interval::max(Interval::max(Interval::enclose(Rational(out.m)), out.n_t2), out.n_t3);
    out.tail_count = four_pow(s.size()) * params.roth_r1;
    out.total_count = Interval::enclose(out.tail_count + Rational(std::floor(out.max_n.hi())) + 1);
    out.displayed = Interval::enclose(four_pow(s.size()) * params.gamma) + log_plus_base((hi_a + h_f) / lo_p, d1);
    return out;
}

CorollaryBounds corollary_bounds(const MapSystem& system, const PlaceSet& s, const LogValue& hf,
                                 const Interval& hhat_min, const BoundParameters& params) {
    params.validate();
    if (!hhat_min.lo_positive()) throw ValidationError("corollary_bounds needs a certified positive minimal height");
    const unsigned d1 = system.min_degree();
    const Interval l = log_plus_base(hf.to_interval() / point(hhat_min.lo()), d1);

    CorollaryBounds out;
    out.s_integral_bound = Interval::enclose(four_pow(s.size()) * params.gamma) + l;
    out.tree_depth = static_cast<unsigned long>(std::ceil((Interval::enclose(params.gamma) + l).hi())) + 1;
    const Integer k(static_cast<unsigned long>(system.size()));
    out.tree_count = k == 1 ? Integer(out.tree_depth) : Integer((pow(k, out.tree_depth) - 1) / (k - 1));
    return out;
}

}  // namespace orbitint
