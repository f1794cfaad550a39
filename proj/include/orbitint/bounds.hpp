#pragma once

#include "orbitint/interval.hpp"
#include "orbitint/log_value.hpp"
#include "orbitint/places.hpp"
#include "orbitint/ratmap.hpp"

#include <vector>

namespace orbitint {

/// e_P(Phi^m) <= kappa1 * kappa2^m * deg(Phi^m) (NotTotallyRamified), or the
/// constant bound e_P(Phi^m) <= kappa1 (DistinctOrbit, where kappa2 * d_1 = 1).
struct RamificationConstants {
    enum class Mode { DistinctOrbit, NotTotallyRamified };
    Mode mode = Mode::NotTotallyRamified;
    /// kappa1 = exp(log_kappa1)
    Rational log_kappa1 = 0;
    Rational kappa2 = 1;
};

RamificationConstants kappa_constants(const MapSystem& system, RamificationConstants::Mode mode);

struct MChoice {
    unsigned m = 1;
    /// (log(5 kappa1) + log(1/eps)) / log(1/kappa2) + 1
    Interval small_case_bound;
};

/// Minimal m >= 1 with kappa1 kappa2^m <= eps/5.
MChoice choose_m(const Rational& eps, const RamificationConstants& kappa);

/// ((d^n - 1)/(d - 1)) hF + d^2 ((d^(n-1) - 1)/(d - 1)) log 8
LogValue composition_height_bound(unsigned n, unsigned d, const LogValue& hf);

/// Roth-type and proof constants. None of them is given effectively, so these
/// are an instantiation, echoed in every report.
struct BoundParameters {
    Rational roth_r1 = 1;
    Rational roth_r2 = 1;
    Rational roth_mu = Rational(5, 2);
    std::vector<Rational> c = std::vector<Rational>(11, Rational(1));  // c_1 .. c_11
    Rational gamma = 2;

    const Rational& ci(int i) const { return c.at(static_cast<std::size_t>(i - 1)); }
    /// Throws ValidationError unless every value is positive and mu > 2.
    void validate() const;
};

struct GammaCountBound {
    unsigned m = 0;
    /// Indices n past max_n lie in Gamma only through the Roth exceptional set.
    Interval n_t2;
    Interval n_t3;
    Interval max_n;
    /// 4^#S r_1
    Rational tail_count;
    /// tail_count + floor(max_n) + 1
    Interval total_count;
    /// 4^#S gamma + log+_{d1}((hhat_F(A) + h(F)) / hhat_Phi(P))
    Interval displayed;
};

/// log+_b(t) = max(0, log t / log b), interval-valued.
Interval log_plus_base(const Interval& t, unsigned base);

/// Requires hhat_p.lo > 0.
GammaCountBound gamma_count_bound(const MapSystem& system, const PlaceSet& s, const Rational& eps,
                               const Interval& hhat_a, const LogValue& hf, const Interval& hhat_p,
                               const BoundParameters& params = {});

struct CorollaryBounds {
    Interval s_integral_bound;
    unsigned long tree_depth = 0;
    Integer tree_count;
};

/// Requires hhat_min.lo > 0.
CorollaryBounds corollary_bounds(const MapSystem& system, const PlaceSet& s, const LogValue& hf,
                                 const Interval& hhat_min, const BoundParameters& params = {});

std::string to_string(RamificationConstants::Mode mode);

}  // namespace orbitint
