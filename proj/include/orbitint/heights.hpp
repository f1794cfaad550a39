#pragma once

#include "orbitint/interval.hpp"
#include "orbitint/limits.hpp"
#include "orbitint/log_value.hpp"
#include "orbitint/ratmap.hpp"
#include "orbitint/words.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace orbitint {

/// Bound on the height defect of one map:
///   -below <= h(phi(x))/d - h(x) <= above   for every x,  c = max(above, below).
struct HeightDifferenceBound {
    enum class Mode { Certified, Empirical };
    Mode mode = Mode::Certified;
    Interval above;
    Interval below;
    Interval c;
    /// Certified mode only: c as an exact log value.
    std::optional<LogValue> exact;
    /// Certified mode only: log(upper_norm)/d bounds from above, log(lower_norm)/d from below.
    Integer upper_norm = 1;
    Integer lower_norm = 1;
    /// Empirical mode only.
    std::size_t samples = 0;
};

/// Integer forms u, v of degree d-1 (coefficients indexed by the power of X)
/// with u F + v G = scale * X^(2d-1)  (or Y^(2d-1)).
struct CofactorIdentity {
    std::vector<Integer> u;
    std::vector<Integer> v;
    Integer scale;
};

/// Resultant of the degree-d homogenizations F, G (Sylvester determinant).
Integer homogeneous_resultant(const RatMap& phi);
/// The identities for X^(2d-1) and Y^(2d-1), sharing one scale.
std::pair<CofactorIdentity, CofactorIdentity> resultant_cofactors(const RatMap& phi);

struct EmpiricalOptions {
    std::size_t samples = 2000;
    std::uint64_t seed = 1;
    unsigned bits = 48;  // size of sampled numerators and denominators
};

HeightDifferenceBound c_bound(const RatMap& phi,
                              HeightDifferenceBound::Mode mode = HeightDifferenceBound::Mode::Certified,
                              const EmpiricalOptions& empirical = {},
                              mpfr_prec_t precision = kDefaultPrecision);

struct HeightEstimate {
    Interval value;
    /// h(Phi^n(P))/D_n for a word, or (T^n h)(x) for a system.
    Interval approximant;
    std::size_t depth = 0;
    Integer degree_product = 1;
    bool certified = true;
    /// Target width not reached, or stopped by the bit cap.
    bool partial = false;
};

struct HeightOptions {
    std::size_t max_depth = 24;
    /// Stop as soon as hi - lo <= target_width.
    std::optional<double> target_width;
    std::size_t max_bits = 1'000'000;
    mpfr_prec_t precision = kDefaultPrecision;
    HeightDifferenceBound::Mode mode = HeightDifferenceBound::Mode::Certified;
};

/// Canonical height along the infinite word w (must be periodic), from
/// h(Phi^n(P))/D_n and the tail of the per-map defect bounds, intersected over n.
HeightEstimate canonical_height_word(const MapSystem& system, const Word& w, const ProjPoint& p,
                                     const HeightOptions& options = {});

struct SystemHeightOptions {
    WorkLimits limits;
    unsigned workers = 1;
    mpfr_prec_t precision = kDefaultPrecision;
    HeightDifferenceBound::Mode mode = HeightDifferenceBound::Mode::Certified;
};

/// (T^n h)(x) = D^-n sum_{|u| = n} h(u(x)) with tail 2c (k/D)^n / (1 - k/D).
HeightEstimate canonical_height_system(const MapSystem& system, const ProjPoint& x, std::size_t depth,
                                       const SystemHeightOptions& options = {});

struct HminEstimate {
    Interval value;
    bool preperiodic = false;
    /// Seed of the minimizing periodic word, or of the preperiodic witness.
    Word witness;
    std::size_t words_examined = 0;
};

/// Minimum of canonical_height_word over all periodic words with period <= period_bound.
HminEstimate hmin_estimate(const MapSystem& system, const ProjPoint& p, std::size_t period_bound,
                           const HeightOptions& options = {});

}  // namespace orbitint
