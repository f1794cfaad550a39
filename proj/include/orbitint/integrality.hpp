#pragma once

#include "orbitint/heights.hpp"
#include "orbitint/orbits.hpp"
#include "orbitint/places.hpp"

#include <optional>
#include <vector>

namespace orbitint {

/// sum_{v in S} log max(|x|_v, 1) >= eps * h([x:1]), decided exactly.
bool quasi_integral_test(const Rational& x, const PlaceSet& s, const Rational& eps);

enum class GammaVerdict { In, Out, Ambiguous };
std::string to_string(GammaVerdict v);

struct GammaMember {
    std::size_t n = 0;
    ProjPoint point;
    /// sum_{v in S} lambda_v(Phi^n(P), A); +inf when Phi^n(P) = A.
    Interval proximity;
    /// eps * D_n * hhat_Phi(P)
    Interval threshold;
    GammaVerdict verdict = GammaVerdict::Out;
};

struct GammaRecord {
    Word word;
    ProjPoint a;
    ProjPoint p;
    PlaceSet s;
    Rational epsilon;
    std::size_t depth = 0;
    HeightEstimate hhat;
    std::vector<GammaMember> members;
    /// P was found preperiodic along w, so Gamma is not meaningful.
    bool degenerate = false;

    std::size_t count(GammaVerdict v) const;
};

struct GammaOptions {
    HeightOptions height;
    WorkLimits limits;
};

GammaRecord gamma_set(const MapSystem& system, const Word& w, const PlaceSet& s, const ProjPoint& a,
                      const ProjPoint& p, const Rational& eps, std::size_t depth, const GammaOptions& options = {});

struct CensusReport {
    std::vector<OrbitRecord> hits;
    std::size_t count = 0;
    std::size_t depth = 0;
    std::size_t points_examined = 0;
};

/// Distinct points Q = Phi_u(P), |u| >= 1, of the orbit tree with z(Q) in R_S.
CensusReport s_integral_census(const MapSystem& system, const ProjPoint& p, const PlaceSet& s, std::size_t depth,
                               const WorkLimits& limits = {}, unsigned workers = 1);

struct RatioTerm {
    enum class Status { Defined, Undefined, Infinity };
    std::size_t n = 0;
    Integer a;
    Integer b;
    Status status = Status::Undefined;
    /// log|a_n| / log|b_n| when defined.
    std::optional<Interval> ratio;
};
std::string to_string(RatioTerm::Status s);

/// Terms n = 1..depth of log|a_n|/log|b_n| for Phi^n(alpha) = a_n/b_n. The
/// series stops after a term that reaches infinity.
std::vector<RatioTerm> ratio_series(const MapSystem& system, const Word& w, const Rational& alpha, std::size_t depth,
                                    const WorkLimits& limits = {}, mpfr_prec_t precision = kDefaultPrecision);

struct AveragedRatio {
    std::optional<Interval> mean;  // over the included words
    std::size_t included = 0;
    std::size_t excluded = 0;
};

/// Mean of the defined ratios over all k^n words of length n.
AveragedRatio averaged_ratio(const MapSystem& system, const Rational& alpha, std::size_t n,
                             const WorkLimits& limits = {}, mpfr_prec_t precision = kDefaultPrecision);

}  // namespace orbitint
