#include "orbitint/integrality.hpp"

#include "orbitint/errors.hpp"

#include <stdexcept>

namespace orbitint {

namespace {

void check_epsilon(const Rational& eps) {
    if (eps <= 0 || eps > 1) throw ValidationError("epsilon must lie in (0, 1], got " + to_string(eps));
}

std::optional<Interval> log_ratio(const Integer& a, const Integer& b, mpfr_prec_t precision) {
    const Integer ua = abs_value(a), ub = abs_value(b);
    if (ua <= 1 || ub <= 1) return std::nullopt;
    return Interval::log_of(ua, precision) / Interval::log_of(ub, precision);
}

}  // namespace

bool quasi_integral_test(const Rational& x, const PlaceSet& s, const Rational& eps) {
    check_epsilon(eps);
    LogValue lhs;
    for (const auto& v : s) lhs += log_plus(x, v);
    const LogValue rhs = height(ProjPoint(x)) * eps;
    const auto sign = compare(lhs, rhs);
    if (!sign) throw std::runtime_error("quasi_integral_test: comparison undecided for " + to_string(x));
    return *sign >= 0;
}

std::string to_string(GammaVerdict v) {
    switch (v) {
        case GammaVerdict::In: return "in";
        case GammaVerdict::Out: return "out";
        case GammaVerdict::Ambiguous: return "ambiguous";
    }
    return "ambiguous";
}

std::size_t GammaRecord::count(GammaVerdict v) const {
    std::size_t c = 0;
    for (const auto& m : members) c += m.verdict == v;
    return c;
}

GammaRecord gamma_set(const MapSystem& system, const Word& w, const PlaceSet& s, const ProjPoint& a,
                      const ProjPoint& p, const Rational& eps, std::size_t depth, const GammaOptions& options) {
    check_epsilon(eps);
    if (s.size() == 0) throw ValidationError("gamma_set needs a nonempty place set");
    const mpfr_prec_t prec = options.height.precision;

    GammaRecord rec;
    rec.word = w;
    rec.a = a;
    rec.p = p;
    rec.s = s;
    rec.epsilon = eps;
    rec.depth = depth;

    const auto pre = preperiodicity_check(system, w, p, options.height.max_depth, options.height);
    if (pre.kind == PreperiodicityVerdict::Kind::Preperiodic) {
        rec.degenerate = true;
        rec.hhat = canonical_height_word(system, w, p, options.height);
    } else {
        rec.hhat = *pre.height;
    }

    const auto orbit = iterate_word(system, w, p, depth, options.limits);
    Integer dn = 1;
    for (const auto& r : orbit) {
        if (r.depth > 0) dn *= system.degree_of_letter(w.letter_at(r.depth - 1));
        GammaMember m;
        m.n = r.depth;
        m.point = r.point;
        m.threshold = rec.hhat.value * (eps * Rational(dn));
        if (r.point == a) {
            m.proximity = Interval::positive_infinity(prec);
            m.verdict = GammaVerdict::In;
        } else {
            LogValue sum;
            for (const auto& v : s) sum += log_chordal(r.point, a, v).value();
            m.proximity = sum.to_interval(prec);
            if (m.proximity.certainly_ge(m.threshold)) {
                m.verdict = GammaVerdict::In;
            } else if (m.proximity.certainly_lt(m.threshold)) {
                m.verdict = GammaVerdict::Out;
            } else {
                m.verdict = GammaVerdict::Ambiguous;
            }
        }
        rec.members.push_back(std::move(m));
    }
    return rec;
}

CensusReport s_integral_census(const MapSystem& system, const ProjPoint& p, const PlaceSet& s, std::size_t depth,
                               const WorkLimits& limits, unsigned workers) {
    if (!s.contains_infinity()) throw ValidationError("the census needs the infinite place in S");
    CensusReport report;
    report.depth = depth;
    for (auto& r : enumerate_tree(system, p, depth, true, limits, workers)) {
        if (r.depth == 0 || r.point.is_infinity()) continue;
        ++report.points_examined;
        if (is_s_integer(*r.point.affine(), s)) report.hits.push_back(std::move(r));
    }
    report.count = report.hits.size();
    return report;
}

std::string to_string(RatioTerm::Status s) {
    switch (s) {
        case RatioTerm::Status::Defined: return "defined";
        case RatioTerm::Status::Undefined: return "undefined";
        case RatioTerm::Status::Infinity: return "infinity";
    }
    return "undefined";
}

std::vector<RatioTerm> ratio_series(const MapSystem& system, const Word& w, const Rational& alpha, std::size_t depth,
                                    const WorkLimits& limits, mpfr_prec_t precision) {
    std::vector<RatioTerm> out;
    const auto orbit = iterate_word(system, w, ProjPoint(alpha), depth, limits);
    for (std::size_t n = 1; n < orbit.size(); ++n) {
        RatioTerm t;
        t.n = n;
        t.a = orbit[n].point.x();
        t.b = orbit[n].point.y();
        if (orbit[n].point.is_infinity()) {
            t.status = RatioTerm::Status::Infinity;
            out.push_back(std::move(t));
            break;
        }
        t.ratio = log_ratio(t.a, t.b, precision);
        t.status = t.ratio ? RatioTerm::Status::Defined : RatioTerm::Status::Undefined;
        out.push_back(std::move(t));
    }
    return out;
}

AveragedRatio averaged_ratio(const MapSystem& system, const Rational& alpha, std::size_t n,
                             const WorkLimits& limits, mpfr_prec_t precision) {
    AveragedRatio out;
    Interval sum(precision);
    walk_tree(system, ProjPoint(alpha), n, limits, [&](const OrbitRecord& r) {
        if (r.depth != n) return;
        const auto q = r.point.is_infinity() ? std::nullopt : log_ratio(r.point.x(), r.point.y(), precision);
        if (!q) {
            ++out.excluded;
            return;
        }
        sum += *q;
        ++out.included;
    });
    if (out.included > 0) out.mean = sum / Rational(static_cast<unsigned long>(out.included));
    return out;
}

}  // namespace orbitint
