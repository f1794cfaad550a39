#include "orbitint/heights.hpp"

#include "orbitint/errors.hpp"
#include "orbitint/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace orbitint {

namespace {

Integer l1_norm(const std::vector<Integer>& c) {
    Integer s = 0;
    for (const auto& a : c) s += abs_value(a);
    return s;
}

// Column j of the 2d x 2d system holds X^j Y^(d-1-j) * F (j < d) or
// X^(j-d) Y^(2d-1-j) * G; row m is the coefficient of X^m Y^(2d-1-m).
std::vector<std::vector<Rational>> cofactor_matrix(const RatMap& phi) {
    const std::size_t d = phi.degree();
    std::vector<std::vector<Rational>> m(2 * d, std::vector<Rational>(2 * d, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i <= d; ++i) {
            m[i + j][j] = Rational(phi.f()[i]);
            m[i + j][d + j] = Rational(phi.g()[i]);
        }
    }
    return m;
}

std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular cofactor system (zero resultant)");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

Interval defect_at(const RatMap& phi, const ProjPoint& x, mpfr_prec_t precision) {
    const ProjPoint y = eval(phi, x);
    const Interval hy = Interval::log_of(std::max(abs_value(y.x()), abs_value(y.y())), precision);
    const Interval hx = Interval::log_of(std::max(abs_value(x.x()), abs_value(x.y())), precision);
    return hy / Rational(phi.degree()) - hx;
}

Integer max_coordinate(const ProjPoint& q) { return std::max(abs_value(q.x()), abs_value(q.y())); }

// Leaf sum of h over the subtree of depth `remaining` below q.
void sum_leaves(const MapSystem& system, const ProjPoint& q, std::size_t remaining, const WorkLimits& limits,
                Interval& acc, mpfr_prec_t precision) {
    if (q.bits() > limits.max_bits) {
        throw WorkLimitError("coordinate exceeds " + std::to_string(limits.max_bits) + " bits");
    }
    if (remaining == 0) {
        acc += Interval::log_of(max_coordinate(q), precision);
        return;
    }
    for (const auto& phi : system.maps()) sum_leaves(system, eval(phi, q), remaining - 1, limits, acc, precision);
}

}  // namespace

Integer homogeneous_resultant(const RatMap& phi) {
    const std::size_t d = phi.degree();
    std::vector<std::vector<Integer>> s(2 * d, std::vector<Integer>(2 * d, Integer(0)));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t i = 0; i <= d; ++i) {
            s[r][r + i] = phi.f()[d - i];
            s[d + r][r + i] = phi.g()[d - i];
        }
    }
    return determinant(std::move(s));
}

std::pair<CofactorIdentity, CofactorIdentity> resultant_cofactors(const RatMap& phi) {
    const std::size_t d = phi.degree();
    const auto m = cofactor_matrix(phi);
    std::vector<Rational> ex(2 * d, Rational(0)), ey(2 * d, Rational(0));
    ex[2 * d - 1] = 1;
    ey[0] = 1;
    const auto sx = solve(m, ex);
    const auto sy = solve(m, ey);
    Integer scale = 1;
    for (const auto& q : sx) scale = lcm(scale, Integer(q.get_den()));
    for (const auto& q : sy) scale = lcm(scale, Integer(q.get_den()));
    auto to_identity = [&](const std::vector<Rational>& sol) {
        CofactorIdentity id;
        id.scale = scale;
        for (std::size_t j = 0; j < 2 * d; ++j) {
            Integer a = sol[j].get_num() * (scale / sol[j].get_den());
            (j < d ? id.u : id.v).push_back(a);
        }
        return id;
    };
    return {to_identity(sx), to_identity(sy)};
}

HeightDifferenceBound c_bound(const RatMap& phi, HeightDifferenceBound::Mode mode, const EmpiricalOptions& empirical,
                              mpfr_prec_t precision) {
    if (phi.degree() < 2) throw ValidationError("c_bound needs degree >= 2");
    const Rational d(phi.degree());
    HeightDifferenceBound out;
    out.mode = mode;
    if (mode == HeightDifferenceBound::Mode::Certified) {
        // |F|,|G| <= ||.||_1 max(|x|,|y|)^d bounds the image from above; the cofactor
        // identities and gcd(F(x,y), G(x,y)) | scale bound it from below.
        out.upper_norm = std::max(l1_norm(phi.f().coeffs()), l1_norm(phi.g().coeffs()));
        const auto [ix, iy] = resultant_cofactors(phi);
        out.lower_norm = std::max(l1_norm(ix.u) + l1_norm(ix.v), l1_norm(iy.u) + l1_norm(iy.v));
        out.above = Interval::log_of(out.upper_norm, precision) / d;
        out.below = Interval::log_of(out.lower_norm, precision) / d;
        out.exact = LogValue::log_of(std::max(out.upper_norm, out.lower_norm)) * (1 / d);
        out.c = out.exact->to_interval(precision);
        return out;
    }

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(empirical.seed));
    std::vector<ProjPoint> pts{ProjPoint(), ProjPoint::infinity(), ProjPoint(Rational(1)), ProjPoint(Rational(-1))};
    while (pts.size() < empirical.samples) {
        Integer a = rng.get_z_bits(empirical.bits);
        Integer b = rng.get_z_bits(empirical.bits) + 1;
        if (rng.get_z_bits(1) == 1) a = -a;
        pts.emplace_back(a, b);
    }
    double above = 0, below = 0;
    for (const auto& x : pts) {
        const Interval e = defect_at(phi, x, precision);
        above = std::max(above, e.hi());
        below = std::max(below, -e.lo());
    }
    // Safety factor 2 on the observed extremes.
    out.above = Interval::enclose(Rational(2 * above), precision);
    out.below = Interval::enclose(Rational(2 * below), precision);
    out.c = Interval::max(out.above, out.below);
    out.samples = pts.size();
    return out;
}

HeightEstimate canonical_height_word(const MapSystem& system, const Word& w, const ProjPoint& p,
                                     const HeightOptions& options) {
    if (!w.is_periodic()) throw ValidationError("canonical heights need an infinite (periodic) word");
    w.validate(system.size());
    const mpfr_prec_t prec = options.precision;

    std::set<int> used(w.letters().begin(), w.letters().end());
    Interval above(prec), below(prec);
    bool first = true;
    unsigned dmin = 0;
    for (int j : used) {
        const auto b = c_bound(system.letter(j), options.mode, {}, prec);
        above = first ? b.above : Interval::max(above, b.above);
        below = first ? b.below : Interval::max(below, b.below);
        dmin = first ? system.degree_of_letter(j) : std::min(dmin, system.degree_of_letter(j));
        first = false;
    }
    // sum_{m >= n} 1/D_m <= (1/D_n) * dmin/(dmin-1)
    const Rational tail_factor = ratio(Integer(dmin), Integer(dmin - 1));

    HeightEstimate out;
    out.certified = options.mode == HeightDifferenceBound::Mode::Certified;
    std::optional<Interval> best;
    ProjPoint q = p;
    Integer dn = 1;
    bool met = false;
    for (std::size_t n = 0; n <= options.max_depth; ++n) {
        if (n > 0) {
            const RatMap& phi = system.letter(w.letter_at(n - 1));
            q = eval(phi, q);
            if (q.bits() > options.max_bits) {
                out.partial = true;
                break;
            }
            dn *= phi.degree();
        }
        const Rational s = tail_factor / Rational(dn);
        const Interval approx = Interval::log_of(max_coordinate(q), prec) / Rational(dn);
        const Interval est = approx + Interval::hull(-(below * s), above * s);
        best = best ? best->intersect(est) : est;
        out.approximant = approx;
        out.depth = n;
        out.degree_product = dn;
        if (options.target_width && best->width() <= *options.target_width) {
            met = true;
            break;
        }
    }
    if (options.target_width && !met) out.partial = true;
    out.value = best->clamp_nonnegative();
    return out;
}

HeightEstimate canonical_height_system(const MapSystem& system, const ProjPoint& x, std::size_t depth,
                                       const SystemHeightOptions& options) {
    const std::size_t k = system.size();
    if (tree_size(k, depth) > options.limits.max_nodes) {
        throw WorkLimitError("system height at depth " + std::to_string(depth) + " exceeds the node cap of " +
                             std::to_string(options.limits.max_nodes));
    }
    const mpfr_prec_t prec = options.precision;
    Interval c(prec);
    for (std::size_t j = 0; j < k; ++j) {
        const auto b = c_bound(system.maps()[j], options.mode, {}, prec);
        c = j == 0 ? b.c : Interval::max(c, b.c);
    }

    // One partition per first letter; partial sums are added in letter order,
    // so the result does not depend on the worker count.
    Interval total(prec);
    if (depth == 0) {
        sum_leaves(system, x, 0, options.limits, total, prec);
    } else {
        std::vector<Interval> parts(k, Interval(prec));
        std::vector<std::exception_ptr> errors(k);
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t j; (j = next.fetch_add(1)) < k;) {
                try {
                    sum_leaves(system, eval(system.maps()[j], x), depth - 1, options.limits, parts[j], prec);
                } catch (...) {
                    errors[j] = std::current_exception();
                }
            }
        };
        const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(k)));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        for (std::size_t j = 0; j < k; ++j) {
            if (errors[j]) std::rethrow_exception(errors[j]);
            total += parts[j];
        }
    }

    const Integer dsum(static_cast<unsigned long>(system.degree_sum()));
    const Integer dn = pow(dsum, depth);
    const Integer kn = pow(Integer(static_cast<unsigned long>(k)), depth);
    // 2c (k/D)^n / (1 - k/D)
    const Rational tail_scale = ratio(Integer(2 * kn * dsum), Integer(dn * (dsum - static_cast<unsigned long>(k))));
    const Interval tail = c * tail_scale;

    HeightEstimate out;
    out.approximant = total / Rational(dn);
    out.value = (out.approximant + Interval::hull(-tail, tail)).clamp_nonnegative();
    out.depth = depth;
    out.degree_product = dn;
    out.certified = options.mode == HeightDifferenceBound::Mode::Certified;
    return out;
}

HminEstimate hmin_estimate(const MapSystem& system, const ProjPoint& p, std::size_t period_bound,
                           const HeightOptions& options) {
    if (period_bound < 1) throw ValidationError("period bound must be >= 1");
    HminEstimate out;
    std::optional<Interval> best;
    for (std::size_t len = 1; len <= period_bound; ++len) {
        for (const auto& seed : enumerate_words(system.size(), len)) {
            const Word w = Word::periodic(seed.letters());
            ++out.words_examined;
            const auto verdict = preperiodicity_check(system, w, p, options.max_depth, options);
            if (verdict.kind == PreperiodicityVerdict::Kind::Preperiodic) {
                out.value = Interval::enclose(Rational(0), options.precision);
                out.preperiodic = true;
                out.witness = w;
                return out;
            }
            const Interval& v = verdict.height->value;
            if (!best || v.lo() < best->lo()) out.witness = w;
            best = best ? Interval::min(*best, v) : v;
        }
    }
    out.value = *best;
    return out;
}

}  // namespace orbitint
