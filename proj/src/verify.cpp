#include "orbitint/verify.hpp"

#include "orbitint/bounds.hpp"
#include "orbitint/errors.hpp"
#include "orbitint/factor.hpp"
#include "orbitint/heights.hpp"
#include "orbitint/integrality.hpp"
#include "orbitint/orbits.hpp"
#include "orbitint/places.hpp"
#include "orbitint/random.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace orbitint {

namespace {

class Suite {
public:
    Suite(std::string name, std::vector<SuiteResult>& out) : out_(out) { r_.name = std::move(name); }
    ~Suite() { out_.push_back(r_); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++r_.cases;
        if (ok) return;
        if (r_.failures++ == 0) r_.detail = describe();
    }

private:
    std::vector<SuiteResult>& out_;
    SuiteResult r_;
};

bool exact_zero(const LogValue& v) {
    const auto s = v.exact_sign();
    return s && *s == 0;
}

// a <= b, exactly
bool exact_le(const LogValue& a, const LogValue& b) {
    const auto s = compare(a, b);
    return s && *s <= 0;
}

LogValue abs_log_value(const Rational& x, const Place& v) { return abs_log(x, v).value; }

std::vector<Place> support(const Rational& x) {
    std::vector<Place> places{Place::infinity()};
    std::set<Integer> primes;
    for (const auto& [p, e] : factorize(Integer(x.get_num()))) primes.insert(p);
    for (const auto& [p, e] : factorize(Integer(x.get_den()))) primes.insert(p);
    for (const auto& p : primes) places.push_back(Place::prime(p));
    return places;
}

const std::vector<Place>& small_places() {
    static const std::vector<Place> v{Place::infinity(), Place::prime(2), Place::prime(3), Place::prime(5)};
    return v;
}

void places_suites(Sampler& s, std::size_t n, std::vector<SuiteResult>& out) {
    {
        Suite t("places: product formula", out);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational x = s.rational(64);
            LogValue sum;
            for (const auto& v : support(x)) sum += abs_log_value(x, v);
            t.check(exact_zero(sum), [&] { return "x = " + to_string(x); });
        }
    }
    {
        Suite t("places: abs_log multiplicativity", out);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational x = s.rational(48), y = s.rational(48);
            for (const auto& v : small_places()) {
                const LogValue diff = abs_log_value(x * y, v) - abs_log_value(x, v) - abs_log_value(y, v);
                t.check(exact_zero(diff), [&] { return to_string(x) + " * " + to_string(y) + " at " + v.to_string(); });
            }
        }
    }
    {
        Suite t("places: S-integer height identity", out);
        const std::vector<PlaceSet> sets{PlaceSet::parse({"inf"}), PlaceSet::parse({"inf", "p2"}),
                                         PlaceSet::parse({"inf", "p2", "p3"})};
        for (std::size_t i = 0; i < n; ++i) {
            Rational x = ratio(s.nonzero(20), Integer(1) << static_cast<unsigned>(s.below(4)));
            if (s.below(2)) x /= 3;
            for (const auto& set : sets) {
                LogValue sum;
                for (const auto& v : set) sum += log_plus(x, v);
                const bool identity = exact_zero(sum - height(ProjPoint(x)));
                t.check(identity == is_s_integer(x, set), [&] { return to_string(x) + " with S = " + set.names()[0]; });
            }
        }
    }
}

void proj1_suites(Sampler& s, std::size_t n, std::vector<SuiteResult>& out) {
    {
        Suite t("proj1: chordal symmetry, nonnegativity, ultrametric", out);
        for (std::size_t i = 0; i < n; ++i) {
            const ProjPoint p = s.point(12), q = s.point(12), r = s.point(12);
            if (p == q || q == r || p == r) continue;
            for (const auto& v : small_places()) {
                const LogValue a = log_chordal(p, q, v).value();
                const LogValue b = log_chordal(q, p, v).value();
                t.check(exact_zero(a - b), [&] { return "symmetry " + p.to_string() + ", " + q.to_string(); });
                t.check(exact_le(LogValue{}, a), [&] { return "negative lambda at " + p.to_string(); });
                if (!v.is_archimedean()) {
                    // rho(p, r) <= max(rho(p, q), rho(q, r))  <=>  lambda(p, r) >= min(...)
                    const long pr = log_chordal(p, r, v).finite_part;
                    const long pq = log_chordal(p, q, v).finite_part;
                    const long qr = log_chordal(q, r, v).finite_part;
                    t.check(pr >= std::min(pq, qr), [&] { return "ultrametric at " + v.to_string(); });
                }
            }
        }
    }
    {
        Suite t("proj1: distance comparison implication", out);
        const ProjPoint inf = ProjPoint::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const Rational x = s.rational(10), y = s.rational(10);
            if (x == y) continue;
            for (const auto& v : small_places()) {
                const LogValue lxy = log_chordal(ProjPoint(x), ProjPoint(y), v).value();
                const LogValue ly = log_chordal(ProjPoint(y), inf, v).value();
                const LogValue log_lv = LogValue::log_of(Integer(v.lv()));
                if (!(compare(lxy, ly + log_lv).value_or(0) > 0)) continue;
                const LogValue mid = lxy + abs_log_value(x - y, v);
                t.check(exact_le(ly, mid) && exact_le(mid, lxy * Rational(2) + log_lv),
                        [&] { return "x = " + to_string(x) + ", y = " + to_string(y) + " at " + v.to_string(); });
            }
        }
    }
    {
        Suite t("proj1: height-distance defect in [0, log(2)/2]", out);
        const LogValue half_log2 = LogValue::log_of(Integer(2)) * Rational(1, 2);
        for (std::size_t i = 0; i < n; ++i) {
            const ProjPoint p(s.rational(40));
            LogValue sum = log_chordal(p, ProjPoint::infinity(), Place::infinity()).value();
            for (const auto& [prime, e] : factorize(p.y())) {
                sum += log_chordal(p, ProjPoint::infinity(), Place::prime(prime)).value();
            }
            const LogValue defect = sum - height(p);
            t.check(exact_le(LogValue{}, defect) && exact_le(defect, half_log2), [&] { return p.to_string(); });
        }
    }
}

void ratmap_suites(Sampler& s, std::size_t n, std::vector<SuiteResult>& out) {
    {
        Suite t("ratmap: ramification multiplicativity", out);
        for (std::size_t i = 0; i < n; ++i) {
            const RatMap phi = s.map(static_cast<unsigned>(s.between(2, 3)));
            const RatMap psi = s.map(static_cast<unsigned>(s.between(2, 3)));
            // critical points are more interesting than random ones
            ProjPoint p = s.point(6);
            const auto roots = rational_roots(wronskian(phi));
            if (!roots.empty() && s.below(2)) p = ProjPoint(roots[s.below(roots.size())].first);
            const unsigned lhs = ramification_index(compose(psi, phi), p);
            const unsigned rhs = ramification_index(phi, p) * ramification_index(psi, eval(phi, p));
            t.check(lhs == rhs, [&] { return phi.to_string() + " then " + psi.to_string() + " at " + p.to_string(); });
        }
    }
    {
        Suite t("ratmap: ramification independent of conjugation", out);
        for (std::size_t i = 0; i < n; ++i) {
            const RatMap phi = s.map(static_cast<unsigned>(s.between(2, 4)));
            const ProjPoint p = ProjPoint::infinity();
            const ProjPoint image = eval(phi, p);
            std::vector<long> cs;
            for (long c = 0; cs.size() < 2; ++c) {
                if (ProjPoint(Rational(c)) != p && ProjPoint(Rational(c)) != image) cs.push_back(c);
            }
            t.check(ramification_index_conjugated(phi, p, Rational(cs[0])) ==
                        ramification_index_conjugated(phi, p, Rational(cs[1])),
                    [&] { return phi.to_string(); });
        }
    }
    {
        Suite t("ratmap: composition degree and evaluation coherence", out);
        for (std::size_t i = 0; i < n; ++i) {
            const RatMap phi = s.map(static_cast<unsigned>(s.between(1, 3)));
            const RatMap psi = s.map(static_cast<unsigned>(s.between(1, 3)));
            const RatMap c = compose(phi, psi);
            const ProjPoint p = s.point(16);
            t.check(c.degree() == phi.degree() * psi.degree() && eval(c, p) == eval(phi, eval(psi, p)),
                    [&] { return phi.to_string() + " o " + psi.to_string(); });
        }
    }
    {
        Suite t("ratmap: rational ramification within 2d - 2", out);
        for (std::size_t i = 0; i < n; ++i) {
            const RatMap phi = s.map(static_cast<unsigned>(s.between(2, 4)));
            const IntPoly w = wronskian(phi);
            unsigned total = ramification_index(phi, ProjPoint::infinity()) - 1;
            if (!w.is_zero()) {
                for (const auto& [r, m] : rational_roots(w)) total += ramification_index(phi, ProjPoint(r)) - 1;
            }
            t.check(!w.is_zero() && total <= 2 * phi.degree() - 2, [&] { return phi.to_string(); });
        }
    }
    {
        Suite t("ratmap: composed heights under the composition bound", out);
        for (std::size_t i = 0; i < n / 4 + 1; ++i) {
            const MapSystem sys = s.system(static_cast<std::size_t>(s.between(1, 2)), 3);
            const std::size_t len = static_cast<std::size_t>(s.between(1, 3));
            RatMap acc = sys.letter(static_cast<int>(s.between(1, static_cast<long>(sys.size()))));
            for (std::size_t m = 2; m <= len; ++m) {
                acc = compose(sys.letter(static_cast<int>(s.between(1, static_cast<long>(sys.size())))), acc);
            }
            const LogValue bound = composition_height_bound(static_cast<unsigned>(len), sys.max_degree(), system_height(sys));
            t.check(exact_le(map_height(acc), bound), [&] { return acc.to_string(); });
        }
    }
}

void words_suites(Sampler& s, std::size_t n, std::vector<SuiteResult>& out) {
    Suite t("words: shift periodicity and degree products", out);
    for (std::size_t i = 0; i < n; ++i) {
        const MapSystem sys = s.system(3, 4);
        const Word w = s.periodic_word(3, 4);
        const std::size_t m = s.below(20);
        t.check(w.shift(m) == w.shift(m % w.size()), [&] { return w.to_string(); });
        Word it = w;
        for (std::size_t j = 0; j < m; ++j) it = it.shift();
        t.check(it == w.shift(m), [&] { return w.to_string(); });
        std::vector<int> a(s.below(5)), b(s.below(5));
        for (auto& x : a) x = static_cast<int>(s.between(1, 3));
        for (auto& x : b) x = static_cast<int>(s.between(1, 3));
        const Word u = Word::finite(a), v = Word::finite(b), uv = concat(u, v);
        t.check(degree_product(sys, uv, uv.size()) == degree_product(sys, u, u.size()) * degree_product(sys, v, v.size()),
                [&] { return uv.to_string(); });
    }
}

void heights_suites(Sampler& s, std::size_t n, mpfr_prec_t prec, std::vector<SuiteResult>& out) {
    HeightOptions h;
    h.max_depth = 8;
    h.max_bits = 200'000;
    h.precision = prec;
    {
        Suite t("heights: shift identity", out);
        for (std::size_t i = 0; i < n / 4 + 1; ++i) {
            const MapSystem sys = s.system(static_cast<std::size_t>(s.between(1, 2)), 3);
            const Word w = s.periodic_word(sys.size(), 3);
            const ProjPoint p = s.point(8);
            const RatMap& first = sys.letter(w.letter_at(0));
            const auto a = canonical_height_word(sys, w.shift(), eval(first, p), h);
            const auto b = canonical_height_word(sys, w, p, h);
            const double d = first.degree();
            const double residual = std::abs(a.value.mid() - d * b.value.mid());
            t.check(residual <= a.value.radius() + d * b.value.radius() + 1e-12,
                    [&] { return w.to_string() + " at " + p.to_string(); });
            t.check(b.value.hi() >= 0, [&] { return "negative height"; });
        }
    }
    {
        Suite t("heights: bounded difference from the naive height", out);
        for (std::size_t i = 0; i < n / 4 + 1; ++i) {
            const MapSystem sys = s.system(static_cast<std::size_t>(s.between(1, 2)), 3);
            const Word w = s.periodic_word(sys.size(), 3);
            const ProjPoint p = s.point(16);
            const auto e = canonical_height_word(sys, w, p, h);
            Interval c = c_bound(sys.maps()[0]).c;
            for (const auto& phi : sys.maps()) c = Interval::max(c, c_bound(phi).c);
            const Interval hp = height(p).to_interval(prec);
            const Interval two_c = c * Rational(2);
            t.check(e.value.lo() >= (hp - two_c).lo() - 1e-12 && e.value.hi() <= (hp + two_c).hi() + 1e-12,
                    [&] { return w.to_string() + " at " + p.to_string(); });
        }
    }
    SystemHeightOptions so;
    so.precision = prec;
    {
        Suite t("heights: eigensystem identity", out);
        for (std::size_t i = 0; i < n / 8 + 1; ++i) {
            const MapSystem sys = s.system(2, 3);
            const ProjPoint x = s.point(6);
            const std::size_t depth = 5;
            const auto base = canonical_height_system(sys, x, depth, so);
            double sum_mid = 0, sum_rad = 0;
            for (const auto& phi : sys.maps()) {
                const auto e = canonical_height_system(sys, eval(phi, x), depth, so);
                sum_mid += e.value.mid();
                sum_rad += e.value.radius();
            }
            const double dsum = static_cast<double>(sys.degree_sum());
            t.check(std::abs(sum_mid - dsum * base.value.mid()) <= sum_rad + dsum * base.value.radius() + 1e-12,
                    [&] { return x.to_string(); });
        }
    }
    {
        Suite t("heights: sampled word average near the system height", out);
        for (std::size_t i = 0; i < 3; ++i) {
            const MapSystem sys = s.system(2, 3, 2);
            const ProjPoint x = s.point(6);
            const auto sh = canonical_height_system(sys, x, 6, so);
            Interval c = c_bound(sys.maps()[0]).c;
            for (const auto& phi : sys.maps()) c = Interval::max(c, c_bound(phi).c);
            const std::size_t len = 8, samples = 200 * std::max<std::size_t>(1, n / 200);
            double mean = 0, sq = 0;
            for (std::size_t j = 0; j < samples; ++j) {
                const Word w = sample_word(sys, len, s.engine());
                const auto orbit = iterate_word(sys, w, x, len);
                const double v = orbit.back().height.to_double() / degree_product(sys, w, len).get_d();
                mean += v;
                sq += v * v;
            }
            mean /= static_cast<double>(samples);
            const double var = std::max(0.0, sq / static_cast<double>(samples) - mean * mean);
            const double se = std::sqrt(var / static_cast<double>(samples));
            const double truncation = 2 * c.hi() / std::pow(2.0, static_cast<double>(len));
            t.check(std::abs(mean - sh.value.mid()) <= 3 * se + truncation + sh.value.radius() + 1e-9,
                    [&] { return x.to_string() + ": mean " + std::to_string(mean); });
        }
    }
}

void orbits_suites(Sampler& s, std::size_t n, std::vector<SuiteResult>& out) {
    {
        Suite t("orbits: height growth within the defect bound", out);
        for (std::size_t i = 0; i < n / 8 + 1; ++i) {
            const MapSystem sys = s.system(2, 3);
            std::vector<HeightDifferenceBound> cs;
            for (const auto& phi : sys.maps()) cs.push_back(c_bound(phi));
            std::map<std::vector<int>, Interval> heights;
            walk_tree(sys, s.point(6), 3, {}, [&](const OrbitRecord& r) {
                const Interval hr = r.height.to_interval();
                heights.emplace(r.word, hr);
                if (r.depth == 0) return;
                std::vector<int> parent(r.word.begin(), r.word.end() - 1);
                const auto& b = cs[static_cast<std::size_t>(r.word.back() - 1)];
                const double d = sys.degree_of_letter(r.word.back());
                const Interval diff = hr - heights.at(parent) * Rational(static_cast<long>(d));
                t.check(diff.lo() >= -(b.below.hi() * d) - 1e-9 && diff.hi() <= b.above.hi() * d + 1e-9,
                        [&] { return r.point.to_string(); });
            });
        }
    }
    {
        Suite t("orbits: dedupe image and prefix monotonicity", out);
        for (std::size_t i = 0; i < n / 8 + 1; ++i) {
            const MapSystem sys = s.system(2, 2, 2);
            const ProjPoint p = s.point(4);
            const auto full = enumerate_tree(sys, p, 3, false);
            const auto dd = enumerate_tree(sys, p, 3, true);
            std::set<std::string> a, b;
            for (const auto& r : full) a.insert(r.point.to_string());
            for (const auto& r : dd) b.insert(r.point.to_string());
            t.check(a == b && b.size() == dd.size(), [&] { return p.to_string(); });
            const auto shallow = enumerate_tree(sys, p, 2, false);
            bool prefix = shallow.size() <= full.size();
            for (const auto& r : shallow) {
                prefix = prefix && std::any_of(full.begin(), full.end(), [&](const OrbitRecord& q) {
                             return q.word == r.word && q.point == r.point;
                         });
            }
            t.check(prefix, [&] { return p.to_string(); });
        }
    }
}

void integrality_suites(Sampler& s, std::size_t n, mpfr_prec_t prec, std::vector<SuiteResult>& out) {
    {
        Suite t("integrality: quasi-integrality of S-integers", out);
        const PlaceSet set = PlaceSet::parse({"inf", "p2", "p3"});
        for (std::size_t i = 0; i < n; ++i) {
            const Rational x = ratio(s.nonzero(30), pow(Integer(2), s.below(5)) * pow(Integer(3), s.below(3)));
            t.check(quasi_integral_test(x, set, 1), [&] { return to_string(x); });
        }
    }
    struct Config {
        const char* map;
        const char* p;
        const char* a;
    };
    const std::vector<Config> configs{{"z^2", "2", "inf"},         {"z^2", "2", "0"},
                                      {"(z^2+1)/z", "2", "0"},     {"(z^2+1)/z", "3", "1"},
                                      {"(z^2-1)/(z^2+1)", "2", "0"}, {"1/z^2", "3", "1"}};
    GammaOptions g;
    g.height.max_depth = 16;
    g.height.precision = prec;
    {
        Suite t("integrality: gamma monotone in epsilon", out);
        for (const auto& c : configs) {
            const MapSystem sys({RatMap::parse(c.map)});
            const PlaceSet set = PlaceSet::parse({"inf", "p2"});
            const auto lo = gamma_set(sys, Word::periodic({1}), set, ProjPoint::parse(c.a), ProjPoint::parse(c.p),
                                      Rational(1, 4), 6, g);
            const auto hi = gamma_set(sys, Word::periodic({1}), set, ProjPoint::parse(c.a), ProjPoint::parse(c.p),
                                      Rational(3, 4), 6, g);
            for (std::size_t k = 0; k < hi.members.size(); ++k) {
                if (hi.members[k].verdict == GammaVerdict::In) {
                    t.check(lo.members[k].verdict == GammaVerdict::In, [&] { return std::string(c.map); });
                }
            }
        }
    }
    {
        Suite t("integrality: S-integral orbit points lie in gamma", out);
        for (const auto& c : configs) {
            const MapSystem sys({RatMap::parse(c.map)});
            const PlaceSet set = PlaceSet::parse({"inf"});
            const Word w = Word::periodic({1});
            const ProjPoint p = ProjPoint::parse(c.p);
            const auto gm = gamma_set(sys, w, set, ProjPoint::infinity(), p, Rational(1, 2), 6, g);
            if (gm.degenerate) continue;
            const auto b = c_bound(sys.maps()[0]);
            const double gap = 2 * b.c.hi();
            for (const auto& m : gm.members) {
                if (m.n == 0 || m.point.is_infinity() || !is_s_integer(*m.point.affine(), set)) continue;
                if (height(m.point).to_double() < 2 * gap) continue;
                t.check(m.verdict != GammaVerdict::Out, [&] { return std::string(c.map) + " n=" + std::to_string(m.n); });
            }
        }
    }
    {
        Suite t("integrality: proximity over degree decays", out);
        for (const auto& c : configs) {
            const MapSystem sys({RatMap::parse(c.map)});
            const ProjPoint a = ProjPoint::parse(c.a);
            // only meaningful away from totally ramified orbits
            if (!hypothesis_check(sys, a, 2, {}).totally_ramified_free) continue;
            const auto orbit = iterate_word(sys, Word::periodic({1}), ProjPoint::parse(c.p), 10);
            if (std::any_of(orbit.begin(), orbit.end(), [&](const OrbitRecord& r) { return r.point == a; })) continue;
            const double dn = std::pow(static_cast<double>(sys.maps()[0].degree()), 10.0);
            for (const auto& v : small_places()) {
                const double lam = log_chordal(orbit.back().point, a, v).value().to_double();
                t.check(lam / dn < 0.1, [&] { return std::string(c.map) + " at " + v.to_string(); });
            }
        }
    }
    {
        Suite t("integrality: low precision never flips a verdict", out);
        GammaOptions low = g;
        low.height.precision = 16;
        for (const auto& c : configs) {
            const MapSystem sys({RatMap::parse(c.map)});
            const PlaceSet set = PlaceSet::parse({"inf", "p3"});
            const auto ref = gamma_set(sys, Word::periodic({1}), set, ProjPoint::parse(c.a), ProjPoint::parse(c.p),
                                       Rational(1, 2), 6, g);
            const auto rough = gamma_set(sys, Word::periodic({1}), set, ProjPoint::parse(c.a), ProjPoint::parse(c.p),
                                         Rational(1, 2), 6, low);
            for (std::size_t k = 0; k < ref.members.size(); ++k) {
                const auto a = ref.members[k].verdict, b = rough.members[k].verdict;
                t.check(b == GammaVerdict::Ambiguous || a == GammaVerdict::Ambiguous || a == b,
                        [&] { return std::string(c.map); });
            }
        }
    }
}

void bounds_suites(Sampler& s, std::size_t n, std::vector<SuiteResult>& out) {
    {
        Suite t("bounds: ramification products under both kappa bounds", out);
        for (std::size_t i = 0; i < n / 2 + 1; ++i) {
            const MapSystem sys = s.system(2, 3);
            const Word w = s.periodic_word(2, 3);
            const auto orbit = iterate_word(sys, w, s.point(4), 6);
            const auto kn = kappa_constants(sys, RamificationConstants::Mode::NotTotallyRamified);
            const auto kd = kappa_constants(sys, RamificationConstants::Mode::DistinctOrbit);
            Rational prod_e = 1, prod_d = 1;
            bool ntr = true, distinct = true;
            std::set<std::string> seen;
            for (std::size_t m = 1; m < orbit.size(); ++m) {
                const RatMap& phi = sys.letter(w.letter_at(m - 1));
                const unsigned e = ramification_index(phi, orbit[m - 1].point);
                ntr = ntr && e < phi.degree();
                distinct = distinct && seen.insert(orbit[m - 1].point.to_string()).second;
                prod_e *= e;
                prod_d *= phi.degree();
                if (ntr) {
                    t.check(prod_e <= pow(kn.kappa2, static_cast<long>(m)) * prod_d, [&] { return w.to_string(); });
                }
                if (distinct) {
                    t.check(std::log(prod_e.get_d()) <= kd.log_kappa1.get_d() + 1e-12, [&] { return w.to_string(); });
                }
            }
        }
    }
    {
        Suite t("bounds: monotone in heights and #S", out);
        const MapSystem sys({RatMap::parse("z^2"), RatMap::parse("z^3")});
        const PlaceSet one = PlaceSet::parse({"inf"}), two = PlaceSet::parse({"inf", "p2"});
        const LogValue hf0 = LogValue::log_of(Integer(2)), hf1 = LogValue::log_of(Integer(7));
        for (std::size_t i = 0; i < n / 4 + 1; ++i) {
            const double hp0 = 0.05 + static_cast<double>(s.below(1000)) / 100.0;
            const double hp1 = hp0 + static_cast<double>(s.below(100)) / 10.0;
            const double ha0 = static_cast<double>(s.below(500)) / 100.0;
            const double ha1 = ha0 + static_cast<double>(s.below(100)) / 10.0;
            auto B = [&](const PlaceSet& set, double ha, const LogValue& hf, double hp) {
                return gamma_count_bound(sys, set, Rational(1, 2), Interval::from_doubles(ha, ha), hf,
                                         Interval::from_doubles(hp, hp));
            };
            const auto base = B(one, ha0, hf0, hp0);
            t.check(B(one, ha0, hf0, hp1).total_count.hi() <= base.total_count.hi() &&
                        B(one, ha0, hf0, hp1).displayed.hi() <= base.displayed.hi(),
                    [&] { return "not nonincreasing in the canonical height"; });
            t.check(B(one, ha1, hf0, hp0).total_count.lo() >= base.total_count.lo() &&
                        B(one, ha0, hf1, hp0).total_count.lo() >= base.total_count.lo() &&
                        B(two, ha0, hf0, hp0).total_count.lo() >= base.total_count.lo(),
                    [&] { return "not nondecreasing"; });
            const Interval hm = Interval::from_doubles(hp0, hp0), hm1 = Interval::from_doubles(hp1, hp1);
            t.check(corollary_bounds(sys, one, hf1, hm1).tree_count <= corollary_bounds(sys, one, hf1, hm).tree_count &&
                        corollary_bounds(sys, two, hf1, hm).s_integral_bound.lo() >=
                            corollary_bounds(sys, one, hf1, hm).s_integral_bound.lo(),
                    [&] { return "corollary bounds not monotone"; });
        }
    }
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
    std::vector<SuiteResult> out;
    const std::size_t n = 200 * std::max<std::size_t>(1, options.scale);
    Sampler s(options.seed);
    places_suites(s, n, out);
    proj1_suites(s, n, out);
    ratmap_suites(s, n, out);
    words_suites(s, n, out);
    heights_suites(s, n, options.precision, out);
    orbits_suites(s, n, out);
    integrality_suites(s, n, options.precision, out);
    bounds_suites(s, n, out);
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.failures == 0; });
}

std::string verify_table(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    std::size_t width = 5;
    for (const auto& r : results) width = std::max(width, r.name.size());
    char line[512];
    std::snprintf(line, sizeof line, "%-*s  %6s  %8s  %s\n", static_cast<int>(width), "suite", "result", "cases",
                  "failures");
    os << line;
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "%-*s  %6s  %8zu  %zu\n", static_cast<int>(width), r.name.c_str(),
                      r.failures == 0 ? "pass" : "FAIL", r.cases, r.failures);
        os << line;
        if (r.failures) os << "    first failure: " << r.detail << '\n';
    }
    return os.str();
}

std::string verify_json(const std::vector<SuiteResult>& results, const VerifyOptions& options) {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json j = {{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"pass", r.failures == 0}};
        if (r.failures) j["firstFailure"] = r.detail;
        suites.push_back(j);
    }
    nlohmann::json j = {{"subcommand", "verify"},
                        {"seed", options.seed},
                        {"precisionBits", static_cast<long>(options.precision)},
                        {"suites", suites},
                        {"pass", all_passed(results)}};
    return j.dump(2) + "\n";
}

}  // namespace orbitint
