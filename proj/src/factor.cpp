#include "orbitint/factor.hpp"

#include "orbitint/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace orbitint {

namespace {

const Integer kDeterministicLimit("3317044064679887385961981", 10);

bool miller_rabin_witness(const Integer& n, const Integer& d, unsigned s, unsigned long base) {
    Integer a = base;
    a %= n;
    if (a == 0) return false;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Integer n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n_minus_1) return false;
    }
    return true;
}

Integer pollard_brent(const Integer& n, unsigned long seed, std::uint64_t max_iterations) {
    if (mpz_even_p(n.get_mpz_t())) return Integer(2);
    Integer y = seed % n;
    const Integer c = (seed * 7 + 1) % n;
    const std::uint64_t batch = 128;
    Integer g = 1, q = 1, x, ys, t;
    std::uint64_t r = 1, iterations = 0;
    auto step = [&](Integer& v) {
        mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
        mpz_add(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) step(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t span = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < span; ++i) {
                step(y);
                mpz_sub(t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                mpz_mul(q.get_mpz_t(), q.get_mpz_t(), t.get_mpz_t());
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += span;
            iterations += span;
            if (iterations > max_iterations) return Integer(0);
        }
        r *= 2;
    }
    if (g == n) {
        do {
            step(ys);
            g = gcd(abs_value(Integer(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

// Lenstra's elliptic curve method on Montgomery curves By^2 = x^3 + Ax^2 + x,
// Suyama parametrization, with the standard baby-step giant-step second stage.
// Arithmetic is in place on scratch values; allocation dominated otherwise.
class Ecm {
public:
    explicit Ecm(const Integer& n) : n_(n) {}

    // A proper factor of n, or 0 if this curve found nothing.
    Integer curve(unsigned long sigma, unsigned long b1, unsigned long b2) {
        const Integer s(sigma);
        const Integer u = mod(s * s - 5), v = mod(4 * s);
        Point p{mod(u * u * u), mod(v * v * v)};
        // a24 = (A + 2)/4 = (v - u)^3 (3u + v) / (16 u^3 v)
        const Integer vu = mod(v - u);
        const Integer num = mod(vu * vu * vu * mod(3 * u + v));
        Integer den = mod(16 * p.x * v), inv;
        if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n_.get_mpz_t())) return proper(gcd(den, n_));
        a24_ = mod(num * inv);

        // Stage 1 in batches of primes. A batch after which the gcd is n is
        // replayed one prime at a time, which separates most such collisions.
        const auto& primes = primes_up_to(b1);
        auto power = [&](unsigned long q) {
            unsigned long qe = q;
            while (qe <= b1 / q) qe *= q;
            return qe;
        };
        Integer g;
        for (std::size_t start = 0; start < primes.size(); start += 32) {
            const std::size_t stop = std::min(primes.size(), start + 32);
            const Point saved = p;
            for (std::size_t i = start; i < stop; ++i) ladder(p, power(primes[i]));
            mpz_gcd(g.get_mpz_t(), p.z.get_mpz_t(), n_.get_mpz_t());
            if (g == 1) continue;
            if (g != n_) return g;
            p = saved;
            for (std::size_t i = start; i < stop; ++i) {
                ladder(p, power(primes[i]));
                mpz_gcd(g.get_mpz_t(), p.z.get_mpz_t(), n_.get_mpz_t());
                if (g != 1) return proper(g);
            }
        }

        // Stage 2: q = mD +- j for gcd(j, D) = 1, accumulate X_{mD} Z_j - X_j Z_{mD}.
        const unsigned long D = 2310;
        std::vector<Point> baby(D / 2 + 1);
        baby[1] = p;
        dbl(baby[2], p);
        for (unsigned long j = 3; j <= D / 2; ++j) add(baby[j], baby[j - 1], p, baby[j - 2]);
        std::vector<unsigned long> js;
        for (unsigned long j = 1; j <= D / 2; ++j) {
            if (std::gcd(j, D) == 1) js.push_back(j);
        }
        Point step = p;
        ladder(step, D);
        const unsigned long m0 = std::max(1ul, b1 / D);
        Point cur = p, prev = p, next;
        ladder(cur, m0 * D);
        if (m0 > 1) ladder(prev, (m0 - 1) * D);
        Integer acc;
        for (unsigned long m = m0; m * D <= b2 + D; ++m) {
            acc = 1;
            for (unsigned long j : js) {
                mpz_mul(t1_.get_mpz_t(), cur.x.get_mpz_t(), baby[j].z.get_mpz_t());
                mpz_submul(t1_.get_mpz_t(), baby[j].x.get_mpz_t(), cur.z.get_mpz_t());
                mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), t1_.get_mpz_t());
                mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), n_.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), n_.get_mpz_t());
            if (g != 1) return proper(g);
            if (m == 1) {
                dbl(next, cur);
            } else {
                add(next, cur, step, prev);
            }
            std::swap(prev, cur);
            std::swap(cur, next);
        }
        return 0;
    }

private:
    struct Point {
        Integer x, z;
    };

    Integer mod(const Integer& a) const {
        Integer r;
        mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n_.get_mpz_t());
        return r;
    }

    void mulmod(Integer& r, const Integer& a, const Integer& b) {
        mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n_.get_mpz_t());
    }

    Integer proper(const Integer& g) const { return g != 1 && g != n_ ? g : Integer(0); }

    // r = 2p; r may alias p
    void dbl(Point& r, const Point& p) {
        mpz_add(t1_.get_mpz_t(), p.x.get_mpz_t(), p.z.get_mpz_t());
        mulmod(t1_, t1_, t1_);
        mpz_sub(t2_.get_mpz_t(), p.x.get_mpz_t(), p.z.get_mpz_t());
        mulmod(t2_, t2_, t2_);
        mpz_sub(t3_.get_mpz_t(), t1_.get_mpz_t(), t2_.get_mpz_t());
        mulmod(r.x, t1_, t2_);
        mpz_mul(t4_.get_mpz_t(), a24_.get_mpz_t(), t3_.get_mpz_t());
        mpz_add(t4_.get_mpz_t(), t4_.get_mpz_t(), t2_.get_mpz_t());
        mpz_mod(t4_.get_mpz_t(), t4_.get_mpz_t(), n_.get_mpz_t());
        mulmod(r.z, t3_, t4_);
    }

    // r = p + q given diff = p - q; r may alias p or q but not diff
    void add(Point& r, const Point& p, const Point& q, const Point& diff) {
        mpz_sub(t1_.get_mpz_t(), p.x.get_mpz_t(), p.z.get_mpz_t());
        mpz_add(t2_.get_mpz_t(), q.x.get_mpz_t(), q.z.get_mpz_t());
        mulmod(t1_, t1_, t2_);
        mpz_add(t3_.get_mpz_t(), p.x.get_mpz_t(), p.z.get_mpz_t());
        mpz_sub(t4_.get_mpz_t(), q.x.get_mpz_t(), q.z.get_mpz_t());
        mulmod(t3_, t3_, t4_);
        mpz_add(t2_.get_mpz_t(), t1_.get_mpz_t(), t3_.get_mpz_t());
        mpz_sub(t4_.get_mpz_t(), t1_.get_mpz_t(), t3_.get_mpz_t());
        mulmod(t2_, t2_, t2_);
        mulmod(t4_, t4_, t4_);
        mulmod(r.x, diff.z, t2_);
        mulmod(r.z, diff.x, t4_);
    }

    // p = k p, k >= 1
    void ladder(Point& p, unsigned long k) {
        if (k == 1) return;
        base_ = p;
        Point& r0 = p;
        dbl(r1_, base_);
        for (int bit = 62 - __builtin_clzl(k); bit >= 0; --bit) {
            if ((k >> bit) & 1ul) {
                add(r0, r1_, r0, base_);
                dbl(r1_, r1_);
            } else {
                add(r1_, r1_, r0, base_);
                dbl(r0, r0);
            }
        }
    }

    static const std::vector<unsigned long>& primes_up_to(unsigned long b) {
        static std::map<unsigned long, std::vector<unsigned long>> cache;
        static std::mutex lock;
        std::lock_guard<std::mutex> guard(lock);
        auto& out = cache[b];
        if (out.empty()) {
            std::vector<bool> composite(b + 1, false);
            for (unsigned long i = 2; i <= b; ++i) {
                if (composite[i]) continue;
                out.push_back(i);
                for (unsigned long j = i * i; j <= b; j += i) composite[j] = true;
            }
        }
        return out;
    }

    Integer n_;
    Integer a24_;
    Integer t1_, t2_, t3_, t4_;
    Point base_, r1_;
};

Integer find_factor(const Integer& n, const FactorOptions& options) {
    // Small factors are cheapest by rho; larger ones by ECM with growing bounds.
    for (unsigned long seed = 2; seed < 4; ++seed) {
        const Integer f = pollard_brent(n, seed, std::min<std::uint64_t>(options.rho_iterations, 1u << 12));
        if (f != 0 && f != n && f != 1) return f;
    }
    Ecm ecm(n);
    unsigned long sigma = 6;
    for (const auto& [b1, curves] : {std::pair{600ul, 12}, {2000ul, 30}, {11000ul, 90}, {50000ul, 200}, {250000ul, 400}}) {
        for (int i = 0; i < curves; ++i) {
            const Integer f = ecm.curve(sigma++, b1, 100 * b1);
            if (f != 0) return f;
        }
    }
    for (unsigned long seed = 4; seed < 12; ++seed) {
        const Integer f = pollard_brent(n, seed, options.rho_iterations);
        if (f == 0) break;
        if (f != n && f != 1) return f;
    }
    return Integer(0);
}

void split(const Integer& n, const FactorOptions& options, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        split(r, options, out);
        split(r, options, out);
        return;
    }
    const Integer f = find_factor(n, options);
    if (f == 0) throw FactorizationError("could not factor " + to_string(n) + " within the configured effort");
    split(f, options, out);
    split(Integer(n / f), options, out);
}

}  // namespace

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    static const unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long p : kBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n >= kDeterministicLimit) return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned long base : kBases) {
        if (miller_rabin_witness(n, d, s, base)) return false;
    }
    return true;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n, const FactorOptions& options) {
    if (n == 0) throw ValidationError("cannot factor 0");
    Integer rest = abs_value(n);
    std::map<Integer, unsigned> found;
    for (unsigned long p = 2; p <= options.trial_bound && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++found[Integer(p)];
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }
    split(rest, options, found);
    return {found.begin(), found.end()};
}

std::vector<Integer> divisors(const Integer& n, const FactorOptions& options) {
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : factorize(n, options)) {
        const std::size_t base = out.size();
        Integer power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace orbitint
