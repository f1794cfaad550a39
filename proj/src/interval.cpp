#include "orbitint/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace orbitint {

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) {
    return std::max(a.precision(), b.precision());
}

// Rounds q toward the requested direction.
void set_rational(mpfr_ptr out, const Rational& q, mpfr_rnd_t rnd) {
    mpfr_set_q(out, q.get_mpq_t(), rnd);
}

}  // namespace

Interval::Interval(mpfr_prec_t precision) {
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::enclose(const Rational& value, mpfr_prec_t precision) {
    return enclose(value, value, precision);
}

Interval Interval::enclose(const Rational& lo, const Rational& hi, mpfr_prec_t precision) {
    if (lo > hi) throw std::invalid_argument("Interval::enclose: lo > hi");
    Interval r(precision);
    set_rational(r.lo_, lo, MPFR_RNDD);
    set_rational(r.hi_, hi, MPFR_RNDU);
    return r;
}

Interval Interval::from_doubles(double lo, double hi, mpfr_prec_t precision) {
    if (lo > hi) throw std::invalid_argument("Interval::from_doubles: lo > hi");
    Interval r(precision);
    mpfr_set_d(r.lo_, lo, MPFR_RNDD);
    mpfr_set_d(r.hi_, hi, MPFR_RNDU);
    return r;
}

Interval Interval::positive_infinity(mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, 1);
    return r;
}

Interval Interval::log_of(const Integer& n, mpfr_prec_t precision) {
    if (n <= 0) throw std::invalid_argument("Interval::log_of: non-positive argument");
    Interval r(precision);
    mpfr_t tmp;
    mpfr_init2(tmp, precision);
    mpfr_set_z(tmp, n.get_mpz_t(), MPFR_RNDD);
    mpfr_log(r.lo_, tmp, MPFR_RNDD);
    mpfr_set_z(tmp, n.get_mpz_t(), MPFR_RNDU);
    mpfr_log(r.hi_, tmp, MPFR_RNDU);
    mpfr_clear(tmp);
    return r;
}

Interval Interval::log_of(const Rational& q, mpfr_prec_t precision) {
    if (q <= 0) throw std::invalid_argument("Interval::log_of: non-positive argument");
    if (q.get_den() == 1) return log_of(Integer(q.get_num()), precision);
    return log_of(Integer(q.get_num()), precision) - log_of(Integer(q.get_den()), precision);
}

Interval Interval::operator+(const Interval& rhs) const {
    Interval r(joint(*this, rhs));
    mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& rhs) const {
    Interval r(joint(*this, rhs));
    mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(precision());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& rhs) const {
    const mpfr_prec_t prec = joint(*this, rhs);
    mpfr_t cand;
    mpfr_init2(cand, prec);
    Interval r(prec);
    bool first = true;
    for (mpfr_srcptr a : {static_cast<mpfr_srcptr>(lo_), static_cast<mpfr_srcptr>(hi_)}) {
        for (mpfr_srcptr b : {rhs.lo_ptr(), rhs.hi_ptr()}) {
            mpfr_mul(cand, a, b, MPFR_RNDD);
            if (first || mpfr_less_p(cand, r.lo_)) mpfr_set(r.lo_, cand, MPFR_RNDD);
            mpfr_mul(cand, a, b, MPFR_RNDU);
            if (first || mpfr_greater_p(cand, r.hi_)) mpfr_set(r.hi_, cand, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(cand);
    return r;
}

Interval Interval::operator*(const Rational& rhs) const {
    Interval r(precision());
    if (rhs >= 0) {
        mpfr_mul_q(r.lo_, lo_, rhs.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, hi_, rhs.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_, hi_, rhs.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, lo_, rhs.get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

Interval Interval::operator/(const Interval& rhs) const {
    if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0) {
        throw std::domain_error("Interval division by an interval containing 0");
    }
    const mpfr_prec_t prec = joint(*this, rhs);
    Interval inv(prec);
    mpfr_ui_div(inv.lo_, 1, rhs.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, rhs.lo_, MPFR_RNDU);
    return *this * inv;
}

Interval Interval::operator/(const Rational& rhs) const {
    if (rhs == 0) throw std::domain_error("Interval division by zero");
    return *this * Rational(1 / rhs);
}

Interval& Interval::operator+=(const Interval& rhs) {
    *this = *this + rhs;
    return *this;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("Interval::log of non-positive interval");
    Interval r(precision());
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::intersect(const Interval& other) const {
    Interval r(joint(*this, other));
    mpfr_max(r.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, hi_, other.hi_, MPFR_RNDU);
    if (mpfr_greater_p(r.lo_, r.hi_)) {
        throw std::logic_error("disjoint enclosures: " + to_string() + " and " + other.to_string());
    }
    return r;
}

Interval Interval::clamp_nonnegative() const {
    Interval r(*this);
    if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
    if (mpfr_sgn(r.hi_) < 0) mpfr_set_zero(r.hi_, 1);
    return r;
}

Interval Interval::min(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::max(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

double Interval::lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    const double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double Interval::radius() const { return width() / 2.0; }

bool Interval::contains(double x) const {
    return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0;
}

bool Interval::contains(const Rational& x) const {
    return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool Interval::certainly_ge(const Interval& other) const { return mpfr_greaterequal_p(lo_, other.hi_); }
bool Interval::certainly_lt(const Interval& other) const { return mpfr_less_p(hi_, other.lo_); }
bool Interval::lo_positive() const { return mpfr_sgn(lo_) > 0; }

std::string Interval::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    std::string out = "[";
    mpfr_snprintf(buf.data(), buf.size(), "%.*RDg", digits, lo_);
    out += buf.data();
    out += ", ";
    mpfr_snprintf(buf.data(), buf.size(), "%.*RUg", digits, hi_);
    out += buf.data();
    out += "]";
    return out;
}

}  // namespace orbitint
