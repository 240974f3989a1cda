#include "hermann/real_interval.hpp"

#include "hermann/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hermann {

BigFloat::BigFloat(int precision_bits) {
    mpfr_init2(value_, precision_bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_rational(const Rational& q, int precision_bits, mpfr_rnd_t rnd) {
    BigFloat out(precision_bits);
    mpfr_set_q(out.value_, q.get().get_mpq_t(), rnd);
    return out;
}

BigFloat BigFloat::from_double(double d, int precision_bits) {
    BigFloat out(precision_bits);
    mpfr_set_d(out.value_, d, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pi(int precision_bits, mpfr_rnd_t rnd) {
    BigFloat out(precision_bits);
    mpfr_const_pi(out.value_, rnd);
    return out;
}

Rational BigFloat::to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return Rational(q);
}

std::string BigFloat::str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits, value_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

namespace {

int max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(max_prec(a, b));
    mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(max_prec(a, b));
    mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(max_prec(a, b));
    mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat out(max_prec(a, b));
    mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat sin(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat cot(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_cot(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat log(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

// ---------------------------------------------------------------------------

RealInterval::RealInterval(int precision_bits)
    : lo_(precision_bits), hi_(precision_bits), precision_bits_(precision_bits) {}

RealInterval::RealInterval(BigFloat lo, BigFloat hi, int precision_bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_bits_(precision_bits) {
    if (hi_ < lo_) throw Error("interval with lo > hi");
}

RealInterval RealInterval::from_rational(const Rational& q, int precision_bits) {
    return RealInterval(BigFloat::from_rational(q, precision_bits, MPFR_RNDD),
                        BigFloat::from_rational(q, precision_bits, MPFR_RNDU), precision_bits);
}

RealInterval RealInterval::pi(int precision_bits) {
    return RealInterval(BigFloat::pi(precision_bits, MPFR_RNDD), BigFloat::pi(precision_bits, MPFR_RNDU),
                        precision_bits);
}

BigFloat RealInterval::width() const {
    BigFloat w(std::max(lo_.precision(), hi_.precision()));
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w;
}

BigFloat RealInterval::mid() const {
    BigFloat m(std::max(lo_.precision(), hi_.precision()) + 1);
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m;
}

BigFloat RealInterval::mag() const {
    BigFloat a = abs(lo_);
    BigFloat b = abs(hi_);
    return a < b ? b : a;
}

RealInterval RealInterval::operator-() const {
    BigFloat lo(hi_.precision()), hi(lo_.precision());
    mpfr_neg(lo.raw(), hi_.raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), lo_.raw(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi), precision_bits_);
}

namespace {

int result_prec(const RealInterval& a, const RealInterval& b) {
    return std::max({a.lo().precision(), a.hi().precision(), b.lo().precision(), b.hi().precision()});
}

}  // namespace

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    const int p = result_prec(a, b);
    BigFloat lo(p), hi(p);
    mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi), std::max(a.precision_bits_, b.precision_bits_));
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) { return a + (-b); }

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    const int p = result_prec(a, b);
    const mpfr_srcptr xs[2] = {a.lo_.raw(), a.hi_.raw()};
    const mpfr_srcptr ys[2] = {b.lo_.raw(), b.hi_.raw()};
    BigFloat lo(p), hi(p), t(p);
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t.raw(), x, y, MPFR_RNDD);
            if (first || t < lo) lo = t;
            mpfr_mul(t.raw(), x, y, MPFR_RNDU);
            if (first || t > hi) hi = t;
            first = false;
        }
    return RealInterval(std::move(lo), std::move(hi), std::max(a.precision_bits_, b.precision_bits_));
}

RealInterval operator*(const Rational& q, const RealInterval& a) {
    return RealInterval::from_rational(q, std::max(a.lo().precision(), a.hi().precision())) * a;
}

RealInterval RealInterval::sqrt_nonneg() const {
    BigFloat lo(lo_.precision()), hi(hi_.precision());
    if (lo_.sign() > 0) mpfr_sqrt(lo.raw(), lo_.raw(), MPFR_RNDD);
    if (hi_.sign() > 0) mpfr_sqrt(hi.raw(), hi_.raw(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi), precision_bits_);
}

std::string RealInterval::str(int digits) const {
    BigFloat rad = width();
    mpfr_div_2ui(rad.raw(), rad.raw(), 1, MPFR_RNDU);
    return mid().str(digits) + " ± " + rad.str(2);
}

RealInterval cot_eval(const RationalAngle& a, int precision_bits) {
    const Rational q = normalize_mod_pi(a).coeff;
    if (q.is_zero()) throw PoleError("cot has a pole at " + a.str());
    if (q == Rational(1, 2)) return RealInterval::from_rational(0, precision_bits);
    if (q == Rational(1, 4)) return RealInterval::from_rational(1, precision_bits);
    if (q == Rational(3, 4)) return RealInterval::from_rational(-1, precision_bits);

    BigFloat bound(precision_bits);
    mpfr_set_ui_2exp(bound.raw(), 1, 8 - precision_bits, MPFR_RNDN);

    // cot is decreasing on (0, π); working precision grows until the enclosure is tight.
    for (int wp = precision_bits + 32;; wp += 64) {
        BigFloat q_lo = BigFloat::from_rational(q, wp, MPFR_RNDD);
        BigFloat q_hi = BigFloat::from_rational(q, wp, MPFR_RNDU);
        BigFloat theta_lo(wp), theta_hi(wp), lo(wp), hi(wp);
        mpfr_mul(theta_lo.raw(), BigFloat::pi(wp, MPFR_RNDD).raw(), q_lo.raw(), MPFR_RNDD);
        mpfr_mul(theta_hi.raw(), BigFloat::pi(wp, MPFR_RNDU).raw(), q_hi.raw(), MPFR_RNDU);
        mpfr_cot(lo.raw(), theta_hi.raw(), MPFR_RNDD);
        mpfr_cot(hi.raw(), theta_lo.raw(), MPFR_RNDU);
        RealInterval out(std::move(lo), std::move(hi), precision_bits);
        if (out.width() <= bound || wp > 16 * precision_bits + 4096) return out;
    }
}

}  // namespace hermann
