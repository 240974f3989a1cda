#pragma once

#include "hermann/angle.hpp"
#include "hermann/rational.hpp"

#include <mpfr.h>
#include <string>

namespace hermann {

inline constexpr int kDefaultPrecisionBits = 192;
inline constexpr int kMaxPrecisionBits = 1536;

/// RAII wrapper around an mpfr_t. Arithmetic operators round to nearest at
/// the larger of the operand precisions.
class BigFloat {
public:
    explicit BigFloat(int precision_bits = kDefaultPrecisionBits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& q, int precision_bits, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat from_double(double d, int precision_bits);
    static BigFloat pi(int precision_bits, mpfr_rnd_t rnd = MPFR_RNDN);

    mpfr_ptr raw() { return value_; }
    mpfr_srcptr raw() const { return value_; }
    int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Exact value as a rational (every finite binary float is dyadic).
    Rational to_rational() const;
    /// Scientific notation with the given number of significant digits after the point.
    std::string str(int digits = 20) const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cot(const BigFloat& x);
BigFloat log(const BigFloat& x);

/// Closed interval [lo, hi] with outward-rounded endpoints.
class RealInterval {
public:
    explicit RealInterval(int precision_bits = kDefaultPrecisionBits);
    RealInterval(BigFloat lo, BigFloat hi, int precision_bits);

    /// Tightest interval around q at the given precision (degenerate when q is dyadic).
    static RealInterval from_rational(const Rational& q, int precision_bits);
    static RealInterval pi(int precision_bits);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    int precision_bits() const { return precision_bits_; }

    BigFloat width() const;
    BigFloat mid() const;
    /// Largest absolute value in the interval.
    BigFloat mag() const;

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool certainly_positive() const { return lo_.sign() > 0; }
    bool certainly_negative() const { return hi_.sign() < 0; }
    bool overlaps(const RealInterval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
    bool contains(const RealInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

    RealInterval operator-() const;
    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const Rational& q, const RealInterval& a);
    RealInterval& operator+=(const RealInterval& o) { return *this = *this + o; }

    /// Square root of the nonnegative part.
    RealInterval sqrt_nonneg() const;

    /// "mid ± rad" rendering with the given number of digits.
    std::string str(int digits = 20) const;

private:
    BigFloat lo_;
    BigFloat hi_;
    int precision_bits_;
};

/// Certified enclosure of cot(a). Throws PoleError when a ∈ πZ.
/// The width is at most 2^(8 - precision_bits).
RealInterval cot_eval(const RationalAngle& a, int precision_bits = kDefaultPrecisionBits);

}  // namespace hermann
