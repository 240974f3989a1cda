#pragma once

#include "hermann/rational.hpp"

#include <string>

namespace hermann {

/// The angle coeff * pi. Every trigonometric argument in the library lives here.
struct RationalAngle {
    Rational coeff;

    RationalAngle() = default;
    explicit RationalAngle(Rational c) : coeff(std::move(c)) {}

    RationalAngle operator-() const { return RationalAngle(-coeff); }
    friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
        return RationalAngle(a.coeff + b.coeff);
    }
    friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
        return RationalAngle(a.coeff - b.coeff);
    }
    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
    friend auto operator<=>(const RationalAngle& a, const RationalAngle& b) { return a.coeff <=> b.coeff; }

    /// "p/q·π" style rendering ("0" for the zero angle).
    std::string str() const;
};

enum class AngleUnit { Pi, HalfPi };

/// Representative of a modulo pi with coefficient in [0, 1).
RationalAngle normalize_mod_pi(const RationalAngle& a);

/// Exact test a ∈ unit·Z.
bool is_multiple_of(const RationalAngle& a, AngleUnit unit);

}  // namespace hermann
