#include "hermann/angle.hpp"

namespace hermann {

std::string RationalAngle::str() const {
    if (coeff.is_zero()) return "0";
    if (coeff == Rational(1)) return "π";
    if (coeff == Rational(-1)) return "-π";
    return coeff.str() + "·π";
}

RationalAngle normalize_mod_pi(const RationalAngle& a) {
    return RationalAngle(a.coeff - Rational(mpq_class(a.coeff.floor())));
}

bool is_multiple_of(const RationalAngle& a, AngleUnit unit) {
    switch (unit) {
        case AngleUnit::Pi: return a.coeff.is_integer();
        case AngleUnit::HalfPi: return (a.coeff * Rational(2)).is_integer();
    }
    return false;
}

}  // namespace hermann
