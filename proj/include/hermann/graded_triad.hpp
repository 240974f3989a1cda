#pragma once

#include "hermann/angle.hpp"
#include "hermann/errors.hpp"
#include "hermann/root_system.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hermann {

/// Roots whose graded root space lies in one eigenspace ε = exp(2iφπ) of θ₁θ₂,
/// with their multiplicities. A root absent from the map has multiplicity 0.
struct Sector {
    RationalAngle phi;
    std::map<RootVector, int> roots;

    /// Roots of the sector that are positive in the ambient simple system, in order.
    std::vector<std::pair<RootVector, int>> positive() const;
    int multiplicity(const RootVector& v) const;

    friend bool operator==(const Sector&, const Sector&) = default;
};

/// Representative of a phase coefficient modulo 1 in (-1/2, 1/2].
Rational phase_in_range(const Rational& coeff);

/// Phase of the inverse eigenvalue ε⁻¹.
RationalAngle dual_phase(const RationalAngle& phi);

struct GradedRootDatum {
    std::string name;
    RootSystem sigma_tilde;
    std::vector<Sector> sectors;
    int order = 1;
    std::optional<int> zero_mult;
    std::optional<std::string> simple_roots_label;

    std::size_t rank() const { return sigma_tilde.ambient_rank(); }
    int zero_multiplicity() const { return zero_mult.value_or(0); }
    const Sector* find_sector(const RationalAngle& phi) const;

    friend bool operator==(const GradedRootDatum&, const GradedRootDatum&) = default;
};

/// Adds -α with multiplicity m to the dual sector for every (α, m), creating
/// sectors as needed, then sorts sectors by phase. Existing entries are kept
/// so that inconsistent input still surfaces in validate().
void complete_duality(std::vector<Sector>& sectors);

enum class ViolationKind {
    BadRank,
    NotPositiveDefinite,
    NotRootSystem,
    GramMismatch,
    PhiRange,
    DuplicateSector,
    EmptySector,
    BadMultiplicity,
    RootOutsideSigma,
    SigmaNotCovered,
    Duality,
    OrderMismatch,
    BadOrder,
    BadZeroMult,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
};

/// All invariant violations of the datum; empty when valid.
std::vector<Violation> validate(const GradedRootDatum& d);

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Throws ValidationError when validate() reports anything.
void require_valid(const GradedRootDatum& d);

}  // namespace hermann
