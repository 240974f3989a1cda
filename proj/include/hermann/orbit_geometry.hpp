#pragma once

#include "hermann/alcove.hpp"
#include "hermann/real_interval.hpp"

#include <string>
#include <vector>

namespace hermann {

enum class TriState { Yes, No, Indeterminate };

/// "yes", "no", "indet".
std::string to_string(TriState t);

/// One element −cot(θ)·α of E_H with multiplicity m(α, ε); θ = ⟨α,H⟩ + φ_ε mod π.
struct CotTerm {
    RootVector alpha;
    RationalAngle theta;
    int mult = 0;
    RationalAngle phi;
};

/// E_H: one term per (ε, α ∈ Σ⁺_ε) with ⟨α,H⟩ + φ_ε ∉ πZ, in sector order.
std::vector<CotTerm> cot_terms(const GradedRootDatum& d, const AlcovePoint& h);

enum class Basis { SimpleRoot, Dual };

struct Eigenvalue {
    RootVector alpha;
    RationalAngle theta;
    /// ⟨α, ξ⟩, exact.
    Rational pairing;
    int mult = 0;
    /// −⟨α,ξ⟩·cot θ.
    RealInterval value;
};

/// Spectrum of the shape operator A^ξ.
struct SpectrumReport {
    int zero_mult = 0;
    /// Multiplicity carried by roots active at H; reported as part of the zero block.
    int active_mult = 0;
    std::vector<Eigenvalue> terms;

    int total_multiplicity() const;
    /// zero_mult plus the multiplicities of the non-active roots.
    int tangent_multiplicity() const;
};

/// Eigenvalues at the normal direction ξ ∈ 𝔞 (coordinates in `basis`).
SpectrumReport shape_spectrum(const GradedRootDatum& d, const AlcovePoint& h, const RationalVector& xi,
                              Basis basis = Basis::Dual, int precision_bits = kDefaultPrecisionBits);

/// m_H = −Σ m(α,ε)·cot(θ)·α as a formal sum with certified numeric coordinates.
struct MeanCurvature {
    std::vector<CotTerm> terms;
    /// Coordinates of m_H in the simple-root basis.
    std::vector<RealInterval> coords;
    RealInterval norm;
    /// Every cot factor is cot(π/2) = 0.
    bool exactly_zero = false;
    /// Requested working precision.
    int precision_bits = kDefaultPrecisionBits;
};

MeanCurvature mean_curvature(const GradedRootDatum& d, const AlcovePoint& h,
                             int precision_bits = kDefaultPrecisionBits);

/// Invariance of E_H under multiplication by −1, decided line by line.
TriState is_austere(const GradedRootDatum& d, const AlcovePoint& h, int precision_bits = kDefaultPrecisionBits,
                    int max_precision_bits = kMaxPrecisionBits);

/// ⟨α,H⟩ + φ_ε ∈ (π/2)Z for every sector and every α ∈ Σ⁺_ε.
bool is_totally_geodesic(const GradedRootDatum& d, const AlcovePoint& h);

struct SymmetryFlags {
    bool arid_sufficient = false;
    bool weakly_reflective_sufficient = false;
    std::vector<CartanLabel> type;
};

/// arid* ⟺ Span(Σ̃_H) = 𝔞; WR* ⟺ arid* and −id ∈ W(Σ̃_H). The Weyl group
/// result is cross-checked against the Tits table; disagreement throws
/// InternalInconsistency.
SymmetryFlags symmetry_flags(const GradedRootDatum& d, const AlcovePoint& h);
SymmetryFlags symmetry_flags(const GradedRootDatum& d, const ActiveRoots& active);

struct OrbitReport {
    AlcovePoint point;
    ActiveRoots active;
    std::vector<CartanLabel> type;
    TriState minimal = TriState::Indeterminate;
    TriState austere = TriState::Indeterminate;
    bool totally_geodesic = false;
    bool arid_sufficient = false;
    bool weakly_reflective_sufficient = false;
    MeanCurvature mean_curvature;
};

OrbitReport analyze(const GradedRootDatum& d, const AlcovePoint& h, int precision_bits = kDefaultPrecisionBits);

struct ScanHit {
    AlcovePoint point;
    TriState verdict;
};

/// is_austere at every point of the closed alcove with coordinates in (1/N)Z,
/// in lexicographic order; only yes/indeterminate points are returned.
std::vector<ScanHit> scan_austere(const GradedRootDatum& d, long denominator, unsigned jobs = 1);

// --- volume functional and minimal orbits -----------------------------------

/// V(x) = Σ m(α,ε)·log|sin(π(c·x + φ))| at a point given by its x-coordinates.
BigFloat volume_functional(const GradedRootDatum& d, const std::vector<BigFloat>& x);

/// ∂V/∂x_i = π Σ m(α,ε)·cot(θ)·c_i. Equals −π times the simple-root coordinates of m_H.
std::vector<BigFloat> volume_gradient(const GradedRootDatum& d, const std::vector<BigFloat>& x);

struct MinimalOrbit {
    /// Dyadic-rational point returned by the solver.
    AlcovePoint point;
    /// Certified enclosure of ‖m_H‖ at that point.
    RealInterval mean_curvature_norm;
    int iterations = 0;
};

/// Maximizes the concave V on the open alcove by damped Newton from the
/// barycenter. Throws NoConvergence if ‖m_H‖ < tolerance is not certified
/// within the iteration cap.
MinimalOrbit find_minimal(const GradedRootDatum& d, double tolerance = 1e-20, int precision_bits = 256,
                          int max_iterations = 200);

}  // namespace hermann
