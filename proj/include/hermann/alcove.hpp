#pragma once

#include "hermann/angle.hpp"
#include "hermann/graded_triad.hpp"

#include <string>
#include <vector>

namespace hermann {

/// H = Σ x_i·π·H_i in the dual basis of the simple roots; coeffs holds the x_i.
struct AlcovePoint {
    RationalVector coeffs;

    std::size_t size() const { return coeffs.size(); }
    /// "1/4·π,0,0".
    std::string str() const;
    /// Parses "1/4,0,0" (coefficients of π). Throws ParseError.
    static AlcovePoint parse(std::string_view text);

    friend bool operator==(const AlcovePoint&, const AlcovePoint&) = default;
    friend auto operator<=>(const AlcovePoint& a, const AlcovePoint& b) { return a.coeffs <=> b.coeffs; }
};

/// ⟨α, H⟩ + φ as an exact angle. With α = Σ c_j α_j, ⟨α, H⟩ = π Σ c_j x_j.
RationalAngle pairing_angle(const GradedRootDatum& d, const RootVector& alpha, const AlcovePoint& h,
                            const RationalAngle& phi);

/// The hyperplane ⟨α, H⟩ = nπ − φ for α in the sector of phase φ.
struct Wall {
    RootVector alpha;
    RationalAngle phi;
    long n = 0;

    /// (n − φ) as a coefficient of π.
    Rational level() const { return Rational(n) - phi.coeff; }
    std::string str() const;
    friend bool operator==(const Wall&, const Wall&) = default;
};

/// Affine reflection of H in a wall: s_α(H) + 2(nπ − φ)/⟨α,α⟩·α.
AlcovePoint reflect(const GradedRootDatum& d, const AlcovePoint& h, const Wall& wall);

/// normal·x > bound (Sense::Greater) or normal·x < bound (Sense::Less) with a
/// primitive integer normal, generated by `wall`.
struct Inequality {
    enum class Sense { Greater, Less };

    RootVector normal;
    Rational bound;
    Sense sense = Sense::Greater;
    Wall wall;

    /// Positive strictly inside, zero on the hyperplane.
    Rational slack(const RationalVector& x) const;
    /// "x1+x2+x3 < 1/4".
    std::string str() const;
};

struct Alcove {
    /// Non-redundant facets: lower bounds first, then upper bounds.
    std::vector<Inequality> facets;
    std::vector<RationalVector> vertices;

    bool contains_closed(const AlcovePoint& h) const;
    bool contains_open(const AlcovePoint& h) const;
    bool is_simplex() const { return facets.size() == vertices.size(); }
};

/// P₀ = ⋂ of the slabs between consecutive walls of each sector. For α in a
/// sector of phase φ the slab is lower < ⟨α,H⟩/π < lower + 1 with lower the
/// largest n − φ that is ≤ 0. Throws EmptyAlcove if the interior is empty.
Alcove fundamental_alcove(const GradedRootDatum& d);

struct ActiveRoots {
    /// Positive active roots Σ⁺_{ε,H} per sector, in sector order.
    std::vector<std::pair<RationalAngle, std::vector<RootVector>>> per_sector;
    /// Σ̃_H as a root system in the full ambient space.
    RootSystem sigma_h;
};

/// Σ_{ε,H} = {α ∈ Σ_ε : ⟨α,H⟩ + φ_ε ∈ πZ} and its union.
ActiveRoots active_roots(const GradedRootDatum& d, const AlcovePoint& h);

struct Face {
    /// Indices (into Alcove::facets) of the facets that hold strictly.
    std::vector<std::size_t> delta;
    std::vector<RationalVector> vertices;
    /// Barycenter of the face's vertices.
    AlcovePoint representative;
    ActiveRoots active;

    bool is_vertex() const { return vertices.size() == 1; }
};

/// Every face of the closed alcove, vertices first.
std::vector<Face> faces(const GradedRootDatum& d, const Alcove& alcove);
std::vector<Face> faces(const GradedRootDatum& d);

struct Reduction {
    AlcovePoint point;
    std::vector<Wall> word;
};

inline constexpr std::size_t kMaxReductionSteps = 100000;

/// Moves H into the closed alcove by repeatedly reflecting in the most violated
/// facet wall. Throws NonTermination past `max_steps` reflections.
Reduction reduce_to_alcove(const GradedRootDatum& d, const Alcove& alcove, const AlcovePoint& h,
                           std::size_t max_steps = kMaxReductionSteps);
Reduction reduce_to_alcove(const GradedRootDatum& d, const AlcovePoint& h);

}  // namespace hermann
