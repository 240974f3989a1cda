#pragma once

#include "hermann/gram.hpp"
#include "hermann/rational.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hermann {

enum class Family { A, B, C, D, BC, G };

struct CartanLabel {
    Family family = Family::A;
    int rank = 1;

    /// Throws UnsupportedLabel for G with rank != 2, D with rank < 2 or rank < 1.
    void check() const;
    /// "A2", "BC3", "G2".
    std::string str() const;
    /// Inverse of str(). Throws UnsupportedLabel.
    static CartanLabel parse(std::string_view text);

    friend bool operator==(const CartanLabel&, const CartanLabel&) = default;
    friend auto operator<=>(const CartanLabel&, const CartanLabel&) = default;
};

/// Irreducible components of the root system named by `label`, each under its
/// preferred name: B1, C1 -> A1; C2 -> B2; D2 -> A1+A1; D3 -> A3.
std::vector<CartanLabel> canonical_components(const CartanLabel& label);

/// Equality of root-system types, insensitive to the low-rank coincidences above.
bool isomorphic(const std::vector<CartanLabel>& a, const std::vector<CartanLabel>& b);

/// "B2+BC1"; "∅" for the empty system.
std::string type_string(const std::vector<CartanLabel>& components);

/// A finite set of roots in integer coordinates over the simple-root basis of an
/// ambient space with Gram matrix `gram`. The ambient space may be larger than
/// the span of the roots (active subsystems live in the full space).
class RootSystem {
public:
    RootSystem() = default;
    /// Closes the set under negation and derives positive and simple roots from
    /// the lexicographic order. Does not check the axioms; see verify_axioms.
    RootSystem(GramMatrix gram, const std::vector<RootVector>& roots);

    const GramMatrix& gram() const { return gram_; }
    std::size_t ambient_rank() const { return gram_.rank(); }
    /// Dimension of the span of the roots.
    std::size_t rank() const { return simple_.size(); }

    const std::set<RootVector>& roots() const { return roots_; }
    const std::vector<RootVector>& positive_roots() const { return positive_; }
    const std::vector<RootVector>& simple_roots() const { return simple_; }
    bool contains(const RootVector& v) const { return roots_.count(v) != 0; }
    bool empty() const { return roots_.empty(); }
    /// No root has its double in the set.
    bool is_reduced() const;

    friend bool operator==(const RootSystem& a, const RootSystem& b) {
        return a.gram_ == b.gram_ && a.roots_ == b.roots_;
    }

private:
    GramMatrix gram_;
    std::set<RootVector> roots_;
    std::vector<RootVector> positive_;
    std::vector<RootVector> simple_;
};

/// Standard root system of the given type in simple-root coordinates.
RootSystem build_root_system(const CartanLabel& label);

/// Negation closure, reflection closure and integrality of Cartan numbers.
bool verify_axioms(const RootSystem& r);

/// Matrix (in the simple-root basis) of the reflection s_alpha.
RationalMatrix reflection_matrix(const RootVector& alpha, const GramMatrix& gram);

struct WeylGroup {
    std::size_t dimension = 0;
    std::vector<RationalMatrix> generators;
    std::set<RationalMatrix> elements;

    std::size_t order() const { return elements.size(); }
};

inline constexpr std::size_t kDefaultWeylBudget = 10'000'000;

/// Closure of the simple reflections, acting on the full ambient space.
/// Throws ClosureBudgetExceeded past `budget` elements.
WeylGroup weyl_group(const RootSystem& r, std::size_t budget = kDefaultWeylBudget);

bool contains_minus_identity(const WeylGroup& w);

/// Irreducible components, identified by Cartan matrix up to permutation,
/// sorted by family then rank. Throws UnrecognizedType.
std::vector<CartanLabel> decompose_and_classify(const RootSystem& r);

/// Tits: -id is in W exactly when the components span the ambient space and
/// none of them is A_k (k >= 2) or D_k (k odd).
bool tits_predicts_minus_identity(const std::vector<CartanLabel>& components, std::size_t ambient_rank);

/// Closed-form Weyl group order of an irreducible type.
std::size_t weyl_order_formula(const CartanLabel& label);

}  // namespace hermann
