#pragma once

#include "hermann/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace hermann {

/// Integer coordinates of a root in the simple-root basis of the ambient root system.
struct RootVector {
    std::vector<long> c;

    RootVector() = default;
    explicit RootVector(std::vector<long> coords) : c(std::move(coords)) {}
    RootVector(std::initializer_list<long> coords) : c(coords) {}

    std::size_t size() const { return c.size(); }
    long operator[](std::size_t i) const { return c[i]; }
    long& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const;
    /// All coordinates >= 0 and not all zero.
    bool is_positive() const;
    RationalVector to_rational() const;
    /// Sign-normalized primitive direction and the positive multiple: v = scale * dir.
    std::pair<RootVector, long> primitive() const;
    /// "a1+2a2" style rendering in the simple roots.
    std::string str() const;

    RootVector operator-() const;
    friend RootVector operator+(const RootVector& a, const RootVector& b);
    friend RootVector operator-(const RootVector& a, const RootVector& b);
    friend RootVector operator*(long k, const RootVector& v);
    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend auto operator<=>(const RootVector& a, const RootVector& b) { return a.c <=> b.c; }
};

/// Symmetric rational matrix of inner products of the simple roots.
class GramMatrix {
public:
    GramMatrix() = default;
    /// Throws DimensionMismatch if the matrix is not square or not symmetric.
    explicit GramMatrix(RationalMatrix entries);

    std::size_t rank() const { return entries_.rows(); }
    const RationalMatrix& entries() const { return entries_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    /// Leading principal minors all > 0.
    bool is_positive_definite() const;

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
    RationalMatrix entries_;
};

/// u^T G v, exact. Throws DimensionMismatch.
Rational inner(const RootVector& u, const RootVector& v, const GramMatrix& g);
Rational inner(const RationalVector& u, const RationalVector& v, const GramMatrix& g);

/// Columns are the dual vectors H_i (<H_i, a_j> = delta_ij) in the simple-root basis.
/// Throws SingularGram unless g is positive definite.
RationalMatrix dual_basis(const GramMatrix& g);

}  // namespace hermann
