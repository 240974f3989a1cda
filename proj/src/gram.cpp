#include "hermann/gram.hpp"

#include "hermann/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hermann {

bool RootVector::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
}

bool RootVector::is_positive() const {
    return !is_zero() && std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
}

RationalVector RootVector::to_rational() const {
    RationalVector out;
    out.reserve(c.size());
    for (long x : c) out.emplace_back(x);
    return out;
}

std::pair<RootVector, long> RootVector::primitive() const {
    long g = 0;
    for (long x : c) g = std::gcd(g, x);
    if (g == 0) return {*this, 0};
    RootVector dir = *this;
    for (long& x : dir.c) x /= g;
    auto first = std::find_if(dir.c.begin(), dir.c.end(), [](long x) { return x != 0; });
    if (*first < 0) {
        dir = -dir;
        g = -g;
    }
    return {dir, g};
}

std::string RootVector::str() const {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long k = c[i];
        if (k < 0) {
            out += "-";
            k = -k;
        } else if (!out.empty()) {
            out += "+";
        }
        if (k != 1) out += std::to_string(k);
        out += "a" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

RootVector RootVector::operator-() const {
    RootVector out = *this;
    for (long& x : out.c) x = -x;
    return out;
}

RootVector operator+(const RootVector& a, const RootVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("root vectors of different length");
    RootVector out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out.c[i] += b.c[i];
    return out;
}

RootVector operator-(const RootVector& a, const RootVector& b) { return a + (-b); }

RootVector operator*(long k, const RootVector& v) {
    RootVector out = v;
    for (long& x : out.c) x *= k;
    return out;
}

GramMatrix::GramMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw DimensionMismatch("Gram matrix must be square");
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (std::size_t j = i + 1; j < entries_.cols(); ++j)
            if (entries_(i, j) != entries_(j, i)) throw DimensionMismatch("Gram matrix must be symmetric");
}

bool GramMatrix::is_positive_definite() const {
    const std::size_t n = rank();
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = entries_(i, j);
        if (determinant(minor).sign() <= 0) return false;
    }
    return true;
}

Rational inner(const RationalVector& u, const RationalVector& v, const GramMatrix& g) {
    if (u.size() != g.rank() || v.size() != g.rank())
        throw DimensionMismatch("inner: vector length does not match Gram rank");
    Rational sum = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) sum += u[i] * g(i, j) * v[j];
    }
    return sum;
}

Rational inner(const RootVector& u, const RootVector& v, const GramMatrix& g) {
    if (u.size() != g.rank() || v.size() != g.rank())
        throw DimensionMismatch("inner: vector length does not match Gram rank");
    Rational sum = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) sum += Rational(u[i] * v[j]) * g(i, j);
    }
    return sum;
}

RationalMatrix dual_basis(const GramMatrix& g) {
    if (!g.is_positive_definite()) throw SingularGram("Gram matrix is not positive definite");
    // <H_i, a_j> = (G h_i)_j, so the H_i are the columns of G^{-1}.
    const std::size_t n = g.rank();
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector e(n);
        e[i] = 1;
        auto h = solve_linear(g.entries(), e);
        if (!h) throw SingularGram("Gram matrix is singular");
        for (std::size_t j = 0; j < n; ++j) out(j, i) = (*h)[j];
    }
    return out;
}

}  // namespace hermann
