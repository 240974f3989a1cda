#include "hermann/orbit_geometry.hpp"

#include <optional>

namespace hermann {

namespace {

struct Term {
    std::vector<long> c;
    Rational phi;
    int mult;
};

std::vector<Term> all_terms(const GradedRootDatum& d) {
    std::vector<Term> out;
    for (const Sector& s : d.sectors)
        for (const auto& [alpha, m] : s.positive()) out.push_back(Term{alpha.c, s.phi.coeff, m});
    return out;
}

// π(c·x + φ)
BigFloat angle_of(const Term& t, const std::vector<BigFloat>& x, const BigFloat& pi, int prec) {
    BigFloat a = BigFloat::from_rational(t.phi, prec);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (t.c[i] != 0) a += BigFloat::from_rational(Rational(t.c[i]), prec) * x[i];
    return pi * a;
}

int working_precision(const std::vector<BigFloat>& x) {
    int p = kDefaultPrecisionBits;
    for (const BigFloat& v : x) p = std::max(p, v.precision());
    return p;
}

}  // namespace

BigFloat volume_functional(const GradedRootDatum& d, const std::vector<BigFloat>& x) {
    if (x.size() != d.rank()) throw DimensionMismatch("point has the wrong number of coordinates");
    const int prec = working_precision(x);
    const BigFloat pi = BigFloat::pi(prec);
    BigFloat v(prec);
    for (const Term& t : all_terms(d))
        v += BigFloat::from_rational(Rational(t.mult), prec) * log(abs(sin(angle_of(t, x, pi, prec))));
    return v;
}

std::vector<BigFloat> volume_gradient(const GradedRootDatum& d, const std::vector<BigFloat>& x) {
    if (x.size() != d.rank()) throw DimensionMismatch("point has the wrong number of coordinates");
    const int prec = working_precision(x);
    const BigFloat pi = BigFloat::pi(prec);
    std::vector<BigFloat> g(x.size(), BigFloat(prec));
    for (const Term& t : all_terms(d)) {
        const BigFloat w = pi * BigFloat::from_rational(Rational(t.mult), prec) * cot(angle_of(t, x, pi, prec));
        for (std::size_t i = 0; i < x.size(); ++i)
            if (t.c[i] != 0) g[i] += BigFloat::from_rational(Rational(t.c[i]), prec) * w;
    }
    return g;
}

namespace {

std::vector<std::vector<BigFloat>> volume_hessian(const GradedRootDatum& d, const std::vector<BigFloat>& x) {
    const int prec = working_precision(x);
    const BigFloat pi = BigFloat::pi(prec);
    const std::size_t n = x.size();
    std::vector<std::vector<BigFloat>> h(n, std::vector<BigFloat>(n, BigFloat(prec)));
    for (const Term& t : all_terms(d)) {
        const BigFloat s = sin(angle_of(t, x, pi, prec));
        const BigFloat w = -(pi * pi * BigFloat::from_rational(Rational(t.mult), prec)) / (s * s);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (t.c[i] != 0 && t.c[j] != 0)
                    h[i][j] += BigFloat::from_rational(Rational(t.c[i] * t.c[j]), prec) * w;
    }
    return h;
}

// Gaussian elimination with partial pivoting.
std::vector<BigFloat> solve(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
        if (a[piv][col].is_zero()) throw NoConvergence("singular Hessian");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const BigFloat f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<BigFloat> x(n, BigFloat(b.empty() ? kDefaultPrecisionBits : b[0].precision()));
    for (std::size_t i = n; i-- > 0;) {
        BigFloat s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

bool strictly_inside(const Alcove& alcove, const std::vector<BigFloat>& x, int prec) {
    for (const Inequality& f : alcove.facets) {
        BigFloat v(prec);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (f.normal[i] != 0) v += BigFloat::from_rational(Rational(f.normal[i]), prec) * x[i];
        BigFloat s = v - BigFloat::from_rational(f.bound, prec);
        if (f.sense == Inequality::Sense::Less) s = -s;
        if (s.sign() <= 0) return false;
    }
    return true;
}

AlcovePoint to_exact(const std::vector<BigFloat>& x) {
    AlcovePoint p;
    for (const BigFloat& v : x) p.coeffs.push_back(v.to_rational());
    return p;
}

}  // namespace

MinimalOrbit find_minimal(const GradedRootDatum& d, double tolerance, int precision_bits, int max_iterations) {
    if (!(tolerance > 0)) throw BadParameters("tolerance must be positive");
    const Alcove alcove = fundamental_alcove(d);
    const std::size_t n = d.rank();
    const int prec = precision_bits;
    const BigFloat tol = BigFloat::from_double(tolerance, prec);

    std::vector<BigFloat> x(n, BigFloat(prec));
    for (const RationalVector& v : alcove.vertices)
        for (std::size_t i = 0; i < n; ++i) x[i] += BigFloat::from_rational(v[i], prec);
    const BigFloat count = BigFloat::from_rational(Rational(static_cast<long>(alcove.vertices.size())), prec);
    for (BigFloat& xi : x) xi = xi / count;

    auto certify = [&](int iterations) -> std::optional<MinimalOrbit> {
        const AlcovePoint p = to_exact(x);
        if (!alcove.contains_open(p)) return std::nullopt;
        const MeanCurvature mc = mean_curvature(d, p, prec);
        if (!(mc.norm.hi() < tol)) return std::nullopt;
        return MinimalOrbit{p, mc.norm, iterations};
    };

    BigFloat value = volume_functional(d, x);
    for (int it = 0; it <= max_iterations; ++it) {
        if (auto done = certify(it)) return *done;

        const std::vector<BigFloat> g = volume_gradient(d, x);
        std::vector<BigFloat> neg_g;
        for (const BigFloat& gi : g) neg_g.push_back(-gi);
        const std::vector<BigFloat> step = solve(volume_hessian(d, x), neg_g);
        BigFloat slope(prec);
        for (std::size_t i = 0; i < n; ++i) slope += g[i] * step[i];
        if (slope.sign() <= 0) break;

        BigFloat t = BigFloat::from_double(1.0, prec);
        const BigFloat half = BigFloat::from_double(0.5, prec);
        const BigFloat armijo = BigFloat::from_double(1e-4, prec);
        bool moved = false;
        for (int k = 0; k < 200; ++k, t *= half) {
            std::vector<BigFloat> trial = x;
            for (std::size_t i = 0; i < n; ++i) trial[i] += t * step[i];
            if (!strictly_inside(alcove, trial, prec)) continue;
            const BigFloat v = volume_functional(d, trial);
            if (v >= value + armijo * t * slope) {
                x = std::move(trial);
                value = v;
                moved = true;
                break;
            }
        }
        if (!moved) {
            // Rounding dominates the line search; accept the full step if it stays inside.
            std::vector<BigFloat> trial = x;
            for (std::size_t i = 0; i < n; ++i) trial[i] += step[i];
            if (!strictly_inside(alcove, trial, prec)) break;
            x = std::move(trial);
            value = volume_functional(d, x);
        }
    }
    throw NoConvergence("no certified point with ‖m_H‖ < " + BigFloat::from_double(tolerance, 64).str(3) +
                        " at " + std::to_string(precision_bits) + " bits");
}

}  // namespace hermann
