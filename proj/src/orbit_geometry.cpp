#include "hermann/orbit_geometry.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <tuple>

namespace hermann {

std::string to_string(TriState t) {
    switch (t) {
        case TriState::Yes: return "yes";
        case TriState::No: return "no";
        case TriState::Indeterminate: return "indet";
    }
    return "indet";
}

std::vector<CotTerm> cot_terms(const GradedRootDatum& d, const AlcovePoint& h) {
    std::vector<CotTerm> out;
    for (const Sector& s : d.sectors)
        for (const auto& [alpha, m] : s.positive()) {
            const RationalAngle theta = normalize_mod_pi(pairing_angle(d, alpha, h, s.phi));
            if (theta.coeff.is_zero()) continue;
            out.push_back(CotTerm{alpha, theta, m, s.phi});
        }
    return out;
}

int SpectrumReport::total_multiplicity() const {
    int n = zero_mult + active_mult;
    for (const Eigenvalue& e : terms) n += e.mult;
    return n;
}

int SpectrumReport::tangent_multiplicity() const {
    int n = zero_mult;
    for (const Eigenvalue& e : terms) n += e.mult;
    return n;
}

namespace {

Rational pair_with(const RootVector& alpha, const RationalVector& xi, Basis basis, const GramMatrix& g) {
    if (xi.size() != alpha.size()) throw DimensionMismatch("ξ has the wrong number of coordinates");
    if (basis == Basis::SimpleRoot) return inner(alpha.to_rational(), xi, g);
    Rational s;
    for (std::size_t i = 0; i < xi.size(); ++i) s += Rational(alpha[i]) * xi[i];
    return s;
}

}  // namespace

SpectrumReport shape_spectrum(const GradedRootDatum& d, const AlcovePoint& h, const RationalVector& xi,
                              Basis basis, int precision_bits) {
    SpectrumReport r;
    r.zero_mult = d.zero_multiplicity();
    for (const Sector& s : d.sectors)
        for (const auto& [alpha, m] : s.positive()) {
            const RationalAngle theta = normalize_mod_pi(pairing_angle(d, alpha, h, s.phi));
            if (theta.coeff.is_zero()) {
                r.active_mult += m;
                continue;
            }
            const Rational p = pair_with(alpha, xi, basis, d.sigma_tilde.gram());
            r.terms.push_back(Eigenvalue{alpha, theta, p, m, -p * cot_eval(theta, precision_bits)});
        }
    return r;
}

MeanCurvature mean_curvature(const GradedRootDatum& d, const AlcovePoint& h, int precision_bits) {
    MeanCurvature mc;
    mc.terms = cot_terms(d, h);
    const std::size_t n = d.rank();
    mc.coords.assign(n, RealInterval(precision_bits));
    mc.norm = RealInterval(precision_bits);
    mc.precision_bits = precision_bits;
    mc.exactly_zero = std::all_of(mc.terms.begin(), mc.terms.end(),
                                  [](const CotTerm& t) { return t.theta.coeff == Rational(1, 2); });
    if (mc.exactly_zero) return mc;

    for (const CotTerm& t : mc.terms) {
        if (t.theta.coeff == Rational(1, 2)) continue;
        const RealInterval c = cot_eval(t.theta, precision_bits);
        for (std::size_t i = 0; i < n; ++i)
            if (t.alpha[i] != 0) mc.coords[i] += Rational(-t.mult * t.alpha[i]) * c;
    }
    const GramMatrix& g = d.sigma_tilde.gram();
    RealInterval sq(precision_bits);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!g(i, j).is_zero()) sq += g(i, j) * (mc.coords[i] * mc.coords[j]);
    mc.norm = sq.sqrt_nonneg();
    return mc;
}

namespace {

struct LineKey {
    long scale;
    Rational theta;
    friend auto operator<=>(const LineKey&, const LineKey&) = default;
    friend bool operator==(const LineKey&, const LineKey&) = default;
};

RealInterval term_value(const LineKey& k, int prec) {
    return Rational(-k.scale) * cot_eval(RationalAngle(k.theta), prec);
}

// Whether the nonzero values of keys with different scales can be told apart
// from each other and from each other's negatives at this precision.
bool cross_scale_separated(const std::vector<LineKey>& keys, int prec) {
    std::vector<RealInterval> v;
    v.reserve(keys.size());
    for (const LineKey& k : keys) v.push_back(term_value(k, prec));
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = i + 1; j < keys.size(); ++j) {
            if (keys[i].scale == keys[j].scale) continue;
            if (v[i].overlaps(v[j]) || v[i].overlaps(-v[j])) return false;
        }
    return true;
}

}  // namespace

TriState is_austere(const GradedRootDatum& d, const AlcovePoint& h, int precision_bits, int max_precision_bits) {
    std::map<RootVector, std::map<LineKey, int>> lines;
    for (const CotTerm& t : cot_terms(d, h)) {
        if (t.theta.coeff == Rational(1, 2)) continue;  // zero vector, its own negative
        auto [dir, scale] = t.alpha.primitive();
        lines[dir][LineKey{scale, t.theta.coeff}] += t.mult;
    }

    bool indeterminate = false;
    for (const auto& [dir, counts] : lines) {
        bool matched = true;
        for (const auto& [key, m] : counts) {
            auto it = counts.find(LineKey{key.scale, Rational(1) - key.theta});
            if (it == counts.end() || it->second != m) {
                matched = false;
                break;
            }
        }
        if (matched) continue;

        std::vector<LineKey> keys;
        for (const auto& kv : counts) keys.push_back(kv.first);
        bool separated = false;
        for (int prec = precision_bits; prec <= max_precision_bits; prec *= 2)
            if ((separated = cross_scale_separated(keys, prec))) break;
        if (separated) return TriState::No;
        indeterminate = true;
    }
    return indeterminate ? TriState::Indeterminate : TriState::Yes;
}

bool is_totally_geodesic(const GradedRootDatum& d, const AlcovePoint& h) {
    for (const Sector& s : d.sectors)
        for (const auto& [alpha, m] : s.positive())
            if (!is_multiple_of(pairing_angle(d, alpha, h, s.phi), AngleUnit::HalfPi)) return false;
    return true;
}

SymmetryFlags symmetry_flags(const GradedRootDatum& d, const ActiveRoots& active) {
    SymmetryFlags f;
    const RootSystem& sh = active.sigma_h;
    f.type = decompose_and_classify(sh);
    f.arid_sufficient = sh.rank() == d.rank();
    const bool minus_id = contains_minus_identity(weyl_group(sh));
    if (minus_id != tits_predicts_minus_identity(f.type, d.rank()))
        throw InternalInconsistency("−id membership of W(" + type_string(f.type) +
                                    ") disagrees with the Tits classification");
    f.weakly_reflective_sufficient = f.arid_sufficient && minus_id;
    return f;
}

SymmetryFlags symmetry_flags(const GradedRootDatum& d, const AlcovePoint& h) {
    return symmetry_flags(d, active_roots(d, h));
}

OrbitReport analyze(const GradedRootDatum& d, const AlcovePoint& h, int precision_bits) {
    OrbitReport r;
    r.point = h;
    r.active = active_roots(d, h);
    const SymmetryFlags f = symmetry_flags(d, r.active);
    r.type = f.type;
    r.arid_sufficient = f.arid_sufficient;
    r.weakly_reflective_sufficient = f.weakly_reflective_sufficient;
    r.totally_geodesic = is_totally_geodesic(d, h);
    r.austere = is_austere(d, h, precision_bits);
    r.mean_curvature = mean_curvature(d, h, precision_bits);

    // Austere and arid submanifolds are minimal.
    if (r.mean_curvature.exactly_zero || r.austere == TriState::Yes || r.arid_sufficient) {
        r.minimal = TriState::Yes;
    } else {
        for (int prec = precision_bits;; prec *= 2) {
            if (r.mean_curvature.norm.certainly_positive()) {
                r.minimal = TriState::No;
                break;
            }
            if (prec * 2 > kMaxPrecisionBits) break;
            r.mean_curvature = mean_curvature(d, h, prec * 2);
        }
    }

    if (r.totally_geodesic && r.austere != TriState::Yes)
        throw InternalInconsistency("totally geodesic point " + h.str() + " is not austere");
    if (r.weakly_reflective_sufficient && !r.arid_sufficient)
        throw InternalInconsistency("WR* without arid* at " + h.str());
    return r;
}

std::vector<ScanHit> scan_austere(const GradedRootDatum& d, long denominator, unsigned jobs) {
    if (denominator < 1) throw BadParameters("denominator must be at least 1");
    const Alcove alcove = fundamental_alcove(d);
    const std::size_t n = d.rank();
    const Rational big(denominator);

    std::vector<long> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational mn = alcove.vertices.front()[i], mx = mn;
        for (const RationalVector& v : alcove.vertices) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = -(-(mn * big)).floor().get_si();
        hi[i] = (mx * big).floor().get_si();
    }

    std::vector<AlcovePoint> grid;
    std::vector<long> k = lo;
    for (bool done = n == 0; !done;) {
        AlcovePoint p;
        for (long ki : k) p.coeffs.push_back(Rational(ki, denominator));
        if (alcove.contains_closed(p)) grid.push_back(std::move(p));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (k[i] < hi[i]) {
                ++k[i];
                break;
            }
            k[i] = lo[i];
            if (i == 0) done = true;
        }
    }

    std::vector<TriState> verdicts(grid.size(), TriState::No);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) verdicts[i] = is_austere(d, grid[i]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < grid.size(); i += workers) verdicts[i] = is_austere(d, grid[i]);
            });
        for (std::thread& t : pool) t.join();
    }

    std::vector<ScanHit> hits;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (verdicts[i] != TriState::No) hits.push_back(ScanHit{grid[i], verdicts[i]});
    return hits;
}

}  // namespace hermann
