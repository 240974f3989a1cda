#include "hermann/catalog.hpp"
#include "hermann/orbit_geometry.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hermann;

namespace {

AlcovePoint P(const char* s) { return AlcovePoint::parse(s); }

const GradedRootDatum& so_even() { static const GradedRootDatum d = catalog("so_even"); return d; }
const GradedRootDatum& so_even_r2() { static const GradedRootDatum d = catalog("so_even", {7, 5}); return d; }
const GradedRootDatum& su_sp() { static const GradedRootDatum d = catalog("su_sp"); return d; }
const GradedRootDatum& g2() { static const GradedRootDatum d = catalog("so8_g2"); return d; }

std::multiset<std::tuple<RootVector, Rational, int>> term_set(const std::vector<CotTerm>& ts) {
    std::multiset<std::tuple<RootVector, Rational, int>> out;
    for (const CotTerm& t : ts) out.insert({t.alpha, t.theta.coeff, t.mult});
    return out;
}

AlcovePoint random_interior(std::mt19937& rng, const GradedRootDatum& d) {
    const Alcove a = fundamental_alcove(d);
    std::uniform_int_distribution<long> w(1, 50);
    for (;;) {
        // random convex combination of the vertices
        std::vector<long> ws;
        long total = 0;
        for (std::size_t i = 0; i < a.vertices.size(); ++i) total += ws.emplace_back(w(rng));
        AlcovePoint p;
        p.coeffs.assign(d.rank(), Rational(0));
        for (std::size_t i = 0; i < a.vertices.size(); ++i)
            for (std::size_t j = 0; j < d.rank(); ++j) p.coeffs[j] += Rational(ws[i], total) * a.vertices[i][j];
        if (a.contains_open(p)) return p;
    }
}

// Direct summation of m_H = -Σ m cot(θ) α at `prec` bits with MPFR cos/sin,
// iterating the sectors without the library's term extraction.
std::vector<BigFloat> direct_mean_curvature(const GradedRootDatum& d, const AlcovePoint& h, int prec) {
    std::vector<BigFloat> out(d.rank(), BigFloat(prec));
    const BigFloat pi = BigFloat::pi(prec);
    for (const Sector& s : d.sectors)
        for (const auto& [alpha, m] : s.roots) {
            if (!alpha.is_positive()) continue;
            Rational t = s.phi.coeff;
            for (std::size_t i = 0; i < d.rank(); ++i) t += Rational(alpha[i]) * h.coeffs[i];
            if (t.is_integer()) continue;
            BigFloat x = pi * BigFloat::from_rational(t, prec), c(prec), sn(prec);
            mpfr_cos(c.raw(), x.raw(), MPFR_RNDN);
            mpfr_sin(sn.raw(), x.raw(), MPFR_RNDN);
            const BigFloat w = BigFloat::from_rational(Rational(m), prec) * c / sn;
            for (std::size_t i = 0; i < d.rank(); ++i)
                out[i] -= BigFloat::from_rational(Rational(alpha[i]), prec) * w;
        }
    return out;
}

BigFloat gram_norm(const GradedRootDatum& d, const std::vector<BigFloat>& v, int prec) {
    BigFloat s(prec);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            s += BigFloat::from_rational(d.sigma_tilde.gram()(i, j), prec) * v[i] * v[j];
    return sqrt(s);
}

}  // namespace

TEST(CotTerms, SoEvenAtZero) {
    const auto ts = cot_terms(so_even(), P("0,0,0"));
    const RootVector e1{1, 1, 1}, e2{0, 1, 1}, e3{0, 0, 1};
    int quarter = 0, three_quarter = 0, half = 0;
    for (const CotTerm& t : ts) {
        if (t.phi.coeff.is_zero()) ADD_FAILURE() << "Σ₁ is active at H = 0";
        if (t.theta.coeff == Rational(1, 4)) {
            ++quarter;
            EXPECT_TRUE(t.alpha == e1 || t.alpha == e2 || t.alpha == e3);
            EXPECT_EQ(t.mult, 2);
        } else if (t.theta.coeff == Rational(3, 4)) {
            ++three_quarter;
            EXPECT_EQ(t.mult, 2);
        } else {
            EXPECT_EQ(t.theta.coeff, Rational(1, 2));
            ++half;
        }
    }
    EXPECT_EQ(quarter, 3);
    EXPECT_EQ(three_quarter, 3);
    EXPECT_EQ(half, 9);  // Σ₋₁ ≅ B₃ has 9 positive roots
}

TEST(CotTerms, G2AtThirdH2) {
    const auto ts = term_set(cot_terms(g2(), P("0,1/3")));
    EXPECT_EQ(ts.count({RootVector{1, 1}, Rational(2, 3), 1}), 1u);
}

TEST(CotTerms, GenericPointCountsEveryRoot) {
    std::mt19937 rng(21);
    for (const GradedRootDatum* d : {&so_even(), &su_sp(), &g2()}) {
        std::size_t expected = 0;
        for (const Sector& s : d->sectors) expected += s.positive().size();
        const AlcovePoint h = random_interior(rng, *d);
        EXPECT_EQ(cot_terms(*d, h).size(), expected);
        EXPECT_FALSE(active_roots(*d, h).sigma_h.rank() > 0);
    }
}

TEST(Spectrum, ZeroNormal) {
    const SpectrumReport r = shape_spectrum(so_even(), P("0,0,0"), {0, 0, 0});
    for (const Eigenvalue& e : r.terms) {
        EXPECT_TRUE(e.value.lo().is_zero());
        EXPECT_TRUE(e.value.hi().is_zero());
    }
}

TEST(Spectrum, SoEvenAtZeroAlongH1) {
    // e1-terms from Σ_{±i}: -⟨e1,H1⟩cot(π/4) = -1 and -⟨e1,H1⟩cot(3π/4) = +1.
    const SpectrumReport r = shape_spectrum(so_even(), P("0,0,0"), {1, 0, 0});
    const RootVector e1{1, 1, 1};
    std::multiset<double> e1_values;
    for (const Eigenvalue& e : r.terms) {
        if (e.theta.coeff == Rational(1, 2)) {
            EXPECT_TRUE(e.value.lo().is_zero() && e.value.hi().is_zero());
            continue;
        }
        if (e.alpha != e1) continue;
        EXPECT_EQ(e.pairing, Rational(1));
        EXPECT_EQ(e.mult, 2);
        e1_values.insert(e.value.mid().to_double());
    }
    EXPECT_EQ(e1_values, (std::multiset<double>{-1.0, 1.0}));
}

TEST(Spectrum, IsotropyTotallyGeodesicPoint) {
    const GradedRootDatum d = catalog("isotropy", {.label = CartanLabel::parse("A1")});
    const SpectrumReport r = shape_spectrum(d, P("1/2"), {1}, Basis::SimpleRoot);
    ASSERT_EQ(r.terms.size(), 1u);
    EXPECT_EQ(r.terms[0].pairing, Rational(2));  // ⟨α,α⟩
    EXPECT_TRUE(r.terms[0].value.lo().is_zero() && r.terms[0].value.hi().is_zero());
}

TEST(Spectrum, TotalMultiplicityConstantAndLinearInXi) {
    std::mt19937 rng(22);
    for (const GradedRootDatum* d : {&so_even(), &su_sp(), &g2()}) {
        int total = d->zero_multiplicity();
        for (const Sector& s : d->sectors)
            for (const auto& kv : s.positive()) total += kv.second;
        const Alcove a = fundamental_alcove(*d);
        std::vector<AlcovePoint> pts{random_interior(rng, *d)};
        for (const RationalVector& v : a.vertices) pts.push_back(AlcovePoint{v});
        for (const AlcovePoint& h : pts) {
            RationalVector xi(d->rank()), xi3(d->rank());
            for (std::size_t i = 0; i < d->rank(); ++i) {
                xi[i] = Rational(static_cast<long>(i) + 1, 3);
                xi3[i] = xi[i] * 3;
            }
            const SpectrumReport r1 = shape_spectrum(*d, h, xi), r3 = shape_spectrum(*d, h, xi3);
            EXPECT_EQ(r1.total_multiplicity(), total);
            ASSERT_EQ(r1.terms.size(), r3.terms.size());
            for (std::size_t k = 0; k < r1.terms.size(); ++k)
                EXPECT_TRUE((Rational(3) * r1.terms[k].value).overlaps(r3.terms[k].value));
            // Dual-basis and simple-root-basis inputs describing the same ξ agree.
            const RationalMatrix h_cols = dual_basis(d->sigma_tilde.gram());
            const SpectrumReport rs = shape_spectrum(*d, h, h_cols * xi, Basis::SimpleRoot);
            for (std::size_t k = 0; k < r1.terms.size(); ++k) EXPECT_EQ(rs.terms[k].pairing, r1.terms[k].pairing);
        }
    }
}

TEST(MeanCurvature, TotallyGeodesicIsExactlyZero) {
    const GradedRootDatum d = catalog("isotropy", {.label = CartanLabel::parse("A1")});
    const MeanCurvature mc = mean_curvature(d, P("1/2"));
    EXPECT_TRUE(mc.exactly_zero);
    EXPECT_TRUE(mc.norm.hi().is_zero());
}

TEST(MeanCurvature, AustereQuarterPointEnclosesZero) {
    const MeanCurvature mc = mean_curvature(so_even(), P("1/4,0,0"));
    EXPECT_TRUE(mc.norm.contains_zero());
    BigFloat bound(64);
    mpfr_set_ui_2exp(bound.raw(), 1, -100, MPFR_RNDN);
    EXPECT_LT(mc.norm.width(), bound);
}

TEST(MeanCurvature, MatchesDirectSummation) {
    const GradedRootDatum& d = so_even_r2();
    const AlcovePoint h = P("1/8,1/16");
    const MeanCurvature mc = mean_curvature(d, h, 192);
    const auto direct = direct_mean_curvature(d, h, 384);
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_LE(mc.coords[i].lo(), direct[i]);
        EXPECT_GE(mc.coords[i].hi(), direct[i]);
    }
    const BigFloat n = gram_norm(d, direct, 384);
    EXPECT_TRUE(mc.norm.certainly_positive());
    EXPECT_LE(mc.norm.lo(), n);
    EXPECT_GE(mc.norm.hi(), n);
}

TEST(MeanCurvature, MatchesDirectSummationRandom) {
    std::mt19937 rng(23);
    for (const GradedRootDatum* d : {&so_even(), &su_sp(), &g2()})
        for (int k = 0; k < 10; ++k) {
            const AlcovePoint h = random_interior(rng, *d);
            const MeanCurvature mc = mean_curvature(*d, h, 192);
            const auto direct = direct_mean_curvature(*d, h, 384);
            for (std::size_t i = 0; i < d->rank(); ++i) {
                EXPECT_LE(mc.coords[i].lo(), direct[i]);
                EXPECT_GE(mc.coords[i].hi(), direct[i]);
            }
        }
}

TEST(Austere, ClassificationExamples) {
    for (const char* p : {"0,0,0", "1/4,0,0", "0,1/4,0", "0,0,1/4"}) {
        EXPECT_EQ(is_austere(so_even(), P(p)), TriState::Yes) << p;
        EXPECT_EQ(is_austere(su_sp(), P(p)), TriState::Yes) << p;
    }
    EXPECT_EQ(is_austere(su_sp(), P("0,0,1/8")), TriState::No);
    EXPECT_EQ(is_austere(g2(), P("0,1/3")), TriState::No);
    EXPECT_EQ(is_austere(g2(), P("0,0")), TriState::Yes);
    EXPECT_EQ(is_austere(g2(), P("1/6,0")), TriState::Yes);
}

TEST(Austere, ZeroTermsMatchThemselves) {
    const GradedRootDatum d = catalog("isotropy", {.label = CartanLabel::parse("A1")});
    EXPECT_EQ(is_austere(d, P("1/2")), TriState::Yes);
    EXPECT_EQ(is_austere(d, P("1/3")), TriState::No);
}

TEST(Austere, CrossCoefficientMatch) {
    // BC1, m(α) = 2, m(2α) = 1. At x = 1/3 the line holds -1/√3 (×2) and 2/√3 (×1);
    // at x = 1/4 it holds -1 (×2) and a zero term.
    const GradedRootDatum d = catalog("isotropy", {.label = CartanLabel::parse("BC1"), .mults = {2, 1}});
    EXPECT_EQ(is_austere(d, P("1/3")), TriState::No);
    EXPECT_EQ(is_austere(d, P("1/4")), TriState::No);
    EXPECT_EQ(is_austere(d, P("1/2")), TriState::Yes);
    // With no precision budget the cross-coefficient comparison cannot be certified.
    EXPECT_EQ(is_austere(d, P("1/3"), 192, 64), TriState::Indeterminate);
    EXPECT_EQ(is_austere(d, P("1/2"), 192, 64), TriState::Yes);
}

TEST(Austere, InvariantUnderAffineWeylAction) {
    std::mt19937 rng(24);
    std::uniform_int_distribution<long> num(-48, 48);
    for (const GradedRootDatum* d : {&so_even(), &su_sp(), &g2()})
        for (int k = 0; k < 40; ++k) {
            AlcovePoint h;
            for (std::size_t i = 0; i < d->rank(); ++i) h.coeffs.push_back(Rational(num(rng), 24));
            const AlcovePoint r = reduce_to_alcove(*d, h).point;
            EXPECT_EQ(is_austere(*d, h), is_austere(*d, r)) << h.str();
            EXPECT_EQ(is_totally_geodesic(*d, h), is_totally_geodesic(*d, r));
            EXPECT_EQ(active_roots(*d, h).sigma_h.rank(), active_roots(*d, r).sigma_h.rank());
        }
}

TEST(Austere, RelabelingSymmetry) {
    // Replace every φ by -φ and negate the roots; m(α,ε) = m(-α,ε⁻¹) makes this the same datum.
    for (const GradedRootDatum* d : {&so_even(), &su_sp(), &g2()}) {
        GradedRootDatum r = *d;
        r.sectors.clear();
        for (const Sector& s : d->sectors) {
            Sector t{RationalAngle(phase_in_range(-s.phi.coeff)), {}};
            for (const auto& [a, m] : s.roots) t.roots[-a] = m;
            r.sectors.push_back(t);
        }
        std::sort(r.sectors.begin(), r.sectors.end(), [](const Sector& a, const Sector& b) { return a.phi < b.phi; });
        EXPECT_TRUE(validate(r).empty());
        std::mt19937 rng(25);
        std::uniform_int_distribution<long> num(0, 24);
        for (int k = 0; k < 30; ++k) {
            AlcovePoint h;
            for (std::size_t i = 0; i < d->rank(); ++i) h.coeffs.push_back(Rational(num(rng), 96));
            EXPECT_EQ(is_austere(*d, h), is_austere(r, h));
        }
    }
}

TEST(TotallyGeodesic, Examples) {
    EXPECT_TRUE(is_totally_geodesic(catalog("isotropy", {.label = CartanLabel::parse("A1")}), P("1/2")));
    EXPECT_FALSE(is_totally_geodesic(so_even(), P("0,0,0")));
    EXPECT_FALSE(is_totally_geodesic(g2(), P("1/6,0")));
}

TEST(Flags, ClassificationExamples) {
    for (const char* p : {"1/4,0,0", "0,1/4,0", "0,0,1/4", "0,0,0"}) {
        const SymmetryFlags f = symmetry_flags(so_even(), P(p));
        EXPECT_TRUE(f.arid_sufficient && f.weakly_reflective_sufficient) << p;
    }
    EXPECT_TRUE(isomorphic(symmetry_flags(so_even(), P("1/4,0,0")).type,
                           {CartanLabel::parse("B1"), CartanLabel::parse("BC2")}));
    EXPECT_TRUE(isomorphic(symmetry_flags(so_even(), P("0,1/4,0")).type,
                           {CartanLabel::parse("B2"), CartanLabel::parse("BC1")}));
    EXPECT_TRUE(isomorphic(symmetry_flags(so_even(), P("0,0,1/4")).type, {CartanLabel::parse("B3")}));
    const SymmetryFlags a2 = symmetry_flags(g2(), P("0,1/3"));
    EXPECT_TRUE(a2.arid_sufficient);
    EXPECT_FALSE(a2.weakly_reflective_sufficient);
    std::mt19937 rng(26);
    const SymmetryFlags generic = symmetry_flags(g2(), random_interior(rng, g2()));
    EXPECT_FALSE(generic.arid_sufficient || generic.weakly_reflective_sufficient);
}

TEST(Analyze, FlagImplicationsOnGrid) {
    for (const GradedRootDatum* d : {&so_even(), &g2()}) {
        const Alcove a = fundamental_alcove(*d);
        std::vector<long> k(d->rank(), 0);
        const long n = d->rank() == 3 ? 8 : 12;
        for (;;) {
            AlcovePoint h;
            for (long v : k) h.coeffs.push_back(Rational(v, n * 4));
            if (a.contains_closed(h)) {
                const OrbitReport r = analyze(*d, h);
                if (r.totally_geodesic) EXPECT_EQ(r.austere, TriState::Yes);
                if (r.austere == TriState::Yes || r.arid_sufficient) {
                    EXPECT_TRUE(r.mean_curvature.norm.contains_zero()) << h.str();
                    EXPECT_EQ(r.minimal, TriState::Yes);
                }
                if (r.weakly_reflective_sufficient) EXPECT_TRUE(r.arid_sufficient);
                if (r.minimal == TriState::No) EXPECT_TRUE(r.mean_curvature.norm.certainly_positive());
            }
            std::size_t i = 0;
            while (i < k.size() && ++k[i] > n) k[i++] = 0;
            if (i == k.size()) break;
        }
    }
}

TEST(Scan, ClassificationGrids) {
    auto points = [](const std::vector<ScanHit>& hits) {
        std::vector<AlcovePoint> out;
        for (const ScanHit& h : hits) {
            EXPECT_EQ(h.verdict, TriState::Yes);
            out.push_back(h.point);
        }
        return out;
    };
    EXPECT_EQ(points(scan_austere(so_even_r2(), 24)), (std::vector<AlcovePoint>{P("0,0"), P("0,1/4"), P("1/4,0")}));
    EXPECT_EQ(points(scan_austere(g2(), 36)), (std::vector<AlcovePoint>{P("0,0"), P("1/6,0")}));
    EXPECT_EQ(points(scan_austere(g2(), 1)), (std::vector<AlcovePoint>{P("0,0")}));
    EXPECT_THROW(scan_austere(g2(), 0), BadParameters);
}

TEST(Scan, ParallelMatchesSerial) {
    const auto serial = scan_austere(su_sp(), 16, 1);
    const auto parallel = scan_austere(su_sp(), 16, 7);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].point, parallel[i].point);
        EXPECT_EQ(serial[i].verdict, parallel[i].verdict);
    }
}

TEST(Volume, GradientMatchesFiniteDifferences) {
    std::mt19937 rng(27);
    const int prec = 256;
    const BigFloat step = BigFloat::from_rational(Rational(1, 100000000), prec);
    for (const GradedRootDatum* d : {&so_even(), &su_sp(), &g2()})
        for (int k = 0; k < 5; ++k) {
            const AlcovePoint h = random_interior(rng, *d);
            const MeanCurvature mc = mean_curvature(*d, h, prec);
            std::vector<BigFloat> x;
            for (const Rational& q : h.coeffs) x.push_back(BigFloat::from_rational(q, prec));
            const BigFloat pi = BigFloat::pi(prec);
            for (std::size_t i = 0; i < d->rank(); ++i) {
                auto xp = x, xm = x;
                xp[i] += step;
                xm[i] -= step;
                const BigFloat fd = (volume_functional(*d, xp) - volume_functional(*d, xm)) /
                                    (BigFloat::from_rational(Rational(2), prec) * step);
                const double expected = mc.coords[i].mid().to_double();
                const double got = -(fd / pi).to_double();
                EXPECT_NEAR(got, expected, 1e-6 * std::max(1.0, std::abs(expected)));
                EXPECT_NEAR((volume_gradient(*d, x)[i] / pi).to_double(), -expected,
                            1e-12 * std::max(1.0, std::abs(expected)));
            }
        }
}

TEST(Minimal, IsotropyA1) {
    const MinimalOrbit m = find_minimal(catalog("isotropy", {.label = CartanLabel::parse("A1")}));
    EXPECT_LT((m.point.coeffs[0] - Rational(1, 2)).abs(), Rational(1, 1000000) * Rational(1, 1000000) *
                                                               Rational(1, 1000000) * Rational(1, 1000000) *
                                                               Rational(1, 1000000));
}

TEST(Minimal, IsotropyBC1MatchesBisection) {
    const MinimalOrbit m = find_minimal(catalog("isotropy", {.label = CartanLabel::parse("BC1"), .mults = {4, 1}}));
    // 4cot(y) + 2cot(2y) is decreasing on (0, π/2); bisect for its zero.
    const int prec = 256;
    const BigFloat pi = BigFloat::pi(prec);
    BigFloat lo = BigFloat::from_rational(Rational(1, 1000), prec), hi = BigFloat::from_rational(Rational(499, 1000), prec);
    auto f = [&](const BigFloat& x) {
        const BigFloat y = pi * x;
        return BigFloat::from_rational(Rational(4), prec) * cot(y) +
               BigFloat::from_rational(Rational(2), prec) * cot(BigFloat::from_rational(Rational(2), prec) * y);
    };
    for (int i = 0; i < 200; ++i) {
        const BigFloat mid = (lo + hi) * BigFloat::from_rational(Rational(1, 2), prec);
        (f(mid).sign() > 0 ? lo : hi) = mid;
    }
    const BigFloat got = BigFloat::from_rational(m.point.coeffs[0], prec);
    EXPECT_LT(abs(got - lo).to_double(), 1e-20);
    // tan²y = 5
    EXPECT_NEAR(std::pow(std::tan(lo.to_double() * M_PI), 2), 5.0, 1e-9);
}

TEST(Minimal, CatalogDataCertified) {
    for (const GradedRootDatum* d : {&so_even(), &su_sp(), &g2()}) {
        const MinimalOrbit m = find_minimal(*d);
        EXPECT_TRUE(fundamental_alcove(*d).contains_open(m.point));
        EXPECT_LT(m.mean_curvature_norm.hi().to_double(), 1e-20);
    }
}

TEST(Minimal, NoConvergenceWhenToleranceTooTight) {
    EXPECT_THROW(find_minimal(g2(), 1e-300, 256, 5), NoConvergence);
}
