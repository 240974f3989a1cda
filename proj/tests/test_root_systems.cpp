#include "hermann/errors.hpp"
#include "hermann/root_system.hpp"

#include <gtest/gtest.h>

using namespace hermann;

namespace {

CartanLabel L(const char* s) { return CartanLabel::parse(s); }

std::size_t expected_root_count(const CartanLabel& l) {
    const std::size_t r = static_cast<std::size_t>(l.rank);
    switch (l.family) {
        case Family::A: return r * (r + 1);
        case Family::B:
        case Family::C: return 2 * r * r;
        case Family::D: return 2 * r * (r - 1);
        case Family::BC: return 2 * r * r + 2 * r;
        case Family::G: return 12;
    }
    return 0;
}

GramMatrix gram2(long a, long b, long c) {
    RationalMatrix m(2, 2);
    m(0, 0) = a; m(0, 1) = b; m(1, 0) = b; m(1, 1) = c;
    return GramMatrix(m);
}

}  // namespace

TEST(CartanLabel, ParseAndCheck) {
    EXPECT_EQ(L("BC3").str(), "BC3");
    EXPECT_EQ(L("G2").family, Family::G);
    EXPECT_THROW(L("G3"), UnsupportedLabel);
    EXPECT_THROW(L("E6"), UnsupportedLabel);
    EXPECT_THROW(L("A0"), UnsupportedLabel);
    EXPECT_THROW(L("D1"), UnsupportedLabel);
}

TEST(RootSystem, CountsAndAxioms) {
    for (const char* s : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D2", "D3", "D4", "BC1", "BC2", "BC3",
                          "BC4", "G2"}) {
        const RootSystem r = build_root_system(L(s));
        EXPECT_EQ(r.roots().size(), expected_root_count(L(s))) << s;
        EXPECT_EQ(r.rank(), static_cast<std::size_t>(L(s).rank)) << s;
        EXPECT_TRUE(verify_axioms(r)) << s;
        EXPECT_TRUE(r.gram().is_positive_definite()) << s;
        EXPECT_EQ(r.is_reduced(), L(s).family != Family::BC) << s;
    }
}

TEST(RootSystem, G2PositiveRoots) {
    // Σ̃⁺ = {α1, α2, α1+α2, 2α1+α2, 3α1+α2, 3α1+2α2}.
    const RootSystem g2 = build_root_system(L("G2"));
    std::set<RootVector> pos(g2.positive_roots().begin(), g2.positive_roots().end());
    EXPECT_EQ(pos, (std::set<RootVector>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}));
    EXPECT_EQ(std::set<RootVector>(g2.simple_roots().begin(), g2.simple_roots().end()),
              (std::set<RootVector>{{1, 0}, {0, 1}}));
}

TEST(RootSystem, G2WithOffDiagonalMinusOneIsNotARootSystem) {
    RootSystem bad(gram2(2, -1, 6), {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
    EXPECT_FALSE(verify_axioms(bad));
    RootSystem good(gram2(2, -3, 6), {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
    EXPECT_TRUE(verify_axioms(good));
}

TEST(RootSystem, AxiomFailures) {
    EXPECT_FALSE(verify_axioms(RootSystem(gram2(2, -1, 2), {{1, 0}, {0, 1}})));  // missing α1+α2
    EXPECT_FALSE(verify_axioms(RootSystem(gram2(2, 0, 2), {{1, 0}, {3, 0}})));
}

TEST(Weyl, OrdersMatchKnownValues) {
    const std::vector<std::pair<const char*, std::size_t>> known = {
        {"A1", 2},  {"A2", 6},   {"A3", 24},  {"A4", 120}, {"B2", 8},   {"B3", 48},  {"B4", 384}, {"BC1", 2},
        {"BC2", 8}, {"BC3", 48}, {"BC4", 384}, {"D2", 4},   {"D3", 24},  {"D4", 192}, {"G2", 12},  {"C3", 48}};
    for (const auto& [s, n] : known) {
        const WeylGroup w = weyl_group(build_root_system(L(s)));
        EXPECT_EQ(w.order(), n) << s;
        EXPECT_EQ(weyl_order_formula(L(s)), n) << s;
    }
}

TEST(Weyl, MinusIdentityMatchesTits) {
    for (const char* s : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "BC1", "BC2", "BC3", "BC4", "D2", "D3", "D4", "G2"}) {
        const bool expected = !((L(s).family == Family::A && L(s).rank >= 2) || std::string(s) == "D3");
        EXPECT_EQ(contains_minus_identity(weyl_group(build_root_system(L(s)))), expected) << s;
        EXPECT_EQ(tits_predicts_minus_identity(decompose_and_classify(build_root_system(L(s))), L(s).rank), expected)
            << s;
    }
}

TEST(Weyl, BudgetExceeded) {
    EXPECT_THROW(weyl_group(build_root_system(L("B4")), 100), ClosureBudgetExceeded);
}

TEST(Weyl, ReflectionIsInvolution) {
    const RootSystem r = build_root_system(L("G2"));
    for (const RootVector& a : r.positive_roots()) {
        const RationalMatrix s = reflection_matrix(a, r.gram());
        EXPECT_EQ(s * s, RationalMatrix::identity(2));
        RationalVector v = s * a.to_rational();
        EXPECT_EQ(v, (-a).to_rational());
    }
}

TEST(Classify, IrreducibleTypes) {
    for (const char* s : {"A1", "A3", "B3", "C4", "D4", "BC2", "BC3", "G2"}) {
        const auto t = decompose_and_classify(build_root_system(L(s)));
        EXPECT_TRUE(isomorphic(t, {L(s)})) << s << " -> " << type_string(t);
    }
    EXPECT_EQ(type_string(decompose_and_classify(build_root_system(L("D2")))), "A1+A1");
    EXPECT_EQ(type_string(decompose_and_classify(build_root_system(L("D3")))), "A3");
    EXPECT_EQ(type_string(decompose_and_classify(build_root_system(L("C2")))), "B2");
    EXPECT_EQ(type_string(decompose_and_classify(RootSystem())), "∅");
}

TEST(Classify, SubsystemsOfBC3) {
    const RootSystem bc3 = build_root_system(L("BC3"));
    // α1 = e1-e2, α2 = e2-e3, α3 = e3. Roots with zero α1-coefficient: those of e2, e3.
    std::vector<RootVector> sub;
    for (const RootVector& v : bc3.roots())
        if (v[0] == 0) sub.push_back(v);
    const RootSystem s(bc3.gram(), sub);
    EXPECT_TRUE(verify_axioms(s));
    EXPECT_EQ(type_string(decompose_and_classify(s)), "BC2");
    EXPECT_EQ(s.rank(), 2u);

    // A1 (long 2e1) plus BC2 in e2, e3 spans 𝔞 and has -id.
    std::vector<RootVector> mixed = sub;
    mixed.push_back(RootVector{2, 2, 2});
    const RootSystem m(bc3.gram(), mixed);
    EXPECT_TRUE(isomorphic(decompose_and_classify(m), {L("A1"), L("BC2")}));
    EXPECT_TRUE(contains_minus_identity(weyl_group(m)));
}

TEST(Classify, LabelIsomorphism) {
    EXPECT_TRUE(isomorphic({L("B1"), L("BC2")}, {L("A1"), L("BC2")}));
    EXPECT_TRUE(isomorphic({L("D3")}, {L("A3")}));
    EXPECT_TRUE(isomorphic({L("D2")}, {L("A1"), L("A1")}));
    EXPECT_FALSE(isomorphic({L("B2")}, {L("A2")}));
    EXPECT_FALSE(isomorphic({L("BC1")}, {L("A1")}));
}
