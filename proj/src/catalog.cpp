#include "hermann/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hermann {

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"so_even", "(SO(2m), SO(p)xSO(q), U(m))", "p > q >= 3, p and q odd"},
        {"su_sp", "(SU(2m), S(U(p)xU(q)), Sp(m))", "p > q >= 3, p and q odd"},
        {"so8_g2", "(SO(8), SO(5)xSO(3), kappa(SO(5)xSO(3)))", "none"},
        {"isotropy", "isotropy representation of a symmetric space (l = 1)",
         "Cartan label; optional multiplicities by root length, shortest first"},
    };
    return entries;
}

namespace {

using MultByNorm = std::map<Rational, int>;

/// One sector holding every root of `sigma` whose squared length has an entry in `mults`.
Sector sector_by_norm(const RootSystem& sigma, Rational phi, const MultByNorm& mults) {
    Sector s{RationalAngle(std::move(phi)), {}};
    for (const auto& r : sigma.roots()) {
        auto it = mults.find(inner(r, r, sigma.gram()));
        if (it != mults.end()) s.roots.emplace(r, it->second);
    }
    return s;
}

std::pair<long, long> bc_parameters(const CatalogParams& params) {
    const long p = params.p.value_or(9);
    const long q = params.q.value_or(7);
    if (!(p > q && q >= 3 && q % 2 == 1 && p % 2 == 1))
        throw BadParameters("need p > q >= 3 with p and q odd (got p=" + std::to_string(p) +
                            ", q=" + std::to_string(q) + ")");
    return {p, q};
}

GradedRootDatum so_even(const CatalogParams& params) {
    auto [p, q] = bc_parameters(params);
    const int r = static_cast<int>((q - 1) / 2);
    const int pq = static_cast<int>(p - q);
    RootSystem sigma = build_root_system({Family::BC, r});
    GradedRootDatum d;
    d.name = "so_even(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
    d.sigma_tilde = sigma;
    d.order = 4;
    d.simple_roots_label = "BC" + std::to_string(r);
    // Squared lengths: e_i -> 1, e_i ± e_j -> 2, 2e_i -> 4.
    d.sectors = {
        sector_by_norm(sigma, Rational(-1, 4), {{1, 2}}),
        sector_by_norm(sigma, 0, {{1, pq}, {2, 2}, {4, 1}}),
        sector_by_norm(sigma, Rational(1, 4), {{1, 2}}),
        sector_by_norm(sigma, Rational(1, 2), {{1, pq}, {2, 2}}),
    };
    return d;
}

GradedRootDatum su_sp(const CatalogParams& params) {
    auto [p, q] = bc_parameters(params);
    const int r = static_cast<int>((q - 1) / 2);
    const int pq2 = static_cast<int>(2 * (p - q));
    RootSystem sigma = build_root_system({Family::BC, r});
    GradedRootDatum d;
    d.name = "su_sp(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
    d.sigma_tilde = sigma;
    d.order = 4;
    d.simple_roots_label = "BC" + std::to_string(r);
    d.sectors = {
        sector_by_norm(sigma, Rational(-1, 4), {{1, 4}}),
        sector_by_norm(sigma, 0, {{1, pq2}, {2, 4}, {4, 3}}),
        sector_by_norm(sigma, Rational(1, 4), {{1, 4}}),
        sector_by_norm(sigma, Rational(1, 2), {{1, pq2}, {2, 4}, {4, 1}}),
    };
    return d;
}

GradedRootDatum so8_g2(const CatalogParams&) {
    RootSystem sigma = build_root_system({Family::G, 2});
    GradedRootDatum d;
    d.name = "so8_g2";
    d.sigma_tilde = sigma;
    d.order = 3;
    d.simple_roots_label = "G2";
    // Short roots have squared length 2, long roots 6. ω = exp(2πi/3) has phase π/3.
    d.sectors = {
        sector_by_norm(sigma, Rational(-1, 3), {{2, 1}}),
        sector_by_norm(sigma, 0, {{2, 1}, {6, 1}}),
        sector_by_norm(sigma, Rational(1, 3), {{2, 1}}),
    };
    return d;
}

GradedRootDatum isotropy(const CatalogParams& params) {
    if (!params.label) throw BadParameters("isotropy needs a Cartan label");
    RootSystem sigma = build_root_system(*params.label);
    std::vector<Rational> norms;
    for (const auto& r : sigma.roots()) norms.push_back(inner(r, r, sigma.gram()));
    std::sort(norms.begin(), norms.end());
    norms.erase(std::unique(norms.begin(), norms.end()), norms.end());
    if (params.mults.size() > norms.size())
        throw BadParameters(params.label->str() + " has only " + std::to_string(norms.size()) +
                            " root lengths");
    MultByNorm mults;
    for (std::size_t i = 0; i < norms.size(); ++i) {
        const int m = i < params.mults.size() ? params.mults[i] : 1;
        if (m <= 0) throw BadParameters("multiplicities must be positive");
        mults[norms[i]] = m;
    }
    GradedRootDatum d;
    d.name = "isotropy(" + params.label->str();
    for (std::size_t i = 0; i < params.mults.size(); ++i)
        d.name += (i == 0 ? ";m=" : ",") + std::to_string(params.mults[i]);
    d.name += ")";
    d.sigma_tilde = sigma;
    d.order = 1;
    d.simple_roots_label = params.label->str();
    d.sectors = {sector_by_norm(sigma, 0, mults)};
    return d;
}

}  // namespace

GradedRootDatum catalog(std::string_view key, const CatalogParams& params) {
    static const std::map<std::string, std::function<GradedRootDatum(const CatalogParams&)>, std::less<>>
        builders = {
            {"so_even", so_even},
            {"su_sp", su_sp},
            {"so8_g2", so8_g2},
            {"isotropy", isotropy},
        };
    auto it = builders.find(key);
    if (it == builders.end()) throw UnknownKey("unknown catalog key '" + std::string(key) + "'");
    GradedRootDatum d = it->second(params);
    require_valid(d);
    return d;
}

}  // namespace hermann
