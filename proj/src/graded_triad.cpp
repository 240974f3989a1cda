#include "hermann/graded_triad.hpp"

#include <algorithm>
#include <set>

namespace hermann {

std::vector<std::pair<RootVector, int>> Sector::positive() const {
    std::vector<std::pair<RootVector, int>> out;
    for (const auto& [v, m] : roots)
        if (v.is_positive()) out.emplace_back(v, m);
    return out;
}

int Sector::multiplicity(const RootVector& v) const {
    auto it = roots.find(v);
    return it == roots.end() ? 0 : it->second;
}

Rational phase_in_range(const Rational& coeff) {
    // Shift into [-1/2, 1/2) and then move -1/2 to 1/2.
    Rational shifted = coeff + Rational(1, 2);
    Rational r = shifted - Rational(mpq_class(shifted.floor())) - Rational(1, 2);
    return r == Rational(-1, 2) ? Rational(1, 2) : r;
}

RationalAngle dual_phase(const RationalAngle& phi) { return RationalAngle(phase_in_range(-phi.coeff)); }

const Sector* GradedRootDatum::find_sector(const RationalAngle& phi) const {
    for (const auto& s : sectors)
        if (s.phi == phi) return &s;
    return nullptr;
}

void complete_duality(std::vector<Sector>& sectors) {
    std::vector<std::tuple<RationalAngle, RootVector, int>> additions;
    for (const auto& s : sectors)
        for (const auto& [v, m] : s.roots) additions.emplace_back(dual_phase(s.phi), -v, m);
    for (auto& [phi, v, m] : additions) {
        auto it = std::find_if(sectors.begin(), sectors.end(), [&](const Sector& s) { return s.phi == phi; });
        if (it == sectors.end()) {
            sectors.push_back(Sector{phi, {}});
            it = sectors.end() - 1;
        }
        it->roots.emplace(v, m);
    }
    std::stable_sort(sectors.begin(), sectors.end(),
                     [](const Sector& a, const Sector& b) { return a.phi < b.phi; });
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::BadRank: return "BadRank";
        case ViolationKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case ViolationKind::NotRootSystem: return "NotRootSystem";
        case ViolationKind::GramMismatch: return "GramMismatch";
        case ViolationKind::PhiRange: return "PhiRangeViolation";
        case ViolationKind::DuplicateSector: return "DuplicateSector";
        case ViolationKind::EmptySector: return "EmptySector";
        case ViolationKind::BadMultiplicity: return "BadMultiplicity";
        case ViolationKind::RootOutsideSigma: return "RootOutsideSigma";
        case ViolationKind::SigmaNotCovered: return "SigmaNotCovered";
        case ViolationKind::Duality: return "DualityViolation";
        case ViolationKind::OrderMismatch: return "OrderMismatch";
        case ViolationKind::BadOrder: return "BadOrder";
        case ViolationKind::BadZeroMult: return "BadZeroMult";
    }
    return "Unknown";
}

namespace {

bool lex_positive(const RootVector& v) {
    for (long x : v.c)
        if (x != 0) return x > 0;
    return false;
}

}  // namespace

std::vector<Violation> validate(const GradedRootDatum& d) {
    std::vector<Violation> out;
    auto report = [&](ViolationKind k, std::string msg) { out.push_back({k, std::move(msg)}); };
    const auto& sigma = d.sigma_tilde;

    if (d.rank() == 0) report(ViolationKind::BadRank, "rank must be positive");
    if (!sigma.gram().is_positive_definite())
        report(ViolationKind::NotPositiveDefinite, "Gram matrix is not positive definite");
    else if (!verify_axioms(sigma))
        report(ViolationKind::NotRootSystem, "the union of the sectors is not a root system");
    for (const auto& r : sigma.roots())
        if (!r.is_positive() && !(-r).is_positive())
            report(ViolationKind::NotRootSystem, r.str() + " mixes signs in the simple-root basis");
    if (d.order < 1) report(ViolationKind::BadOrder, "order must be a positive integer");
    if (d.zero_mult && *d.zero_mult < 0) report(ViolationKind::BadZeroMult, "zero_mult must be nonnegative");

    if (d.simple_roots_label) {
        try {
            RootSystem expected = build_root_system(CartanLabel::parse(*d.simple_roots_label));
            if (!(expected.gram() == sigma.gram()))
                report(ViolationKind::GramMismatch, "Gram matrix differs from the standard one of " +
                                                        *d.simple_roots_label);
        } catch (const Error& e) {
            report(ViolationKind::GramMismatch, e.what());
        }
    }

    std::set<RationalAngle> seen;
    std::set<RootVector> covered;
    for (const auto& s : d.sectors) {
        const std::string where = "sector phi=" + s.phi.coeff.str();
        if (!(Rational(-1, 2) < s.phi.coeff && s.phi.coeff <= Rational(1, 2)))
            report(ViolationKind::PhiRange, where + ": phase outside (-1/2, 1/2]");
        if (!seen.insert(s.phi).second) report(ViolationKind::DuplicateSector, where + ": repeated phase");
        if (s.roots.empty()) report(ViolationKind::EmptySector, where + ": no roots");
        if (!(Rational(d.order) * s.phi.coeff).is_integer())
            report(ViolationKind::OrderMismatch, where + ": eigenvalue is not an order-" +
                                                     std::to_string(d.order) + " root of unity");
        for (const auto& [v, m] : s.roots) {
            if (v.size() != d.rank()) {
                report(ViolationKind::RootOutsideSigma, where + ": vector of wrong length");
                continue;
            }
            if (m <= 0) report(ViolationKind::BadMultiplicity, where + ": nonpositive multiplicity at " + v.str());
            if (!sigma.contains(v)) report(ViolationKind::RootOutsideSigma, where + ": " + v.str() + " is not a root");
            covered.insert(v);

            const Sector* dual = d.find_sector(dual_phase(s.phi));
            const int partner = dual ? dual->multiplicity(-v) : 0;
            const bool partner_present = dual && dual->roots.count(-v);
            if (partner != m && (lex_positive(v) || !partner_present))
                report(ViolationKind::Duality, where + ": m(" + v.str() + ")=" + std::to_string(m) +
                                                   " but the dual sector has m(" + (-v).str() +
                                                   ")=" + std::to_string(partner));
        }
    }
    for (const auto& r : sigma.roots())
        if (!covered.count(r)) report(ViolationKind::SigmaNotCovered, r.str() + " lies in no sector");
    return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error([&] {
          std::string msg = "invalid datum:";
          for (const auto& v : violations) msg += "\n  " + to_string(v.kind) + ": " + v.message;
          return msg;
      }()),
      violations_(std::move(violations)) {}

void require_valid(const GradedRootDatum& d) {
    auto v = validate(d);
    if (!v.empty()) throw ValidationError(std::move(v));
}

}  // namespace hermann
