#include "hermann/root_system.hpp"

#include "hermann/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace hermann {

// ---------------------------------------------------------------------------
// Labels

void CartanLabel::check() const {
    if (rank < 1) throw UnsupportedLabel("rank must be positive");
    if (family == Family::G && rank != 2) throw UnsupportedLabel("G only exists in rank 2");
    if (family == Family::D && rank < 2) throw UnsupportedLabel("D needs rank >= 2");
}

std::string CartanLabel::str() const {
    static const char* names[] = {"A", "B", "C", "D", "BC", "G"};
    return names[static_cast<int>(family)] + std::to_string(rank);
}

CartanLabel CartanLabel::parse(std::string_view text) {
    std::size_t digits = text.find_first_of("0123456789");
    if (digits == std::string_view::npos || digits == 0)
        throw UnsupportedLabel("bad Cartan label '" + std::string(text) + "'");
    std::string fam(text.substr(0, digits));
    std::string num(text.substr(digits));
    if (!std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }) || num.size() > 3)
        throw UnsupportedLabel("bad Cartan label '" + std::string(text) + "'");
    static const std::map<std::string, Family> families = {
        {"A", Family::A}, {"B", Family::B}, {"C", Family::C},
        {"D", Family::D}, {"BC", Family::BC}, {"G", Family::G}};
    auto it = families.find(fam);
    if (it == families.end()) throw UnsupportedLabel("unsupported family '" + fam + "'");
    CartanLabel label{it->second, std::stoi(num)};
    label.check();
    return label;
}

std::vector<CartanLabel> canonical_components(const CartanLabel& label) {
    label.check();
    switch (label.family) {
        case Family::B:
        case Family::C:
            if (label.rank == 1) return {{Family::A, 1}};
            if (label.rank == 2) return {{Family::B, 2}};
            break;
        case Family::D:
            if (label.rank == 2) return {{Family::A, 1}, {Family::A, 1}};
            if (label.rank == 3) return {{Family::A, 3}};
            break;
        default: break;
    }
    return {label};
}

bool isomorphic(const std::vector<CartanLabel>& a, const std::vector<CartanLabel>& b) {
    auto canon = [](const std::vector<CartanLabel>& xs) {
        std::vector<CartanLabel> out;
        for (const auto& x : xs) {
            auto parts = canonical_components(x);
            out.insert(out.end(), parts.begin(), parts.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return canon(a) == canon(b);
}

std::string type_string(const std::vector<CartanLabel>& components) {
    if (components.empty()) return "∅";
    std::string out;
    for (const auto& c : components) {
        if (!out.empty()) out += "+";
        out += c.str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Root systems

namespace {

bool lex_positive(const RootVector& v) {
    for (long x : v.c)
        if (x != 0) return x > 0;
    return false;
}

}  // namespace

RootSystem::RootSystem(GramMatrix gram, const std::vector<RootVector>& roots) : gram_(std::move(gram)) {
    for (const auto& r : roots) {
        if (r.size() != gram_.rank()) throw DimensionMismatch("root length does not match Gram rank");
        roots_.insert(r);
        roots_.insert(-r);
    }
    for (const auto& r : roots_)
        if (lex_positive(r)) positive_.push_back(r);
    std::set<RootVector> positive_set(positive_.begin(), positive_.end());
    for (const auto& r : positive_) {
        bool decomposable = false;
        for (const auto& a : positive_) {
            if (positive_set.count(r - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple_.push_back(r);
    }
}

bool RootSystem::is_reduced() const {
    return std::none_of(roots_.begin(), roots_.end(), [&](const RootVector& r) { return contains(2 * r); });
}

namespace {

struct Ambient {
    std::vector<std::vector<long>> simple;
    std::vector<std::vector<long>> roots;
};

std::vector<long> unit(std::size_t n, std::size_t i, long k = 1) {
    std::vector<long> v(n, 0);
    v[i] = k;
    return v;
}

std::vector<long> combo(std::size_t n, std::size_t i, long a, std::size_t j, long b) {
    std::vector<long> v(n, 0);
    v[i] += a;
    v[j] += b;
    return v;
}

Ambient ambient_roots(const CartanLabel& label) {
    const std::size_t r = static_cast<std::size_t>(label.rank);
    Ambient out;
    auto add_pm_pairs = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (long s : {1L, -1L})
                    for (long t : {1L, -1L}) out.roots.push_back(combo(n, i, s, j, t));
    };
    auto add_units = [&](std::size_t n, long k) {
        for (std::size_t i = 0; i < n; ++i) {
            out.roots.push_back(unit(n, i, k));
            out.roots.push_back(unit(n, i, -k));
        }
    };
    auto chain = [&](std::size_t n, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) out.simple.push_back(combo(n, i, 1, i + 1, -1));
    };
    switch (label.family) {
        case Family::A:
            for (std::size_t i = 0; i <= r; ++i)
                for (std::size_t j = 0; j <= r; ++j)
                    if (i != j) out.roots.push_back(combo(r + 1, i, 1, j, -1));
            chain(r + 1, r);
            break;
        case Family::B:
            add_pm_pairs(r);
            add_units(r, 1);
            chain(r, r - 1);
            out.simple.push_back(unit(r, r - 1));
            break;
        case Family::C:
            add_pm_pairs(r);
            add_units(r, 2);
            chain(r, r - 1);
            out.simple.push_back(unit(r, r - 1, 2));
            break;
        case Family::BC:
            add_pm_pairs(r);
            add_units(r, 1);
            add_units(r, 2);
            chain(r, r - 1);
            out.simple.push_back(unit(r, r - 1));
            break;
        case Family::D:
            add_pm_pairs(r);
            chain(r, r - 1);
            out.simple.push_back(combo(r, r - 2, 1, r - 1, 1));
            break;
        case Family::G:
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    if (i == j) continue;
                    out.roots.push_back(combo(3, i, 1, j, -1));
                    std::vector<long> v(3, -1);
                    v[i] = 2;
                    out.roots.push_back(v);
                    for (long& x : v) x = -x;
                    out.roots.push_back(v);
                }
            out.simple.push_back({1, -1, 0});
            out.simple.push_back({-2, 1, 1});
            break;
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
}

}  // namespace

RootSystem build_root_system(const CartanLabel& label) {
    label.check();
    Ambient amb = ambient_roots(label);
    const std::size_t r = amb.simple.size();
    RationalMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) g(i, j) = dot(amb.simple[i], amb.simple[j]);
    GramMatrix gram(g);

    std::vector<RootVector> roots;
    for (const auto& v : amb.roots) {
        RationalVector rhs(r);
        for (std::size_t i = 0; i < r; ++i) rhs[i] = dot(amb.simple[i], v);
        auto coeffs = solve_linear(g, rhs);
        if (!coeffs) throw InternalInconsistency("singular Gram while building " + label.str());
        RootVector rv;
        for (const auto& c : *coeffs) {
            if (!c.is_integer()) throw InternalInconsistency("non-integral root in " + label.str());
            rv.c.push_back(c.numerator().get_si());
        }
        roots.push_back(rv);
    }
    return RootSystem(gram, roots);
}

bool verify_axioms(const RootSystem& r) {
    const auto& g = r.gram();
    for (const auto& a : r.roots()) {
        if (a.is_zero()) return false;
        if (!r.contains(-a)) return false;
    }
    for (const auto& a : r.roots()) {
        const Rational aa = inner(a, a, g);
        if (aa.sign() <= 0) return false;
        for (const auto& b : r.roots()) {
            const Rational n = Rational(2) * inner(a, b, g) / aa;
            if (!n.is_integer()) return false;
            RootVector image = b - n.numerator().get_si() * a;
            if (!r.contains(image)) return false;
        }
    }
    return true;
}

RationalMatrix reflection_matrix(const RootVector& alpha, const GramMatrix& gram) {
    const std::size_t n = gram.rank();
    const Rational scale = Rational(2) / inner(alpha, alpha, gram);
    RationalMatrix m = RationalMatrix::identity(n);
    // s(v) = v - scale * <alpha, v> * alpha, and <alpha, v> = (alpha^T G) v.
    for (std::size_t j = 0; j < n; ++j) {
        Rational row = 0;
        for (std::size_t k = 0; k < n; ++k) row += Rational(alpha[k]) * gram(k, j);
        for (std::size_t i = 0; i < n; ++i)
            if (alpha[i] != 0) m(i, j) -= scale * Rational(alpha[i]) * row;
    }
    return m;
}

WeylGroup weyl_group(const RootSystem& r, std::size_t budget) {
    WeylGroup w;
    w.dimension = r.ambient_rank();
    for (const auto& s : r.simple_roots()) w.generators.push_back(reflection_matrix(s, r.gram()));
    RationalMatrix id = RationalMatrix::identity(w.dimension);
    std::deque<RationalMatrix> queue{id};
    w.elements.insert(id);
    while (!queue.empty()) {
        RationalMatrix x = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : w.generators) {
            RationalMatrix y = s * x;
            if (w.elements.insert(y).second) {
                if (w.elements.size() > budget)
                    throw ClosureBudgetExceeded("Weyl group closure exceeded " + std::to_string(budget) +
                                                " elements");
                queue.push_back(std::move(y));
            }
        }
    }
    return w;
}

bool contains_minus_identity(const WeylGroup& w) {
    RationalMatrix minus = RationalMatrix::identity(w.dimension);
    for (std::size_t i = 0; i < w.dimension; ++i) minus(i, i) = -1;
    return w.elements.count(minus) != 0;
}

namespace {

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix cartan_matrix(const std::vector<RootVector>& simple, const GramMatrix& g) {
    const std::size_t k = simple.size();
    IntMatrix a(k, std::vector<long>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rational v = Rational(2) * inner(simple[i], simple[j], g) / inner(simple[j], simple[j], g);
            if (!v.is_integer()) throw UnrecognizedType("non-integral Cartan number");
            a[i][j] = v.numerator().get_si();
        }
    return a;
}

bool same_up_to_permutation(const IntMatrix& a, const IntMatrix& ref) {
    const std::size_t k = a.size();
    if (ref.size() != k) return false;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
            for (std::size_t j = 0; j < k && ok; ++j) ok = a[perm[i]][perm[j]] == ref[i][j];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

const IntMatrix& reference_cartan(const CartanLabel& label) {
    static std::map<CartanLabel, IntMatrix> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(label);
    if (it == cache.end()) {
        RootSystem rs = build_root_system(label);
        it = cache.emplace(label, cartan_matrix(rs.simple_roots(), rs.gram())).first;
    }
    return it->second;
}

CartanLabel identify(const IntMatrix& a, bool reduced) {
    const int k = static_cast<int>(a.size());
    if (!reduced) {
        CartanLabel b = k == 1 ? CartanLabel{Family::A, 1} : CartanLabel{Family::B, k};
        if (same_up_to_permutation(a, reference_cartan(b))) return {Family::BC, k};
        throw UnrecognizedType("non-reduced component is not of type BC");
    }
    std::vector<CartanLabel> candidates{{Family::A, k}};
    if (k >= 2) candidates.push_back({Family::B, k});
    if (k >= 3) candidates.push_back({Family::C, k});
    if (k >= 4) candidates.push_back({Family::D, k});
    if (k == 2) candidates.push_back({Family::G, 2});
    for (const auto& c : candidates)
        if (same_up_to_permutation(a, reference_cartan(c))) return c;
    throw UnrecognizedType("component of rank " + std::to_string(k) + " matches no supported type");
}

}  // namespace

std::vector<CartanLabel> decompose_and_classify(const RootSystem& r) {
    const auto& simple = r.simple_roots();
    const auto& g = r.gram();
    const std::size_t k = simple.size();

    std::vector<std::size_t> comp(k);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!inner(simple[i], simple[j], g).is_zero()) comp[find(i)] = find(j);

    std::map<std::size_t, std::vector<RootVector>> groups;
    for (std::size_t i = 0; i < k; ++i) groups[find(i)].push_back(simple[i]);

    std::vector<CartanLabel> out;
    for (const auto& [root_index, members] : groups) {
        bool reduced = true;
        for (const auto& beta : r.roots()) {
            bool in_component = std::any_of(members.begin(), members.end(), [&](const RootVector& s) {
                return !inner(beta, s, g).is_zero();
            });
            if (in_component && r.contains(2 * beta)) reduced = false;
        }
        out.push_back(identify(cartan_matrix(members, g), reduced));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool tits_predicts_minus_identity(const std::vector<CartanLabel>& components, std::size_t ambient_rank) {
    std::size_t total = 0;
    for (const auto& c : components) {
        total += static_cast<std::size_t>(c.rank);
        if (c.family == Family::A && c.rank >= 2) return false;
        if (c.family == Family::D && c.rank % 2 == 1) return false;
    }
    return total == ambient_rank;
}

std::size_t weyl_order_formula(const CartanLabel& label) {
    label.check();
    auto factorial = [](std::size_t n) {
        std::size_t f = 1;
        for (std::size_t i = 2; i <= n; ++i) f *= i;
        return f;
    };
    const auto r = static_cast<std::size_t>(label.rank);
    switch (label.family) {
        case Family::A: return factorial(r + 1);
        case Family::B:
        case Family::C:
        case Family::BC: return (std::size_t{1} << r) * factorial(r);
        case Family::D: return (std::size_t{1} << (r - 1)) * factorial(r);
        case Family::G: return 12;
    }
    return 0;
}

}  // namespace hermann
