#include "hermann/alcove.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <iterator>

namespace hermann {

std::string AlcovePoint::str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += RationalAngle(coeffs[i]).str();
    }
    return out;
}

AlcovePoint AlcovePoint::parse(std::string_view text) {
    AlcovePoint p;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        p.coeffs.push_back(Rational::parse(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return p;
}

namespace {

Rational dot(const RootVector& c, const RationalVector& x) {
    if (c.size() != x.size()) throw DimensionMismatch("root and point have different lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (c[i] != 0) s += Rational(c[i]) * x[i];
    return s;
}

}  // namespace

RationalAngle pairing_angle(const GradedRootDatum&, const RootVector& alpha, const AlcovePoint& h,
                            const RationalAngle& phi) {
    return RationalAngle(dot(alpha, h.coeffs) + phi.coeff);
}

std::string Wall::str() const {
    return "<" + alpha.str() + ",H> = " + RationalAngle(level()).str() + " (phi=" + phi.str() + ")";
}

AlcovePoint reflect(const GradedRootDatum& d, const AlcovePoint& h, const Wall& wall) {
    const auto& g = d.sigma_tilde.gram();
    const Rational scale = Rational(2) * (dot(wall.alpha, h.coeffs) - wall.level()) / inner(wall.alpha, wall.alpha, g);
    // x_j = <α_j, H>/π, and <α_j, α> = (G c)_j.
    AlcovePoint out = h;
    for (std::size_t j = 0; j < h.size(); ++j) {
        Rational gj = 0;
        for (std::size_t k = 0; k < h.size(); ++k)
            if (wall.alpha[k] != 0) gj += g(j, k) * Rational(wall.alpha[k]);
        out.coeffs[j] -= scale * gj;
    }
    return out;
}

Rational Inequality::slack(const RationalVector& x) const {
    const Rational v = dot(normal, x);
    return sense == Sense::Greater ? v - bound : bound - v;
}

std::string Inequality::str() const {
    std::string lhs;
    for (std::size_t i = 0; i < normal.size(); ++i) {
        long k = normal[i];
        if (k == 0) continue;
        if (k < 0) {
            lhs += "-";
            k = -k;
        } else if (!lhs.empty()) {
            lhs += "+";
        }
        if (k != 1) lhs += std::to_string(k);
        lhs += "x" + std::to_string(i + 1);
    }
    return lhs + (sense == Sense::Greater ? " > " : " < ") + bound.str();
}

bool Alcove::contains_closed(const AlcovePoint& h) const {
    return std::all_of(facets.begin(), facets.end(), [&](const Inequality& f) { return f.slack(h.coeffs).sign() >= 0; });
}

bool Alcove::contains_open(const AlcovePoint& h) const {
    return std::all_of(facets.begin(), facets.end(), [&](const Inequality& f) { return f.slack(h.coeffs).sign() > 0; });
}

namespace {

long floor_long(const Rational& q) { return q.floor().get_si(); }

/// Per primitive direction, the tightest lower and upper bound over all slabs.
std::vector<Inequality> tightest_slabs(const GradedRootDatum& d) {
    std::map<RootVector, Inequality> lower, upper;
    for (const auto& s : d.sectors) {
        const long n = floor_long(s.phi.coeff);
        const Rational lo = Rational(n) - s.phi.coeff;
        for (const auto& [alpha, m] : s.positive()) {
            auto [dir, scale] = alpha.primitive();
            const Rational k(scale);
            Inequality l{dir, lo / k, Inequality::Sense::Greater, Wall{alpha, s.phi, n}};
            Inequality u{dir, (lo + Rational(1)) / k, Inequality::Sense::Less, Wall{alpha, s.phi, n + 1}};
            auto li = lower.find(dir);
            if (li == lower.end() || l.bound > li->second.bound) lower.insert_or_assign(dir, l);
            auto ui = upper.find(dir);
            if (ui == upper.end() || u.bound < ui->second.bound) upper.insert_or_assign(dir, u);
        }
    }
    std::vector<Inequality> out;
    for (auto& [dir, ineq] : lower) out.push_back(ineq);
    for (auto& [dir, ineq] : upper) out.push_back(ineq);
    return out;
}

void enumerate_vertices(const std::vector<Inequality>& hs, std::size_t r, std::size_t start,
                        std::vector<std::size_t>& chosen, std::set<RationalVector>& out) {
    if (chosen.size() == r) {
        RationalMatrix a(r, r);
        RationalVector b(r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) a(i, j) = hs[chosen[i]].normal[j];
            b[i] = hs[chosen[i]].bound;
        }
        auto x = solve_linear(a, b);
        if (!x) return;
        for (const auto& h : hs)
            if (h.slack(*x).sign() < 0) return;
        out.insert(*x);
        return;
    }
    for (std::size_t i = start; i + (r - chosen.size()) <= hs.size(); ++i) {
        chosen.push_back(i);
        enumerate_vertices(hs, r, i + 1, chosen, out);
        chosen.pop_back();
    }
}

std::size_t affine_rank(const std::vector<RationalVector>& pts) {
    if (pts.size() < 2) return 0;
    std::vector<RationalVector> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RationalVector v(pts[i].size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(v));
    }
    return rank_of(diffs);
}

}  // namespace

Alcove fundamental_alcove(const GradedRootDatum& d) {
    const std::size_t r = d.rank();
    std::vector<Inequality> hs = tightest_slabs(d);

    std::set<RationalVector> vertex_set;
    std::vector<std::size_t> chosen;
    enumerate_vertices(hs, r, 0, chosen, vertex_set);
    std::vector<RationalVector> vertices(vertex_set.begin(), vertex_set.end());
    if (vertices.size() < r + 1 || affine_rank(vertices) != r)
        throw EmptyAlcove("the slabs of " + d.name + " do not bound a full-dimensional alcove");

    Alcove alcove;
    for (const auto& h : hs) {
        std::vector<RationalVector> tight;
        for (const auto& v : vertices)
            if (h.slack(v).is_zero()) tight.push_back(v);
        if (tight.size() >= r && affine_rank(tight) + 1 == r) alcove.facets.push_back(h);
    }
    std::stable_sort(alcove.facets.begin(), alcove.facets.end(), [](const Inequality& a, const Inequality& b) {
        if (a.sense != b.sense) return a.sense == Inequality::Sense::Greater;
        return a.normal > b.normal;
    });
    alcove.vertices = std::move(vertices);
    return alcove;
}

ActiveRoots active_roots(const GradedRootDatum& d, const AlcovePoint& h) {
    ActiveRoots out;
    std::vector<RootVector> all;
    for (const auto& s : d.sectors) {
        std::vector<RootVector> active;
        for (const auto& [alpha, m] : s.positive())
            if (is_multiple_of(pairing_angle(d, alpha, h, s.phi), AngleUnit::Pi)) active.push_back(alpha);
        all.insert(all.end(), active.begin(), active.end());
        out.per_sector.emplace_back(s.phi, std::move(active));
    }
    out.sigma_h = RootSystem(d.sigma_tilde.gram(), all);
    return out;
}

std::vector<Face> faces(const GradedRootDatum& d, const Alcove& alcove) {
    const std::size_t nf = alcove.facets.size();
    std::vector<std::set<std::size_t>> tight(alcove.vertices.size());
    for (std::size_t v = 0; v < alcove.vertices.size(); ++v)
        for (std::size_t f = 0; f < nf; ++f)
            if (alcove.facets[f].slack(alcove.vertices[v]).is_zero()) tight[v].insert(f);

    // Active-facet sets of faces are exactly the intersections of vertex tight sets.
    std::set<std::set<std::size_t>> active_sets(tight.begin(), tight.end());
    active_sets.insert({});
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::set<std::size_t>> current(active_sets.begin(), active_sets.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                std::set<std::size_t> meet;
                std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(), current[j].end(),
                                      std::inserter(meet, meet.end()));
                grew |= active_sets.insert(meet).second;
            }
    }

    std::vector<Face> out;
    for (const auto& active : active_sets) {
        Face face;
        for (std::size_t v = 0; v < alcove.vertices.size(); ++v)
            if (std::includes(tight[v].begin(), tight[v].end(), active.begin(), active.end()))
                face.vertices.push_back(alcove.vertices[v]);
        if (face.vertices.empty()) continue;
        for (std::size_t f = 0; f < nf; ++f)
            if (!active.count(f)) face.delta.push_back(f);
        RationalVector bary(d.rank());
        for (const auto& v : face.vertices)
            for (std::size_t j = 0; j < bary.size(); ++j) bary[j] += v[j];
        for (auto& x : bary) x /= Rational(static_cast<long>(face.vertices.size()));
        face.representative = AlcovePoint{bary};
        face.active = active_roots(d, face.representative);
        out.push_back(std::move(face));
    }

    // Vertices first; within a dimension, points whose nonzero coordinates come earlier sort first.
    auto support = [](const AlcovePoint& p) {
        std::vector<bool> z;
        for (const auto& x : p.coeffs) z.push_back(!x.is_zero());
        return z;
    };
    auto support_size = [](const std::vector<bool>& z) { return std::count(z.begin(), z.end(), true); };
    std::stable_sort(out.begin(), out.end(), [&](const Face& a, const Face& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        auto za = support(a.representative), zb = support(b.representative);
        if (support_size(za) != support_size(zb)) return support_size(za) < support_size(zb);
        if (za != zb) return za > zb;
        return a.representative < b.representative;
    });
    return out;
}

std::vector<Face> faces(const GradedRootDatum& d) { return faces(d, fundamental_alcove(d)); }

Reduction reduce_to_alcove(const GradedRootDatum& d, const Alcove& alcove, const AlcovePoint& h,
                           std::size_t max_steps) {
    Reduction out{h, {}};
    for (std::size_t step = 0;; ++step) {
        const Inequality* worst = nullptr;
        Rational worst_slack = 0;
        for (const auto& f : alcove.facets) {
            Rational s = f.slack(out.point.coeffs);
            if (s < worst_slack) {
                worst_slack = s;
                worst = &f;
            }
        }
        if (!worst) return out;
        if (step >= max_steps)
            throw NonTermination("alcove reduction exceeded " + std::to_string(max_steps) + " reflections");
        out.point = reflect(d, out.point, worst->wall);
        out.word.push_back(worst->wall);
    }
}

Reduction reduce_to_alcove(const GradedRootDatum& d, const AlcovePoint& h) {
    return reduce_to_alcove(d, fundamental_alcove(d), h);
}

}  // namespace hermann
