#include "hermann/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace hermann {

namespace {

std::string num(double v) {
    if (std::abs(v) < 5e-4) v = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

const std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
const std::array<const char*, 6> kDashes = {"none", "6,3", "2,2", "8,2,2,2", "1,3", "10,4"};

// Rows of the Cholesky factor of the dual-basis Gram matrix G⁻¹: the metric
// embedding of H_1, ..., H_r.
std::vector<std::vector<double>> embedding(const GramMatrix& g) {
    const RationalMatrix h = dual_basis(g);
    const std::size_t n = g.rank();
    std::vector<std::vector<double>> gi(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gi[i][j] = inner(h.column(i), h.column(j), g).to_double();
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = gi[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            l[i][j] = i == j ? std::sqrt(s) : s / l[j][j];
        }
    return l;
}

struct Frame {
    std::vector<std::vector<double>> l;
    double minx = 0, maxx = 0, miny = 0, maxy = 0, scale = 1, pad = 24;

    std::pair<double, double> embed(const std::vector<double>& x) const {
        double u = 0, v = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            u += x[i] * l[i][0];
            if (l[i].size() > 1) v += x[i] * l[i][1];
        }
        return {u, v};
    }
    std::pair<double, double> screen(const std::vector<double>& x) const {
        auto [u, v] = embed(x);
        return {pad + (u - minx) * scale, pad + (maxy - v) * scale};
    }
};

std::vector<double> to_doubles(const RationalVector& v) {
    std::vector<double> out;
    for (const Rational& q : v) out.push_back(q.to_double());
    return out;
}

// Segment of {c·x = k} inside the box [lo, hi] in x-coordinates (rank 2).
std::optional<std::pair<std::vector<double>, std::vector<double>>> clip(const RootVector& c, double k,
                                                                        const std::vector<double>& lo,
                                                                        const std::vector<double>& hi) {
    std::vector<std::vector<double>> pts;
    const double a = static_cast<double>(c[0]), b = static_cast<double>(c[1]);
    for (double x : {lo[0], hi[0]})
        if (b != 0) {
            const double y = (k - a * x) / b;
            if (y >= lo[1] - 1e-12 && y <= hi[1] + 1e-12) pts.push_back({x, y});
        }
    for (double y : {lo[1], hi[1]})
        if (a != 0) {
            const double x = (k - b * y) / a;
            if (x >= lo[0] - 1e-12 && x <= hi[0] + 1e-12) pts.push_back({x, y});
        }
    if (pts.size() < 2) return std::nullopt;
    std::sort(pts.begin(), pts.end());
    return std::make_pair(pts.front(), pts.back());
}

void marker(std::ostringstream& out, MarkerKind kind, double x, double y, const std::string& label) {
    const std::string cls = "marker " + to_string(kind);
    out << "  <g class=\"" << cls << "\"><title>" << escape(label) << "</title>";
    switch (kind) {
        case MarkerKind::TotallyGeodesic:
            out << "<rect x=\"" << num(x - 6) << "\" y=\"" << num(y - 6)
                << "\" width=\"12\" height=\"12\" fill=\"#000\"/>";
            break;
        case MarkerKind::WeaklyReflective:
            out << "<polygon points=\"" << num(x) << "," << num(y - 7) << " " << num(x + 7) << "," << num(y) << " "
                << num(x) << "," << num(y + 7) << " " << num(x - 7) << "," << num(y) << "\" fill=\"#d62728\"/>";
            break;
        case MarkerKind::Austere:
            out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"6\" fill=\"#1f77b4\"/>";
            break;
        case MarkerKind::AridOnly:
            out << "<polygon points=\"" << num(x) << "," << num(y - 7) << " " << num(x + 6) << "," << num(y + 5)
                << " " << num(x - 6) << "," << num(y + 5) << "\" fill=\"#2ca02c\"/>";
            break;
        case MarkerKind::Plain:
            out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
                << "\" r=\"4\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>";
            break;
    }
    out << "</g>\n";
}

}  // namespace

std::string render_svg(const GradedRootDatum& d, const std::vector<OrbitReport>& reports, int width) {
    const std::size_t r = d.rank();
    if (r > 2) throw RankTooHigh("diagrams need rank ≤ 2, datum has rank " + std::to_string(r));
    if (width < 64) throw BadParameters("width must be at least 64");
    const Alcove alcove = fundamental_alcove(d);

    std::vector<double> lo(r), hi(r);
    for (std::size_t i = 0; i < r; ++i) {
        lo[i] = hi[i] = alcove.vertices.front()[i].to_double();
        for (const RationalVector& v : alcove.vertices) {
            lo[i] = std::min(lo[i], v[i].to_double());
            hi[i] = std::max(hi[i], v[i].to_double());
        }
    }
    double extent = 0;
    for (std::size_t i = 0; i < r; ++i) extent = std::max(extent, hi[i] - lo[i]);
    for (std::size_t i = 0; i < r; ++i) {
        lo[i] -= 0.25 * extent;
        hi[i] += 0.25 * extent;
    }

    Frame f;
    f.l = embedding(d.sigma_tilde.gram());
    std::vector<std::vector<double>> corners;
    if (r == 1) corners = {{lo[0]}, {hi[0]}};
    else corners = {{lo[0], lo[1]}, {hi[0], lo[1]}, {lo[0], hi[1]}, {hi[0], hi[1]}};
    bool first = true;
    for (const auto& c : corners) {
        auto [u, v] = f.embed(c);
        if (first) {
            f.minx = f.maxx = u;
            f.miny = f.maxy = v;
            first = false;
        }
        f.minx = std::min(f.minx, u);
        f.maxx = std::max(f.maxx, u);
        f.miny = std::min(f.miny, v);
        f.maxy = std::max(f.maxy, v);
    }
    if (r == 1) {
        f.miny = -0.1 * (f.maxx - f.minx);
        f.maxy = -f.miny;
    }
    f.scale = (width - 2 * f.pad) / (f.maxx - f.minx);
    const double height = 2 * f.pad + (f.maxy - f.miny) * f.scale;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << num(height)
        << "\" viewBox=\"0 0 " << width << " " << num(height) << "\">\n"
        << "  <title>" << escape(d.name) << "</title>\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";

    // Alcove.
    if (r == 2) {
        std::vector<std::pair<double, double>> pts;
        double cx = 0, cy = 0;
        for (const RationalVector& v : alcove.vertices) {
            pts.push_back(f.screen(to_doubles(v)));
            cx += pts.back().first;
            cy += pts.back().second;
        }
        cx /= pts.size();
        cy /= pts.size();
        std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
            return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
        });
        out << "  <polygon class=\"alcove\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            out << (i ? " " : "") << num(pts[i].first) << "," << num(pts[i].second);
        out << "\" fill=\"#f2f2f2\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    } else {
        auto a = f.screen(to_doubles(alcove.vertices.front()));
        auto b = f.screen(to_doubles(alcove.vertices.back()));
        out << "  <line class=\"alcove\" x1=\"" << num(a.first) << "\" y1=\"" << num(a.second) << "\" x2=\""
            << num(b.first) << "\" y2=\"" << num(b.second) << "\" stroke=\"#000\" stroke-width=\"4\"/>\n";
    }

    // Walls c·x = n − φ for each sector.
    for (std::size_t si = 0; si < d.sectors.size(); ++si) {
        const Sector& s = d.sectors[si];
        out << "  <g class=\"walls\" data-phi=\"" << escape(s.phi.str()) << "\" stroke=\"" << kColors[si % 6]
            << "\" stroke-width=\"1\" stroke-dasharray=\"" << kDashes[si % 6] << "\">\n";
        for (const auto& [alpha, m] : s.positive()) {
            double mn = 0, mx = 0;
            for (std::size_t i = 0; i < r; ++i) {
                const double a = static_cast<double>(alpha[i]);
                mn += std::min(a * lo[i], a * hi[i]);
                mx += std::max(a * lo[i], a * hi[i]);
            }
            const double phi = s.phi.coeff.to_double();
            for (long n = static_cast<long>(std::ceil(mn + phi)); n <= static_cast<long>(std::floor(mx + phi)); ++n) {
                const double k = n - phi;
                if (r == 1) {
                    auto p = f.screen({k / static_cast<double>(alpha[0])});
                    out << "    <line x1=\"" << num(p.first) << "\" y1=\"" << num(p.second - 12) << "\" x2=\""
                        << num(p.first) << "\" y2=\"" << num(p.second + 12) << "\"/>\n";
                    continue;
                }
                auto seg = clip(alpha, k, lo, hi);
                if (!seg) continue;
                auto a = f.screen(seg->first), b = f.screen(seg->second);
                out << "    <line x1=\"" << num(a.first) << "\" y1=\"" << num(a.second) << "\" x2=\"" << num(b.first)
                    << "\" y2=\"" << num(b.second) << "\"/>\n";
            }
        }
        out << "  </g>\n";
    }

    for (const OrbitReport& rep : reports) {
        auto p = f.screen(to_doubles(rep.point.coeffs));
        marker(out, marker_kind(rep), p.first, p.second, rep.point.str() + " " + type_string(rep.type));
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace hermann
