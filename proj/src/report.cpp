#include "hermann/report.hpp"

#include <algorithm>
#include <sstream>

namespace hermann {

std::string format_norm(const MeanCurvature& mc) {
    if (mc.exactly_zero || mc.norm.hi().is_zero()) return "0";
    if (mc.norm.contains_zero()) return "<" + mc.norm.hi().str(2);
    return mc.norm.mid().str(12);
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> row_cells(const OrbitReport& r, int table_bits) {
    std::string norm = format_norm(r.mean_curvature);
    if (r.mean_curvature.precision_bits != table_bits)
        norm += " [" + std::to_string(r.mean_curvature.precision_bits) + "-bit]";
    return {r.point.str(),
            type_string(r.type),
            yes_no(r.totally_geodesic),
            to_string(r.austere),
            yes_no(r.arid_sufficient),
            yes_no(r.weakly_reflective_sufficient),
            norm};
}

}  // namespace

std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string render_table(const ClassificationTable& t, TableFormat format) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"point", "type", "TG", "austere", "arid*", "WR*",
                     "|m_H| (" + std::to_string(t.precision_bits) + "-bit)"});
    for (const OrbitReport& r : t.rows) cells.push_back(row_cells(r, t.precision_bits));

    std::ostringstream out;
    if (format == TableFormat::Tsv) {
        for (const auto& row : cells) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
            out << '\n';
        }
        return out.str();
    }
    std::vector<std::size_t> w(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], display_width(row[i]));
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(w[i] - display_width(row[i]) + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

MarkerKind marker_kind(const OrbitReport& r) {
    if (r.totally_geodesic) return MarkerKind::TotallyGeodesic;
    if (r.weakly_reflective_sufficient) return MarkerKind::WeaklyReflective;
    if (r.austere == TriState::Yes) return MarkerKind::Austere;
    if (r.arid_sufficient) return MarkerKind::AridOnly;
    return MarkerKind::Plain;
}

std::string to_string(MarkerKind k) {
    switch (k) {
        case MarkerKind::TotallyGeodesic: return "tg";
        case MarkerKind::WeaklyReflective: return "wr";
        case MarkerKind::Austere: return "austere";
        case MarkerKind::AridOnly: return "arid";
        case MarkerKind::Plain: return "plain";
    }
    return "plain";
}

}  // namespace hermann
