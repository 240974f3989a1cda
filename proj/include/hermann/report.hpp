#pragma once

#include "hermann/orbit_geometry.hpp"

#include <string>
#include <vector>

namespace hermann {

enum class TableFormat { Plain, Tsv };

/// Columns: point, Σ̃_H type, TG, austere, arid*, WR*, ‖m_H‖.
struct ClassificationTable {
    std::vector<OrbitReport> rows;
    int precision_bits = kDefaultPrecisionBits;
};

std::string render_table(const ClassificationTable& t, TableFormat format);

/// ‖m_H‖ column entry: "0" when exact, "<u" when the enclosure contains 0,
/// otherwise a 12-digit midpoint.
std::string format_norm(const MeanCurvature& mc);

enum class MarkerKind { TotallyGeodesic, WeaklyReflective, Austere, AridOnly, Plain };

/// TG, then WR*, austere, arid*; the first that applies.
MarkerKind marker_kind(const OrbitReport& r);
std::string to_string(MarkerKind k);

/// Length in code points.
std::size_t display_width(const std::string& s);

/// Rank ≤ 2 alcove picture in the metric embedding. Throws RankTooHigh.
std::string render_svg(const GradedRootDatum& d, const std::vector<OrbitReport>& reports, int width = 480);

}  // namespace hermann
