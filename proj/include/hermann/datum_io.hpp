#pragma once

#include "hermann/graded_triad.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace hermann {

/// Canonical JSON text of a datum: sectors by increasing phase, only positive
/// roots listed (negatives follow from duality), roots in lexicographic order.
std::string serialize(const GradedRootDatum& d);

/// Parses and validates a datum file. Missing negative roots are completed via
/// m(-α, ε⁻¹) = m(α, ε). Throws ParseError or ValidationError.
GradedRootDatum parse_datum(std::string_view text);

GradedRootDatum load_datum_file(const std::filesystem::path& path);

}  // namespace hermann
