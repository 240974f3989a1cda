#pragma once

#include "hermann/graded_triad.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hermann {

struct CatalogParams {
    std::optional<long> p;
    std::optional<long> q;
    /// Ambient type for "isotropy".
    std::optional<CartanLabel> label;
    /// "isotropy" multiplicities by root-length class, shortest class first.
    std::vector<int> mults;
};

struct CatalogEntry {
    std::string key;
    std::string triad;  // (G, K1, K2)
    std::string parameters;
};

/// The built-in families, in display order.
const std::vector<CatalogEntry>& catalog_entries();

/// Builds the graded root datum of a catalog family. Keys: "so_even",
/// "su_sp" (p > q >= 3, both odd; default p=9, q=7), "so8_g2" and
/// "isotropy" (requires a label). Throws UnknownKey or BadParameters.
GradedRootDatum catalog(std::string_view key, const CatalogParams& params = {});

}  // namespace hermann
