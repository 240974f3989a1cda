#include "hermann/datum_io.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace hermann {

using ordered_json = nlohmann::ordered_json;

std::string serialize(const GradedRootDatum& d) {
    ordered_json j;
    j["name"] = d.name;
    j["rank"] = d.rank();
    ordered_json gram = ordered_json::array();
    for (std::size_t i = 0; i < d.rank(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < d.rank(); ++k) row.push_back(d.sigma_tilde.gram()(i, k).str());
        gram.push_back(row);
    }
    j["gram"] = gram;
    if (d.simple_roots_label) j["simple_roots_label"] = *d.simple_roots_label;
    j["order"] = d.order;
    if (d.zero_mult) j["zero_mult"] = *d.zero_mult;
    ordered_json sectors = ordered_json::array();
    for (const auto& s : d.sectors) {
        auto pos = s.positive();
        if (pos.empty()) continue;
        ordered_json roots = ordered_json::array();
        for (const auto& [v, m] : pos) {
            ordered_json entry;
            entry["v"] = v.c;
            entry["m"] = m;
            roots.push_back(entry);
        }
        ordered_json sector;
        sector["phi"] = s.phi.coeff.str();
        sector["roots"] = roots;
        sectors.push_back(sector);
    }
    j["sectors"] = sectors;
    return j.dump(2) + "\n";
}

namespace {

void check_fields(const ordered_json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) throw ParseError(where + ": unknown field '" + key + "'");
}

const ordered_json& require(const ordered_json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

long as_int(const ordered_json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
    return v.get<long>();
}

Rational as_rational(const ordered_json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw ParseError(where + ": expected a rational string \"p/q\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace

GradedRootDatum parse_datum(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    check_fields(j, {"name", "rank", "gram", "simple_roots_label", "order", "zero_mult", "sectors"}, "datum");

    GradedRootDatum d;
    const auto& name = require(j, "name", "datum");
    if (!name.is_string()) throw ParseError("name: expected a string");
    d.name = name.get<std::string>();

    const long rank = as_int(require(j, "rank", "datum"), "rank");
    if (rank < 1 || rank > 16) throw ParseError("rank: must be between 1 and 16");
    const auto r = static_cast<std::size_t>(rank);

    const auto& gram_json = require(j, "gram", "datum");
    if (!gram_json.is_array() || gram_json.size() != r) throw ParseError("gram: expected " + std::to_string(r) + " rows");
    RationalMatrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const auto& row = gram_json[i];
        if (!row.is_array() || row.size() != r)
            throw ParseError("gram[" + std::to_string(i) + "]: expected " + std::to_string(r) + " entries");
        for (std::size_t k = 0; k < r; ++k)
            gram(i, k) = as_rational(row[k], "gram[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    GramMatrix g;
    try {
        g = GramMatrix(gram);
    } catch (const Error& e) {
        throw ParseError(std::string("gram: ") + e.what());
    }

    if (auto it = j.find("simple_roots_label"); it != j.end()) {
        if (!it->is_string()) throw ParseError("simple_roots_label: expected a string");
        d.simple_roots_label = it->get<std::string>();
    }
    d.order = static_cast<int>(as_int(require(j, "order", "datum"), "order"));
    if (auto it = j.find("zero_mult"); it != j.end()) d.zero_mult = static_cast<int>(as_int(*it, "zero_mult"));

    const auto& sectors = require(j, "sectors", "datum");
    if (!sectors.is_array()) throw ParseError("sectors: expected an array");
    for (std::size_t si = 0; si < sectors.size(); ++si) {
        const std::string where = "sectors[" + std::to_string(si) + "]";
        check_fields(sectors[si], {"phi", "roots"}, where);
        Sector s{RationalAngle(as_rational(require(sectors[si], "phi", where), where + ".phi")), {}};
        const auto& roots = require(sectors[si], "roots", where);
        if (!roots.is_array()) throw ParseError(where + ".roots: expected an array");
        for (std::size_t ri = 0; ri < roots.size(); ++ri) {
            const std::string rw = where + ".roots[" + std::to_string(ri) + "]";
            check_fields(roots[ri], {"v", "m"}, rw);
            const auto& v = require(roots[ri], "v", rw);
            if (!v.is_array() || v.size() != r)
                throw ParseError(rw + ".v: expected " + std::to_string(r) + " integer coordinates");
            RootVector rv;
            for (const auto& x : v) rv.c.push_back(as_int(x, rw + ".v"));
            const int m = static_cast<int>(as_int(require(roots[ri], "m", rw), rw + ".m"));
            if (!s.roots.emplace(rv, m).second) throw ParseError(rw + ": root listed twice");
        }
        d.sectors.push_back(std::move(s));
    }
    complete_duality(d.sectors);

    std::vector<RootVector> sigma_roots;
    if (d.simple_roots_label) {
        CartanLabel label;
        try {
            label = CartanLabel::parse(*d.simple_roots_label);
        } catch (const Error& e) {
            throw ParseError(std::string("simple_roots_label: ") + e.what());
        }
        RootSystem standard = build_root_system(label);
        if (standard.ambient_rank() != r)
            throw ParseError("simple_roots_label: " + label.str() + " does not have rank " + std::to_string(r));
        sigma_roots.assign(standard.roots().begin(), standard.roots().end());
    } else {
        for (const auto& s : d.sectors)
            for (const auto& [v, m] : s.roots) sigma_roots.push_back(v);
    }
    d.sigma_tilde = RootSystem(g, sigma_roots);
    require_valid(d);
    return d;
}

GradedRootDatum load_datum_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open datum file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_datum(buf.str());
}

}  // namespace hermann
