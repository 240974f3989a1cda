#include "hermann/cli.hpp"

#include "hermann/catalog.hpp"
#include "hermann/datum_io.hpp"
#include "hermann/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace hermann {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct TriadOptions {
    std::string triad;
    std::optional<long> p, q;
    std::string label;
    std::string mult;
};

void add_triad_options(CLI::App* cmd, TriadOptions& t) {
    cmd->add_option("--triad", t.triad, "catalog key or @file")->required();
    cmd->add_option("--p", t.p, "catalog parameter p");
    cmd->add_option("--q", t.q, "catalog parameter q");
    cmd->add_option("--label", t.label, "ambient type for isotropy, e.g. BC1");
    cmd->add_option("--mult", t.mult, "isotropy multiplicities by root length, e.g. 4,1");
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
    return out;
}

GradedRootDatum load(const TriadOptions& t) {
    if (!t.triad.empty() && t.triad.front() == '@') {
        if (t.p || t.q || !t.label.empty() || !t.mult.empty())
            throw UsageError("--p/--q/--label/--mult apply to catalog keys only");
        return load_datum_file(t.triad.substr(1));
    }
    CatalogParams params;
    params.p = t.p;
    params.q = t.q;
    if (!t.label.empty()) params.label = CartanLabel::parse(t.label);
    for (const std::string& m : split(t.mult)) {
        try {
            std::size_t used = 0;
            params.mults.push_back(std::stoi(m, &used));
            if (used != m.size()) throw std::invalid_argument(m);
        } catch (const std::logic_error&) {
            throw UsageError("--mult expects comma-separated integers, got '" + t.mult + "'");
        }
    }
    return catalog(t.triad, params);
}

AlcovePoint point_arg(const std::string& text, const GradedRootDatum& d, const char* flag) {
    AlcovePoint p;
    try {
        p = AlcovePoint::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (p.size() != d.rank())
        throw UsageError(std::string(flag) + " needs " + std::to_string(d.rank()) + " coordinates, got " +
                         std::to_string(p.size()));
    return p;
}

TableFormat format_arg(const std::string& f) { return f == "tsv" ? TableFormat::Tsv : TableFormat::Plain; }

std::string interval_text(const RealInterval& v) {
    if (v.lo().is_zero() && v.hi().is_zero()) return "0";
    return v.str(15);
}

void print_analysis(std::ostream& out, const GradedRootDatum& d, const OrbitReport& r,
                    const std::optional<SpectrumReport>& spectrum, TableFormat fmt) {
    const int prec = r.mean_curvature.precision_bits;
    if (fmt == TableFormat::Tsv) {
        out << render_table(ClassificationTable{{r}, kDefaultPrecisionBits}, fmt);
        if (spectrum) {
            out << "\nalpha\ttheta\tpairing\tmult\teigenvalue (" << kDefaultPrecisionBits << "-bit)\n";
            out << "0\t-\t-\t" << spectrum->zero_mult + spectrum->active_mult << "\t0\n";
            for (const Eigenvalue& e : spectrum->terms)
                out << e.alpha.str() << '\t' << e.theta.str() << '\t' << e.pairing.str() << '\t' << e.mult << '\t'
                    << interval_text(e.value) << '\n';
        }
        return;
    }
    out << "datum: " << d.name << '\n'
        << "point: " << r.point.str() << '\n'
        << "type of Σ̃_H: " << type_string(r.type) << '\n';
    for (const auto& [phi, roots] : r.active.per_sector) {
        out << "  active in φ=" << phi.str() << ":";
        if (roots.empty()) out << " none";
        for (const RootVector& a : roots) out << ' ' << a.str();
        out << '\n';
    }
    out << "totally geodesic: " << (r.totally_geodesic ? "yes" : "no") << '\n'
        << "austere: " << to_string(r.austere) << '\n'
        << "minimal: " << to_string(r.minimal) << '\n'
        << "arid* (sufficient condition): " << (r.arid_sufficient ? "yes" : "no") << '\n'
        << "WR* (sufficient condition): " << (r.weakly_reflective_sufficient ? "yes" : "no") << '\n'
        << "|m_H| (" << prec << "-bit): " << format_norm(r.mean_curvature) << '\n'
        << "E_H:";
    if (r.mean_curvature.terms.empty()) out << " empty";
    out << '\n';
    for (const CotTerm& t : r.mean_curvature.terms)
        out << "  -cot(" << t.theta.str() << ")·(" << t.alpha.str() << ")  mult " << t.mult << "  [φ=" << t.phi.str()
            << "]\n";
    if (spectrum) {
        out << "spectrum of A^ξ (" << kDefaultPrecisionBits << "-bit):\n"
            << "  0  mult " << spectrum->zero_mult + spectrum->active_mult << '\n';
        for (const Eigenvalue& e : spectrum->terms)
            out << "  " << interval_text(e.value) << "  mult " << e.mult << "  (α=" << e.alpha.str()
                << ", θ=" << e.theta.str() << ", ⟨α,ξ⟩=" << e.pairing.str() << ")\n";
    }
}

std::vector<OrbitReport> face_reports(const GradedRootDatum& d, bool all) {
    std::vector<OrbitReport> rows;
    for (const Face& f : faces(d))
        if (all || f.is_vertex()) rows.push_back(analyze(d, f.representative));
    return rows;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hermann action orbit classification"};
    app.name("hermann");
    app.require_subcommand(1);

    TriadOptions triad;
    std::string point, xi, format = "plain", out_path;
    long denominator = 0;
    unsigned jobs = 1;
    double tolerance = 1e-20;
    int width = 480;
    bool all_faces = false;

    const auto formats = CLI::IsMember({"plain", "tsv"});

    auto* cat = app.add_subcommand("catalog", "built-in families");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "list catalog keys");
    auto* cat_show = cat->add_subcommand("show", "print a catalog datum as JSON");
    add_triad_options(cat_show, triad);

    auto* an = app.add_subcommand("analyze", "classify one orbit");
    add_triad_options(an, triad);
    an->add_option("--point", point, "coefficients of π in the dual basis, e.g. 1/4,0,0")->required();
    an->add_option("--xi", xi, "normal direction in the dual basis");
    an->add_option("--format", format)->check(formats);

    auto* fc = app.add_subcommand("faces", "classify the faces of the alcove");
    add_triad_options(fc, triad);
    fc->add_flag("--all-faces", all_faces, "every face instead of vertices only");
    fc->add_option("--format", format)->check(formats);

    auto* sc = app.add_subcommand("scan-austere", "austere points on a rational grid");
    add_triad_options(sc, triad);
    sc->add_option("--denominator", denominator)->required()->check(CLI::PositiveNumber);
    sc->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    sc->add_option("--format", format)->check(formats);

    auto* fm = app.add_subcommand("find-minimal", "numerical minimal orbit");
    add_triad_options(fm, triad);
    fm->add_option("--tolerance", tolerance)->check(CLI::PositiveNumber);

    auto* rd = app.add_subcommand("reduce", "move a point into the alcove");
    add_triad_options(rd, triad);
    rd->add_option("--point", point)->required();

    auto* dg = app.add_subcommand("diagram", "SVG picture of a rank ≤ 2 alcove");
    add_triad_options(dg, triad);
    dg->add_option("--out", out_path)->required();
    dg->add_option("--width", width)->check(CLI::Range(64, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cat_list) {
            for (const CatalogEntry& e : catalog_entries()) out << e.key << '\t' << e.triad << '\t' << e.parameters << '\n';
            return 0;
        }
        const GradedRootDatum d = load(triad);
        if (*cat_show) {
            out << serialize(d);
        } else if (*an) {
            const AlcovePoint h = point_arg(point, d, "--point");
            std::optional<SpectrumReport> spectrum;
            if (!xi.empty()) spectrum = shape_spectrum(d, h, point_arg(xi, d, "--xi").coeffs, Basis::Dual);
            print_analysis(out, d, analyze(d, h), spectrum, format_arg(format));
        } else if (*fc) {
            out << render_table(ClassificationTable{face_reports(d, all_faces), kDefaultPrecisionBits},
                                format_arg(format));
        } else if (*sc) {
            const auto hits = scan_austere(d, denominator, jobs);
            std::vector<std::vector<std::string>> rows{{"point", "austere"}};
            for (const ScanHit& h : hits) rows.push_back({h.point.str(), to_string(h.verdict)});
            std::size_t w = 0;
            for (const auto& r : rows) w = std::max(w, display_width(r[0]));
            for (const auto& r : rows) {
                if (format == "tsv") out << r[0] << '\t' << r[1] << '\n';
                else out << r[0] << std::string(w - display_width(r[0]) + 2, ' ') << r[1] << '\n';
            }
        } else if (*fm) {
            const MinimalOrbit m = find_minimal(d, tolerance);
            out << "point (256-bit, 30 digits):";
            for (const Rational& q : m.point.coeffs) out << ' ' << BigFloat::from_rational(q, 256).str(30) << "·π";
            out << '\n'
                << "|m_H| (256-bit) <= " << m.mean_curvature_norm.hi().str(3)
                << '\n'
                << "iterations: " << m.iterations << '\n';
        } else if (*rd) {
            const AlcovePoint h = point_arg(point, d, "--point");
            const Reduction red = reduce_to_alcove(d, h);
            out << "input: " << h.str() << '\n' << "output: " << red.point.str() << '\n'
                << "reflections: " << red.word.size() << '\n';
            for (const Wall& w : red.word) out << "  " << w.str() << '\n';
        } else if (*dg) {
            const auto reports = face_reports(d, false);
            const std::string svg = render_svg(d, reports, width);
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw UsageError("cannot write " + out_path);
            f << svg;
            out << "wrote " << out_path << " (" << reports.size() << " markers)\n";
        }
        return 0;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return 3;
    } catch (const ValidationError& e) {
        err << "invalid datum:\n";
        for (const Violation& v : e.violations()) err << "  " << to_string(v.kind) << ": " << v.message << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownKey& e) {
        err << "unknown catalog key: " << e.what() << '\n';
        return 2;
    } catch (const BadParameters& e) {
        err << "bad parameters: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedLabel& e) {
        err << "unsupported label: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace hermann
