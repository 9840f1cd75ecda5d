#include "ehrq/cli.hpp"

#include "ehrq/closed_forms.hpp"
#include "ehrq/graded_quotient.hpp"
#include "ehrq/lattice.hpp"
#include "ehrq/permstats.hpp"
#include "ehrq/polytope_json.hpp"
#include "ehrq/qtrational.hpp"
#include "ehrq/render.hpp"
#include "ehrq/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>

namespace ehrq::cli {

namespace {

using nlohmann::json;

enum class Format { plain, json_fmt, latex };

struct PolytopeArgs {
    std::string file;
    std::string family;
    int dim = 0;

    LatticePolytope resolve() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open polytope file \"" + file + "\"");
            json j;
            in >> j;
            return polytope_from_json(j);
        }
        if (family.empty())
            throw std::invalid_argument("specify a polytope with --polytope FILE or --family F --dim D");
        const auto f = family_from_name(family);
        if (!f) throw std::invalid_argument("unknown polytope family \"" + family + "\"");
        return LatticePolytope::family(*f, dim);
    }

    void attach(CLI::App* cmd, bool dim_required = false) {
        cmd->add_option("--polytope", file, "Polytope JSON file");
        cmd->add_option("--family", family, "Built-in family: simplex, cross or cube");
        auto* dim_opt = cmd->add_option("--dim", dim, "Ambient dimension for --family");
        if (dim_required) dim_opt->required();
    }
};

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "json") return Format::json_fmt;
    if (name == "latex") return Format::latex;
    throw std::invalid_argument("unknown output format \"" + name + "\"");
}

std::string polytope_label(const LatticePolytope& p) {
    if (p.family_tag()) return family_name(*p.family_tag());
    return "halfspaces";
}

// The closed-form series of a built-in family, when one exists.
std::optional<QTRational> closed_series(const LatticePolytope& p, const WeightVector& a) {
    if (!p.family_tag()) return std::nullopt;
    switch (*p.family_tag()) {
        case Family::simplex: return simplex_series(p.dim(), a);
        case Family::cross: return cross_series(p.dim(), a);
        case Family::cube:
            // The segment is the 1-simplex; no closed form is provided
            // beyond dimension 3.
            if (p.dim() == 1) return simplex_series(1, a);
            if (p.dim() == 2) return square_series(a[0], a[1]);
            if (p.dim() == 3) return cube_series(a[0], a[1], a[2]);
            return std::nullopt;
    }
    return std::nullopt;
}

int cmd_points(const PolytopeArgs& args, std::int64_t r, Format format, std::ostream& out) {
    const LatticePolytope polytope = args.resolve();
    const auto points = polytope.enumerate_points(r);
    if (format == Format::json_fmt) {
        json j{{"dim", polytope.dim()},
               {"r", r},
               {"count", points.size()},
               {"points", points}};
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& v : points) {
        out << "(";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
        out << ")\n";
    }
    return 0;
}

int cmd_slice(const PolytopeArgs& args, std::int64_t r, const WeightVector& weights, Format format,
              std::ostream& out) {
    const LatticePolytope polytope = args.resolve();
    const QLaurent poly = polytope.slice_polynomial(r, weights);
    switch (format) {
        case Format::plain: out << to_plain(poly) << "\n"; break;
        case Format::latex: out << to_latex(poly) << "\n"; break;
        case Format::json_fmt:
            out << json{{"dim", polytope.dim()},
                        {"r", r},
                        {"weights", weights},
                        {"polynomial", to_json(poly)}}
                       .dump(2)
                << "\n";
            break;
    }
    return 0;
}

int cmd_series(const PolytopeArgs& args, const WeightVector& weights, std::size_t order,
               const std::string& mode, Format format, std::ostream& out) {
    const LatticePolytope polytope = args.resolve();

    std::optional<QTRational> closed;
    if (mode == "closed" || mode == "both") {
        closed = closed_series(polytope, weights);
        if (!closed)
            throw std::invalid_argument("no closed form for this polytope (cubes stop at dimension "
                                        "3); use --brute");
    }
    std::optional<QTSeries> brute;
    if (mode == "brute" || mode == "both")
        brute = polytope.refined_series_bruteforce(weights, order);

    std::optional<QTSeries> expanded;
    if (closed) expanded = series_expand(*closed, order);
    const QTSeries& shown = expanded ? *expanded : *brute;

    bool agree = true;
    if (mode == "both") agree = series_equal(*expanded, *brute, order);

    if (format == Format::json_fmt) {
        json j{{"polytope", polytope_label(polytope)},
               {"dim", polytope.dim()},
               {"weights", weights},
               {"order", order},
               {"mode", mode},
               {"series", to_json(shown)}};
        if (closed) j["closed_form"] = to_json(*closed);
        if (mode == "both") j["agree"] = agree;
        out << j.dump(2) << "\n";
    } else {
        auto render = [&](const auto& value) {
            return format == Format::latex ? to_latex(value) : to_plain(value);
        };
        if (closed) out << "closed form: " << render(*closed) << "\n";
        out << "series: " << render(shown) << "\n";
        if (mode == "both") {
            if (!agree) out << "brute series: " << render(*brute) << "\n";
            out << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
        }
    }
    return mode == "both" && !agree ? 1 : 0;
}

int cmd_eulerian(int dim, bool refined, Format format, std::ostream& out) {
    if (format == Format::json_fmt) {
        json j{{"dim", dim}, {"refined", refined}};
        j["polynomial"] = refined ? to_json(refined_eulerian(dim)) : to_json(eulerian_polynomial(dim));
        out << j.dump(2) << "\n";
        return 0;
    }
    if (refined) {
        const QTPoly poly = refined_eulerian(dim);
        out << (format == Format::latex ? to_latex(poly) : to_plain(poly)) << "\n";
    } else {
        const QLaurent poly = eulerian_polynomial(dim);
        out << (format == Format::latex ? to_latex(poly, "t") : to_plain(poly, "t")) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::size_t order, Format format, std::ostream& out) {
    const auto results = verify_suite(suite, order);
    bool all_pass = true;
    for (const auto& result : results) all_pass = all_pass && result.pass;
    if (format == Format::json_fmt) {
        json items = json::array();
        for (const auto& result : results)
            items.push_back({{"name", result.name}, {"pass", result.pass}});
        out << json{{"suite", suite}, {"order", order}, {"results", items}, {"all_pass", all_pass}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& result : results)
            out << (result.pass ? "PASS " : "FAIL ") << result.name << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_quotient(int dim, std::optional<std::int64_t> rmax, Format format, std::ostream& out) {
    BigradedTable table;
    bool matches = false;
    if (rmax) {
        table = quotient_hilbert(dim, *rmax);
        const auto expected = BigradedTable::from_coefficients(refined_eulerian(dim));
        matches = true;
        for (const auto& [key, value] : table.entries())
            matches = matches && value == expected.at(key.first, key.second);
        for (const auto& [key, value] : expected.entries())
            matches = matches && (key.first > *rmax || table.at(key.first, key.second) == value);
    } else {
        const RegularSequenceCheck check = verify_regular_sequence(dim);
        table = check.table;
        matches = check.matches;
    }

    if (format == Format::json_fmt) {
        json entries = json::array();
        for (const auto& [key, value] : table.entries())
            entries.push_back({{"r", key.first}, {"k", key.second}, {"dim", value}});
        out << json{{"dim", dim}, {"entries", entries}, {"matches_refined_eulerian", matches}}.dump(2)
            << "\n";
    } else {
        for (const auto& [key, value] : table.entries())
            out << "r=" << key.first << " k=" << key.second << " dim=" << value << "\n";
        out << "matches refined Eulerian polynomial: " << (matches ? "yes" : "no") << "\n";
    }
    return matches ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact weight-refined Ehrhart series of lattice polytopes"};
    app.name("ehrq");
    app.require_subcommand(1);
    app.fallthrough();  // lets --format appear after the subcommand

    std::string format_name = "plain";
    app.add_option("--format", format_name, "Output format: plain, json or latex")
        ->capture_default_str();

    PolytopeArgs points_args;
    std::int64_t points_r = 0;
    auto* points_cmd = app.add_subcommand("points", "List the lattice points of a dilation");
    points_args.attach(points_cmd);
    points_cmd->add_option("--r", points_r, "Dilation factor")->required();

    PolytopeArgs slice_args;
    std::int64_t slice_r = 0;
    WeightVector slice_weights;
    auto* slice_cmd = app.add_subcommand("slice", "Slice polynomial of a dilation");
    slice_args.attach(slice_cmd);
    slice_cmd->add_option("--r", slice_r, "Dilation factor")->required();
    slice_cmd->add_option("--weights", slice_weights, "Comma-separated integer weights")
        ->delimiter(',')
        ->required();

    PolytopeArgs series_args;
    WeightVector series_weights;
    std::size_t series_order = 12;
    auto* series_cmd = app.add_subcommand("series", "Refined Ehrhart series, truncated");
    series_args.attach(series_cmd);
    series_cmd->add_option("--weights", series_weights, "Comma-separated integer weights")
        ->delimiter(',')
        ->required();
    series_cmd->add_option("--order", series_order, "Truncation order")->capture_default_str();
    bool flag_closed = false, flag_brute = false, flag_both = false;
    series_cmd->add_flag("--closed", flag_closed, "Expand the closed form");
    series_cmd->add_flag("--brute", flag_brute, "Enumerate lattice points (default)");
    series_cmd->add_flag("--both", flag_both, "Run both routes and compare");

    int eulerian_dim = 0;
    bool eulerian_refined = false;
    auto* eulerian_cmd = app.add_subcommand("eulerian", "Eulerian polynomial of S_d");
    eulerian_cmd->add_option("--dim", eulerian_dim, "Symmetric group degree d")->required();
    eulerian_cmd->add_flag("--refined", eulerian_refined, "Joint descent/major-index polynomial");

    std::string verify_suite_name = "all";
    std::size_t verify_order = 12;
    auto* verify_cmd = app.add_subcommand("verify", "Run the closed-form identity suites");
    verify_cmd
        ->add_option("--suite", verify_suite_name,
                     "all, simplex, cross, square, cube, macmahon or ringC3")
        ->capture_default_str();
    verify_cmd->add_option("--order", verify_order, "Truncation order")->capture_default_str();

    int quotient_dim = 0;
    std::int64_t quotient_rmax = -1;
    auto* quotient_cmd =
        app.add_subcommand("quotient", "Bigraded Hilbert function of the cube quotient");
    quotient_cmd->add_option("--dim", quotient_dim, "Cube dimension (1..4)")->required();
    quotient_cmd->add_option("--rmax", quotient_rmax, "Largest t-degree (default d+2)");

    std::vector<const char*> argv;
    argv.push_back("ehrq");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        const Format format = parse_format(format_name);
        if (points_cmd->parsed()) return cmd_points(points_args, points_r, format, out);
        if (slice_cmd->parsed()) return cmd_slice(slice_args, slice_r, slice_weights, format, out);
        if (series_cmd->parsed()) {
            if (flag_closed + flag_brute + flag_both > 1)
                throw std::invalid_argument("--closed, --brute and --both are mutually exclusive");
            const std::string mode = flag_closed ? "closed" : flag_both ? "both" : "brute";
            return cmd_series(series_args, series_weights, series_order, mode, format, out);
        }
        if (eulerian_cmd->parsed()) return cmd_eulerian(eulerian_dim, eulerian_refined, format, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_suite_name, verify_order, format, out);
        if (quotient_cmd->parsed()) {
            std::optional<std::int64_t> rmax;
            if (quotient_cmd->count("--rmax") > 0) rmax = quotient_rmax;
            return cmd_quotient(quotient_dim, rmax, format, out);
        }
        err << "error: no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ehrq::cli
