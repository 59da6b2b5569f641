#pragma once

// Command-line front end. run() is the whole program; tools/ccodes.cpp only
// forwards argv. Exit status: 0 ok, 1 verification mismatch, 2 bad input.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartcodes/codes.hpp"
#include "cartcodes/error.hpp"
#include "cartcodes/grid.hpp"
#include "cartcodes/hilbert.hpp"

namespace cartcodes::cli {

using Json = nlohmann::ordered_json;

enum class Command { Hierarchy, Dual, Verify, Shadow, Footprint, MaxZeros };
enum class Format { Table, Json };

struct RunConfig {
    Command command = Command::Hierarchy;
    Format format = Format::Table;
    std::uint64_t budget = kDefaultBudget;
    // code spec, inline or from a file
    std::string spec_file;
    std::string field;
    std::string sets;
    std::optional<int> d;
    // grid utilities
    std::string grid;
    std::optional<int> v;
    std::optional<std::uint64_t> r;
    std::string lts;
    bool brute = false;
};

/// Default oracle budget: CCODES_BUDGET if set, else 10^7.
inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("CCODES_BUDGET"); env != nullptr && *env != '\0') {
        return cartcodes::detail::parse_int<std::uint64_t>(env, "CCODES_BUDGET");
    }
    return kDefaultBudget;
}

/// Reads a code spec from a file: either JSON {"field": "p^e", "sets": "..."|[[...]], "d"|"degree": n}
/// or text lines "key = value" / "key: value" with '#' comments.
inline codes::CartesianCodeSpec read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open spec file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json doc;
        try {
            doc = Json::parse(text);
            const std::string field = doc.at("field").get<std::string>();
            std::string sets;
            if (doc.at("sets").is_string()) {
                sets = doc.at("sets").get<std::string>();
            } else {
                sets = codes::format_sets(doc.at("sets").get<std::vector<std::vector<gf::Elem>>>());
            }
            const int d = doc.contains("d") ? doc.at("d").get<int>() : doc.at("degree").get<int>();
            return codes::CartesianCodeSpec::parse(field, sets, d);
        } catch (const Json::exception& e) {
            throw Error(ErrorKind::ParseError, std::string("malformed JSON spec: ") + e.what());
        }
    }
    std::string field, sets, degree;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto sep = line.find_first_of("=:");
        if (sep == std::string::npos) {
            if (!cartcodes::detail::strip(line).empty()) throw Error(ErrorKind::ParseError, "bad spec line: " + line);
            continue;
        }
        const std::string key(cartcodes::detail::strip(std::string_view(line).substr(0, sep)));
        const std::string value(cartcodes::detail::strip(std::string_view(line).substr(sep + 1)));
        if (key == "field") field = value;
        else if (key == "sets") sets = value;
        else if (key == "d" || key == "degree") degree = value;
        else throw Error(ErrorKind::ParseError, "unknown spec key '" + key + "'");
    }
    if (field.empty() || sets.empty() || degree.empty()) {
        throw Error(ErrorKind::ParseError, "spec file needs field, sets and d");
    }
    return codes::CartesianCodeSpec::parse(field, sets, cartcodes::detail::parse_int<int>(degree, "degree"));
}

inline codes::CartesianCodeSpec resolve_spec(const RunConfig& cfg) {
    if (!cfg.spec_file.empty()) return read_spec_file(cfg.spec_file);
    if (cfg.field.empty() || cfg.sets.empty() || !cfg.d) {
        throw Error(ErrorKind::ParseError, "a code needs --field, --sets and --d (or --spec FILE)");
    }
    return codes::CartesianCodeSpec::parse(cfg.field, cfg.sets, *cfg.d);
}

namespace detail {

inline std::string join(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
    return out;
}

inline void row(std::ostream& out, const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 15 ? 15 - key.size() : 1, ' ') << value << "\n";
}

inline Json matrix_json(const linalg::Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
    return rows;
}

inline std::uint64_t require_r(const RunConfig& cfg) {
    if (!cfg.r) throw Error(ErrorKind::ParseError, "--r is required");
    return *cfg.r;
}

inline int run_hierarchy(const RunConfig& cfg, std::ostream& out) {
    const auto spec = resolve_spec(cfg);
    const auto h = codes::hierarchy(spec);
    const auto dual = codes::dual_hierarchy(spec);
    const auto dmin = codes::min_distance_closed_form(spec);
    if (cfg.format == Format::Json) {
        Json doc;
        doc["length"] = spec.n();
        doc["dimension"] = h.weights.size();
        doc["degree"] = spec.d();
        doc["hierarchy"] = h.weights;
        doc["dual_hierarchy"] = dual.weights;
        doc["min_distance"] = dmin;
        doc["field"] = std::to_string(spec.field().p()) + "^" + std::to_string(spec.field().e());
        doc["sets"] = codes::format_sets(spec.grid().sets());
        out << doc.dump() << "\n";
    } else {
        row(out, "length", std::to_string(spec.n()));
        row(out, "dimension", std::to_string(h.weights.size()));
        row(out, "degree", std::to_string(spec.d()));
        row(out, "min_distance", std::to_string(dmin));
        row(out, "hierarchy", join(h.weights));
        row(out, "dual_hierarchy", join(dual.weights));
    }
    return 0;
}

inline int run_dual(const RunConfig& cfg, std::ostream& out) {
    const auto spec = resolve_spec(cfg);
    const auto dual = codes::dual_code(spec);
    const auto h = codes::dual_hierarchy(spec);
    if (cfg.format == Format::Json) {
        Json doc;
        doc["length"] = spec.n();
        doc["dimension"] = dual.dimension();
        doc["dual_degree"] = spec.k() - spec.d() - 1;
        doc["generator"] = matrix_json(dual.generator());
        doc["dual_hierarchy"] = h.weights;
        out << doc.dump() << "\n";
    } else {
        row(out, "length", std::to_string(spec.n()));
        row(out, "dimension", std::to_string(dual.dimension()));
        row(out, "dual_degree", std::to_string(spec.k() - spec.d() - 1));
        row(out, "dual_hierarchy", join(h.weights));
        out << "generator\n" << dual.generator().to_string();
    }
    return 0;
}

struct Check {
    std::string name;
    std::string status;  // PASS, FAIL, SKIP
    std::string closed;
    std::string oracle;
    std::string witness;
};

inline std::vector<Check> verify_checks(const codes::CartesianCodeSpec& spec, std::uint64_t budget) {
    std::vector<Check> checks;
    auto compare = [&](std::string name, std::uint64_t closed, auto&& oracle, std::string witness) {
        Check c{std::move(name), "", std::to_string(closed), "", std::move(witness)};
        try {
            const std::uint64_t value = oracle();
            c.oracle = std::to_string(value);
            c.status = value == closed ? "PASS" : "FAIL";
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InstanceTooLarge) throw;
            c.status = "SKIP";
            c.oracle = "over budget";
        }
        checks.push_back(std::move(c));
    };

    const auto code = codes::generator_matrix(spec);
    const std::uint64_t K = code.dimension();
    for (std::uint64_t r = 1; r <= K; ++r) {
        const auto a = grid::rth_of_deg_ge(spec.shape(), spec.k() - spec.d(), r);
        compare("ghw r=" + std::to_string(r), codes::ghw_closed_form(spec, r),
                [&] { return codes::brute_ghw(code, r, budget); }, a.to_string());
    }
    compare("min_distance", codes::min_distance_closed_form(spec), [&] { return codes::brute_min_distance(code, budget); },
            grid::rth_of_deg_le(spec.shape(), spec.d(), 1).to_string());
    for (std::uint64_t r = 1; r <= K; ++r) {
        const auto polys = codes::extremal_polynomials(spec, r);
        compare("max_common_zeros r=" + std::to_string(r), codes::max_common_zeros(spec, r),
                [&] { return codes::common_zero_count(spec.grid(), polys); },
                grid::rth_of_deg_le(spec.shape(), spec.d(), r).to_string());
    }

    const auto dual = codes::dual_code(spec);
    const bool orthogonal = dual.dimension() == 0 || linalg::is_zero(linalg::multiply_transpose(code.generator(), dual.generator()));
    checks.push_back({"dual_orthogonal", orthogonal ? "PASS" : "FAIL", "0", orthogonal ? "0" : "nonzero", ""});
    const std::uint64_t dims = K + dual.dimension();
    checks.push_back({"dual_dimension", dims == spec.n() ? "PASS" : "FAIL", std::to_string(spec.n()), std::to_string(dims), ""});
    if (spec.d() < spec.k()) {
        const int dual_degree = spec.k() - spec.d() - 1;
        for (std::uint64_t r = 1; r <= dual.dimension(); ++r) {
            compare("dual_ghw r=" + std::to_string(r), codes::ghw_formula(spec.shape(), dual_degree, r),
                    [&] { return codes::brute_ghw(dual, r, budget); },
                    grid::rth_of_deg_ge(spec.shape(), spec.k() - dual_degree, r).to_string());
        }
        const auto wei = codes::wei_duality_check(spec);
        checks.push_back({"wei_duality", wei.holds() ? "PASS" : "FAIL", join(wei.primal), join(wei.reflected), ""});
    }
    return checks;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
    const auto spec = resolve_spec(cfg);
    const auto checks = verify_checks(spec, cfg.budget);
    const bool ok = std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "FAIL"; });
    if (cfg.format == Format::Json) {
        Json doc;
        doc["ok"] = ok;
        doc["checks"] = Json::array();
        for (const auto& c : checks) {
            doc["checks"].push_back({{"name", c.name}, {"status", c.status}, {"closed", c.closed}, {"oracle", c.oracle}, {"witness", c.witness}});
        }
        out << doc.dump() << "\n";
    } else {
        for (const auto& c : checks) {
            out << c.status << " " << c.name << " closed=" << c.closed << " oracle=" << c.oracle;
            if (c.status == "FAIL" && !c.witness.empty()) out << " witness=(" << c.witness << ")";
            out << "\n";
        }
        out << (ok ? "verify: ok" : "verify: MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
}

inline int run_shadow(const RunConfig& cfg, std::ostream& out) {
    if (cfg.grid.empty() || !cfg.v) throw Error(ErrorKind::ParseError, "shadow needs --grid, --v and --r");
    const auto shape = grid::GridShape::parse(cfg.grid);
    const std::uint64_t r = require_r(cfg);
    const std::uint64_t value = grid::min_shadow_size(shape, *cfg.v, r);
    std::optional<std::uint64_t> brute;
    if (cfg.brute) brute = grid::brute_min_shadow(shape, *cfg.v, r, cfg.budget);
    if (cfg.format == Format::Json) {
        Json doc;
        doc["grid"] = shape.to_string();
        doc["v"] = *cfg.v;
        doc["r"] = r;
        doc["min_shadow"] = value;
        if (brute) doc["brute_min_shadow"] = *brute;
        out << doc.dump() << "\n";
    } else {
        out << value << "\n";
        if (brute) out << "brute_min_shadow " << *brute << "\n";
    }
    return brute && *brute != value ? 1 : 0;
}

inline int run_footprint(const RunConfig& cfg, std::ostream& out) {
    if (cfg.grid.empty()) throw Error(ErrorKind::ParseError, "footprint needs --grid and --lts");
    const auto shape = grid::GridShape::parse(cfg.grid);
    std::vector<hilbert::Monomial> lts;
    for (auto part : cartcodes::detail::split(cfg.lts, ';')) {
        if (!cartcodes::detail::strip(part).empty()) lts.push_back(hilbert::Monomial::parse(part));
    }
    const std::uint64_t bound = hilbert::footprint_upper_bound(shape, lts);
    const std::uint64_t hilbert_value = hilbert::hilbert_fn(hilbert::box_ideal(shape, lts), shape.k());
    if (cfg.format == Format::Json) {
        Json doc;
        doc["grid"] = shape.to_string();
        doc["bound"] = bound;
        doc["hilbert"] = hilbert_value;
        out << doc.dump() << "\n";
    } else {
        out << bound << "\n";
    }
    return bound == hilbert_value ? 0 : 1;
}

inline int run_maxzeros(const RunConfig& cfg, std::ostream& out) {
    const auto spec = resolve_spec(cfg);
    const std::uint64_t r = require_r(cfg);
    const std::uint64_t value = codes::max_common_zeros(spec, r);
    const auto polys = codes::extremal_polynomials(spec, r);
    const std::uint64_t attained = codes::common_zero_count(spec.grid(), polys);
    if (cfg.format == Format::Json) {
        Json doc;
        doc["r"] = r;
        doc["max_common_zeros"] = value;
        doc["attained"] = attained;
        doc["polynomials"] = Json::array();
        for (const auto& f : polys) doc["polynomials"].push_back(f.to_string());
        out << doc.dump() << "\n";
    } else {
        row(out, "max_zeros", std::to_string(value));
        row(out, "attained", std::to_string(attained));
        for (const auto& f : polys) out << f.to_string() << "\n";
    }
    return value == attained ? 0 : 1;
}

} // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out) {
    switch (cfg.command) {
    case Command::Hierarchy: return detail::run_hierarchy(cfg, out);
    case Command::Dual: return detail::run_dual(cfg, out);
    case Command::Verify: return detail::run_verify(cfg, out);
    case Command::Shadow: return detail::run_shadow(cfg, out);
    case Command::Footprint: return detail::run_footprint(cfg, out);
    case Command::MaxZeros: return detail::run_maxzeros(cfg, out);
    }
    return 2;
}

/// Parses arguments (without the program name) and runs the command.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Affine Cartesian codes: generalized Hamming weights, duals and oracles", "ccodes"};
    app.require_subcommand(1);

    std::string format = "table";
    std::optional<std::uint64_t> budget;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--budget", budget, "oracle subset/subspace cap (default 10^7 or $CCODES_BUDGET)");
    };
    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--spec", cfg.spec_file, "spec file (text or JSON)");
        sub->add_option("--field", cfg.field, "field as p^e");
        sub->add_option("--sets", cfg.sets, "evaluation sets, e.g. \"0,1;0,1,2\"");
        sub->add_option("--d", cfg.d, "degree");
    };

    auto* hierarchy = app.add_subcommand("hierarchy", "print the generalized Hamming weights");
    add_spec(hierarchy);
    add_common(hierarchy);
    auto* dual = app.add_subcommand("dual", "print the dual generator matrix and hierarchy");
    add_spec(dual);
    add_common(dual);
    auto* verify = app.add_subcommand("verify", "compare closed forms against brute-force oracles");
    add_spec(verify);
    add_common(verify);
    auto* shadow = app.add_subcommand("shadow", "minimum shadow of r elements of F_{<=v}");
    shadow->add_option("--grid", cfg.grid, "box as d1xd2x...")->required();
    shadow->add_option("--v", cfg.v, "degree bound")->required();
    shadow->add_option("--r", cfg.r, "number of elements")->required();
    shadow->add_flag("--brute", cfg.brute, "also run the exhaustive minimiser");
    add_common(shadow);
    auto* footprint = app.add_subcommand("footprint", "footprint bound for given leading terms");
    footprint->add_option("--grid", cfg.grid, "box as d1xd2x...")->required();
    footprint->add_option("--lts", cfg.lts, "leading terms, e.g. \"1,1;0,2\"")->required();
    add_common(footprint);
    auto* maxzeros = app.add_subcommand("maxzeros", "maximum common zeros and extremal polynomials");
    add_spec(maxzeros);
    maxzeros->add_option("--r", cfg.r, "number of polynomials")->required();
    add_common(maxzeros);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const std::pair<CLI::App*, Command> commands[] = {
        {hierarchy, Command::Hierarchy}, {dual, Command::Dual},           {verify, Command::Verify},
        {shadow, Command::Shadow},       {footprint, Command::Footprint}, {maxzeros, Command::MaxZeros},
    };
    for (const auto& [sub, command] : commands) {
        if (sub->parsed()) cfg.command = command;
    }
    cfg.format = format == "json" ? Format::Json : Format::Table;

    try {
        cfg.budget = budget ? *budget : default_budget();
        return run(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cartcodes::cli
