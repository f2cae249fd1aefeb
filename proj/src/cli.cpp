#include "refsev/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "refsev/errors.hpp"
#include "refsev/json_io.hpp"
#include "refsev/oracle.hpp"
#include "refsev/polygon.hpp"
#include "refsev/render.hpp"
#include "refsev/severi.hpp"

namespace refsev::cli {

namespace {

struct CommonArgs {
    std::string polygon;
    long delta = 0;
    std::string format = "text";
    std::string method = "fock";
    std::string eval = "poly";
    std::string alpha;
    std::string beta;
    int threads = 0;
    std::size_t max_states = 0;
    long wick_max_factors = 6;
};

ComputeOptions options_of(const CommonArgs& a) {
    ComputeOptions o;
    o.threads = a.threads;
    o.max_states = a.max_states;
    o.wick_max_factors = a.wick_max_factors;
    return o;
}

void add_perf_options(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--threads", a.threads,
                    "worker threads (0 = hardware concurrency)");
    cmd->add_option("--max-states", a.max_states,
                    "basis-state guard (0 = default / REFSEV_GUARD_MAX_STATES)");
    cmd->add_option("--wick-max-factors", a.wick_max_factors,
                    "operator-word length guard for the pairing method");
}

void add_format_option(CLI::App* cmd, CommonArgs& a,
                       const std::string& desc = "text | json") {
    cmd->add_option("--format", a.format, desc)
        ->check(CLI::IsMember({"text", "json"}));
}

nlohmann::json value_json(const LaurentY& v) {
    return nlohmann::json{{"poly", laurent_to_json(v)},
                          {"y1", v.eval(EvalPoint::One).str()},
                          {"ym1", v.eval(EvalPoint::MinusOne).str()}};
}

void print_value_text(std::ostream& os, const LaurentY& v,
                      const std::string& eval) {
    if (eval == "y1") {
        os << v.eval(EvalPoint::One).str() << "\n";
    } else if (eval == "ym1") {
        os << v.eval(EvalPoint::MinusOne).str() << "\n";
    } else {
        os << "poly: " << v.str() << "\n";
        os << "y1:   " << v.eval(EvalPoint::One).str() << "\n";
        os << "ym1:  " << v.eval(EvalPoint::MinusOne).str() << "\n";
    }
}

/// Results of running every admissible method on one instance.
struct MethodRun {
    std::vector<std::pair<std::string, LaurentY>> values;
    std::vector<std::pair<std::string, std::string>> skipped;

    bool all_equal() const {
        for (size_t i = 1; i < values.size(); ++i)
            if (!(values[i].second == values[0].second)) return false;
        return true;
    }
};

MethodRun run_all_methods(const HTransversePolygon& p, long delta,
                          const std::optional<std::pair<Partition, Partition>>&
                              tangency,
                          const ComputeOptions& opts) {
    MethodRun run;
    // the operator method validates all inputs; run it first so a later
    // DomainError from the floor method can only mean that formalism
    // declines the instance
    if (tangency)
        run.values.emplace_back(
            "fock", refined_relative(p, delta, tangency->first,
                                     tangency->second, opts));
    else
        run.values.emplace_back("fock", refined_severi(p, delta, opts));
    try {
        if (tangency)
            run.values.emplace_back(
                "floor",
                floor_relative(p, delta, tangency->first, tangency->second));
        else
            run.values.emplace_back("floor", floor_severi(p, delta));
    } catch (const DomainError& e) {
        run.skipped.emplace_back("floor", e.what());
    }
    try {
        if (tangency)
            run.values.emplace_back(
                "wick", wick_relative(p, delta, tangency->first,
                                      tangency->second, opts));
        else
            run.values.emplace_back("wick", wick_severi(p, delta, opts));
    } catch (const GuardError& e) {
        run.skipped.emplace_back("wick", e.what());
    }
    return run;
}

/// Smallest doubled exponent at which two of the computed values differ.
int first_mismatch_exponent(const MethodRun& run) {
    std::set<int> keys;
    for (const auto& [name, v] : run.values)
        for (const auto& [e2, c] : v.terms()) keys.insert(e2);
    for (int e2 : keys) {
        const BigInt ref = run.values[0].second.coeff(e2);
        for (size_t i = 1; i < run.values.size(); ++i)
            if (run.values[i].second.coeff(e2) != ref) return e2;
    }
    return 0; // unreachable when a mismatch exists
}

std::string exponent_label(int e2) {
    if (e2 % 2 == 0) return "y^" + std::to_string(e2 / 2);
    return "y^(" + std::to_string(e2) + "/2)";
}

LaurentY single_method(const HTransversePolygon& p, long delta,
                       const std::optional<std::pair<Partition, Partition>>&
                           tangency,
                       const std::string& method, const ComputeOptions& opts) {
    if (method == "fock")
        return tangency ? refined_relative(p, delta, tangency->first,
                                           tangency->second, opts)
                        : refined_severi(p, delta, opts);
    if (method == "floor")
        return tangency ? floor_relative(p, delta, tangency->first,
                                         tangency->second)
                        : floor_severi(p, delta);
    return tangency
               ? wick_relative(p, delta, tangency->first, tangency->second,
                               opts)
               : wick_severi(p, delta, opts);
}

int emit_compute(std::ostream& out, std::ostream& err, const CommonArgs& args,
                 const std::optional<std::pair<Partition, Partition>>&
                     tangency) {
    const auto p = parse_polygon(args.polygon);
    const auto opts = options_of(args);
    LaurentY value;
    if (args.method == "all") {
        const auto run = run_all_methods(p, args.delta, tangency, opts);
        for (const auto& [name, why] : run.skipped)
            err << "note: " << name << " skipped (" << why << ")\n";
        if (!run.all_equal()) {
            const int e2 = first_mismatch_exponent(run);
            err << "mismatch at " << exponent_label(e2) << ":";
            for (const auto& [name, v] : run.values)
                err << " " << name << "=" << v.coeff(e2).get_str();
            err << "\n";
            return 2;
        }
        value = run.values[0].second;
    } else {
        value = single_method(p, args.delta, tangency, args.method, opts);
    }
    if (args.format == "json")
        out << value_json(value).dump() << "\n";
    else
        print_value_text(out, value, args.eval);
    return 0;
}

int emit_crosscheck(std::ostream& out, const CommonArgs& args,
                    const std::optional<std::pair<Partition, Partition>>&
                        tangency) {
    const auto p = parse_polygon(args.polygon);
    const auto run = run_all_methods(p, args.delta, tangency, options_of(args));
    const bool match = run.all_equal();

    if (args.format == "json") {
        nlohmann::json methods = nlohmann::json::object();
        for (const auto& [name, v] : run.values)
            methods[name] = laurent_to_json(v);
        nlohmann::json skipped = nlohmann::json::object();
        for (const auto& [name, why] : run.skipped) skipped[name] = why;
        nlohmann::json j{{"match", match},
                         {"methods", methods},
                         {"skipped", skipped}};
        if (!match) {
            const int e2 = first_mismatch_exponent(run);
            nlohmann::json at{{"exponent2", e2}};
            for (const auto& [name, v] : run.values)
                at[name] = v.coeff(e2).get_str();
            j["first_mismatch"] = at;
        }
        out << j.dump() << "\n";
        return match ? 0 : 2;
    }

    for (const auto& [name, v] : run.values)
        out << name << ": " << v.str() << "\n";
    for (const auto& [name, why] : run.skipped)
        out << name << ": skipped (" << why << ")\n";
    if (match) {
        out << "match:";
        for (size_t i = 0; i < run.values.size(); ++i)
            out << (i ? "=" : " ") << run.values[i].first;
        out << "\n";
        return 0;
    }
    const int e2 = first_mismatch_exponent(run);
    out << "mismatch at " << exponent_label(e2) << ":";
    for (const auto& [name, v] : run.values)
        out << " " << name << "=" << v.coeff(e2).get_str();
    out << "\n";
    return 2;
}

void emit_row_text(std::ostream& os, bool two_param, long c, long d,
                   long delta, const LaurentY& v) {
    if (two_param) os << std::setw(3) << c << "  ";
    os << std::setw(3) << d << "  " << std::setw(5) << delta << "  "
       << std::setw(10) << v.eval(EvalPoint::One).str() << "  "
       << std::setw(10) << v.eval(EvalPoint::MinusOne).str() << "  "
       << v.str() << "\n";
}

void emit_row_json(std::ostream& os, bool two_param, long c, long d,
                   long delta, const LaurentY& v) {
    nlohmann::json j = value_json(v);
    if (two_param) j["c"] = c;
    j["d"] = d;
    j["delta"] = delta;
    os << j.dump() << "\n";
}

void emit_table_header(std::ostream& os, bool two_param) {
    if (two_param) os << "  c  ";
    os << "  d  delta  " << std::setw(10) << "y1"
       << "  " << std::setw(10) << "ym1"
       << "  poly\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"refined curve counts on h-transverse polygons", "refsev"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string family = "p2";
    long max_c = 0, max_d = 3, max_delta = 2;
    long q_order = 3, t_order = 1, s_order = 0;
    std::string out_path;
    long max_diagrams = 50;
    bool marked = false;

    auto* compute = app.add_subcommand(
        "compute", "one refined count N^{polygon,delta}(y)");
    compute->add_option("--polygon", a.polygon, "polygon (preset or raw)")
        ->required();
    compute->add_option("--delta", a.delta, "cogenus")->required();
    compute->add_option("--method", a.method, "fock | floor | wick | all")
        ->check(CLI::IsMember({"fock", "floor", "wick", "all"}));
    compute->add_option("--eval", a.eval, "poly | y1 | ym1 (text output)")
        ->check(CLI::IsMember({"poly", "y1", "ym1"}));
    add_format_option(compute, a);
    add_perf_options(compute, a);

    auto* relative = app.add_subcommand(
        "relative", "refined count with bottom-edge tangency profile");
    relative->add_option("--polygon", a.polygon, "polygon (preset or raw)")
        ->required();
    relative->add_option("--delta", a.delta, "cogenus")->required();
    relative->add_option("--alpha", a.alpha,
                         "fixed contact orders, e.g. \"1,1\" or \"\"");
    relative->add_option("--beta", a.beta, "moving contact orders");
    relative->add_option("--method", a.method, "fock | floor | wick | all")
        ->check(CLI::IsMember({"fock", "floor", "wick", "all"}));
    relative->add_option("--eval", a.eval, "poly | y1 | ym1 (text output)")
        ->check(CLI::IsMember({"poly", "y1", "ym1"}));
    add_format_option(relative, a);
    add_perf_options(relative, a);

    auto* crosscheck = app.add_subcommand(
        "crosscheck", "compare every admissible method on one instance");
    crosscheck->add_option("--polygon", a.polygon, "polygon (preset or raw)")
        ->required();
    crosscheck->add_option("--delta", a.delta, "cogenus")->required();
    crosscheck->add_option("--alpha", a.alpha, "fixed contact orders");
    crosscheck->add_option("--beta", a.beta, "moving contact orders");
    crosscheck
        ->add_option("--method", a.method,
                     "kept for symmetry; crosscheck always runs all")
        ->check(CLI::IsMember({"all"}));
    add_format_option(crosscheck, a);
    add_perf_options(crosscheck, a);

    auto* table = app.add_subcommand(
        "table", "table of refined counts over a preset family");
    table->add_option("--family", family,
                      "p2 | sigma:m=M | wps11m:m=M | wps1mm:m=M");
    table->add_option("--max-d", max_d, "largest class degree");
    table->add_option("--max-c", max_c,
                      "largest second parameter (two-parameter families)");
    table->add_option("--max-delta", max_delta, "largest cogenus");
    add_format_option(table, a, "text | json (one JSON object per row)");
    add_perf_options(table, a);

    auto* irreducible = app.add_subcommand(
        "irreducible", "table of irreducible refined counts over a family");
    irreducible->add_option("--family", family,
                            "p2 | sigma:m=M | wps11m:m=M | wps1mm:m=M");
    irreducible->add_option("--max-d", max_d, "largest class degree");
    irreducible->add_option("--max-c", max_c,
                            "largest second parameter (two-parameter families)");
    irreducible->add_option("--max-delta", max_delta, "largest cogenus");
    add_format_option(irreducible, a,
                      "text | json (one JSON object per row)");
    add_perf_options(irreducible, a);

    auto* genfun = app.add_subcommand(
        "genfun-check",
        "verify counts against the operator-exponential generating series");
    genfun->add_option("--family", family,
                       "p2 | sigma:m=M | wps11m:m=M | wps1mm:m=M");
    genfun->add_option("--q-order", q_order, "exponential truncation order");
    genfun->add_option("--t-order", t_order, "class-size truncation order");
    genfun->add_option("--s-order", s_order,
                       "top-boundary order (two-parameter families)");
    add_format_option(genfun, a);
    add_perf_options(genfun, a);

    auto* info = app.add_subcommand("polygon-info",
                                    "lattice data of one polygon");
    info->add_option("--polygon", a.polygon, "polygon (preset or raw)")
        ->required();
    add_format_option(info, a);

    auto* render = app.add_subcommand(
        "render", "SVG gallery of the floor diagrams for one instance");
    render->add_option("--polygon", a.polygon, "polygon (preset or raw)")
        ->required();
    render->add_option("--delta", a.delta, "cogenus")->required();
    render->add_option("--out", out_path, "output SVG path")->required();
    render->add_option("--max-diagrams", max_diagrams,
                       "truncate the gallery after this many diagrams");
    render->add_flag("--marked", marked,
                     "draw one canonical marking per diagram");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::ostringstream buf;
    try {
        int code = 0;
        if (compute->parsed()) {
            code = emit_compute(buf, err, a, std::nullopt);
        } else if (relative->parsed()) {
            code = emit_compute(
                buf, err, a,
                std::make_pair(Partition::parse(a.alpha),
                               Partition::parse(a.beta)));
        } else if (crosscheck->parsed()) {
            std::optional<std::pair<Partition, Partition>> tangency;
            if (!a.alpha.empty() || !a.beta.empty())
                tangency = std::make_pair(Partition::parse(a.alpha),
                                          Partition::parse(a.beta));
            code = emit_crosscheck(buf, a, tangency);
        } else if (table->parsed()) {
            const auto fam = parse_family(family);
            const bool two = fam.two_parameter();
            const auto opts = options_of(a);
            if (a.format == "text") emit_table_header(buf, two);
            for (long c = 0; c <= (two ? max_c : 0); ++c) {
                for (long d = two ? 0 : 1; d <= max_d; ++d) {
                    if (c == 0 && d == 0) continue;
                    for (long delta = 0; delta <= max_delta; ++delta) {
                        LaurentY v;
                        try {
                            v = refined_severi(fam.polygon(c, d), delta, opts);
                        } catch (const GuardError& e) {
                            out << buf.str();
                            err << "warning: table truncated (" << e.what()
                                << ")\n";
                            return 1;
                        }
                        if (a.format == "json")
                            emit_row_json(buf, two, c, d, delta, v);
                        else
                            emit_row_text(buf, two, c, d, delta, v);
                    }
                }
            }
        } else if (irreducible->parsed()) {
            const auto fam = parse_family(family);
            const bool two = fam.two_parameter();
            std::vector<IrreducibleEntry> rows;
            try {
                rows = irreducible_degrees(fam, max_c, max_d, max_delta,
                                           options_of(a));
            } catch (const GuardError& e) {
                err << "warning: table unavailable (" << e.what() << ")\n";
                return 1;
            }
            if (a.format == "text") emit_table_header(buf, two);
            for (const auto& r : rows) {
                if (a.format == "json")
                    emit_row_json(buf, two, r.c, r.d, r.delta, r.value);
                else
                    emit_row_text(buf, two, r.c, r.d, r.delta, r.value);
            }
        } else if (genfun->parsed()) {
            const auto fam = parse_family(family);
            GenfunOrders orders;
            orders.q = q_order;
            orders.t = t_order;
            orders.s = s_order;
            const auto report = genfun_verify(fam, orders, options_of(a));
            if (a.format == "json") {
                nlohmann::json j{{"ok", report.ok},
                                 {"checked", report.coefficients_checked}};
                if (!report.ok) j["first_mismatch"] = report.first_mismatch;
                buf << j.dump() << "\n";
            } else if (report.ok) {
                buf << "checked " << report.coefficients_checked
                    << " coefficients: all match\n";
            } else {
                buf << "checked " << report.coefficients_checked
                    << " coefficients\nfirst mismatch: "
                    << report.first_mismatch << "\n";
            }
            out << buf.str();
            return report.ok ? 0 : 2;
        } else if (info->parsed()) {
            const auto p = parse_polygon(a.polygon);
            auto expand = [](const IntMultiset& m) {
                std::vector<long> v;
                for (const auto& [value, mult] : m.entries())
                    for (long i = 0; i < mult; ++i) v.push_back(value);
                return v;
            };
            if (a.format == "json") {
                nlohmann::json j{
                    {"d_top", p.d_top()},
                    {"d_bottom", p.d_bottom()},
                    {"right", expand(p.right())},
                    {"left", expand(p.left())},
                    {"height", p.height()},
                    {"row_widths", p.row_widths()},
                    {"lattice_points", p.lattice_point_count()},
                    {"interior_points", p.interior_point_count()},
                    {"dim_linear_system", p.dim_linear_system()}};
                buf << j.dump() << "\n";
            } else {
                buf << "polygon: " << p.str() << "\n";
                buf << "height: " << p.height() << "\n";
                buf << "row widths:";
                for (long w : p.row_widths()) buf << " " << w;
                buf << "\nlattice points: " << p.lattice_point_count() << "\n";
                buf << "interior points: " << p.interior_point_count() << "\n";
                buf << "dim linear system: " << p.dim_linear_system() << "\n";
            }
        } else if (render->parsed()) {
            const auto p = parse_polygon(a.polygon);
            const auto svg = render_floor_diagrams_svg(
                p, a.delta, RenderOptions{max_diagrams, marked});
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw DomainError("cannot write file: " + out_path);
            f << svg;
            if (!f.good())
                throw DomainError("cannot write file: " + out_path);
            const size_t n = enumerate_floor_diagrams(p, a.delta).size();
            const size_t shown =
                max_diagrams < 0
                    ? n
                    : std::min(n, static_cast<size_t>(max_diagrams));
            buf << "wrote " << shown << " diagram" << (shown == 1 ? "" : "s")
                << " to " << out_path << "\n";
        }
        out << buf.str();
        return code;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace refsev::cli
