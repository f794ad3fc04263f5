#include "fig8/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fig8/errors.hpp"
#include "fig8/io.hpp"
#include "fig8/riley.hpp"
#include "fig8/torsion_formulas.hpp"
#include "fig8/verify.hpp"

namespace fig8::cli {

namespace {

OutputFormat parse_format(const std::string& s) {
    if (s == "pretty") return OutputFormat::pretty;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw ParseError("unknown format '" + s + "' (expected json, csv or pretty)");
}

std::vector<double> parse_radii(const std::string& text) {
    std::vector<double> radii;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const Cx r = io::parse_complex(part);
        if (r.imag() != 0.0 || !(r.real() > 0.0)) throw ParseError("grid radius must be positive: " + part);
        radii.push_back(r.real());
    }
    if (radii.empty()) throw ParseError("empty --grid-circles");
    return radii;
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw ParseError(std::string(name) + " must be positive");
}

// Flags shared by every subcommand. Values land here and are applied on top
// of the config file only if they were given.
struct CommonFlags {
    std::string config_path;
    double tol_variety = 0, tol_compare = 0, tol_degenerate = 0, solver_tol = 0;
    std::string grid_circles;
    int grid_angles = 0;
    int max_iterations = 0;
    std::string format;
    std::uint64_t seed = 0;

    std::vector<CLI::Option*> opts;

    void attach(CLI::App& sub) {
        sub.add_option("--config", config_path, "JSON config file (flags override it)");
        opts = {
            sub.add_option("--tol-variety", tol_variety, "variety membership tolerance"),
            sub.add_option("--tol-compare", tol_compare, "relative tolerance between two routes"),
            sub.add_option("--tol-degenerate", tol_degenerate, "threshold on |u^2 (u^2 - 5)|"),
            sub.add_option("--solver-tol", solver_tol, "surgery solver residual bound"),
            sub.add_option("--grid-circles", grid_circles, "seed circle radii, comma separated"),
            sub.add_option("--grid-angles", grid_angles, "seeds per circle"),
            sub.add_option("--max-iterations", max_iterations, "Newton iteration cap"),
            sub.add_option("--format", format, "json | csv | pretty"),
            sub.add_option("--seed", seed, "random seed for verification sampling"),
        };
    }

    RunConfig resolve() const {
        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config_file(config_path);
        if (opts[0]->count()) cfg.tol.variety = tol_variety;
        if (opts[1]->count()) cfg.tol.compare = tol_compare;
        if (opts[2]->count()) cfg.tol.degenerate = tol_degenerate;
        if (opts[3]->count()) cfg.solver.tol = solver_tol;
        if (opts[4]->count()) cfg.solver.grid.radii = parse_radii(grid_circles);
        if (opts[5]->count()) cfg.solver.grid.angles = grid_angles;
        if (opts[6]->count()) cfg.solver.max_iterations = max_iterations;
        if (opts[7]->count()) cfg.format = parse_format(format);
        if (opts[8]->count()) cfg.seed = seed;
        require_positive(cfg.tol.variety, "tol_variety");
        require_positive(cfg.tol.compare, "tol_compare");
        require_positive(cfg.tol.degenerate, "tol_degenerate");
        require_positive(cfg.solver.tol, "solver_tol");
        if (cfg.solver.grid.angles <= 0) throw ParseError("grid_angles must be positive");
        if (cfg.solver.max_iterations <= 0) throw ParseError("max_iterations must be positive");
        return cfg;
    }
};

void print_point_row(std::ostream& out, const RileyPoint& p) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-7s %-40s %.3e\n", branch_symbol(p.branch), io::format_complex(p.t).c_str(),
                  p.residual);
    out << buf;
}

int cmd_riley(const RunConfig& cfg, Cx s, std::ostream& out) {
    const auto pair = solve_t(s);
    switch (cfg.format) {
    case OutputFormat::json:
        out << io::Json::array({io::to_json(pair.plus), io::to_json(pair.minus)}).dump(2) << '\n';
        break;
    case OutputFormat::csv:
        out << "s_re,s_im,t_re,t_im,branch,residual\n";
        for (const auto& p : {pair.plus, pair.minus})
            out << io::format_real(p.s.real()) << ',' << io::format_real(p.s.imag()) << ','
                << io::format_real(p.t.real()) << ',' << io::format_real(p.t.imag()) << ',' << branch_symbol(p.branch)
                << ',' << io::format_real(p.residual) << '\n';
        break;
    case OutputFormat::pretty:
        out << "s = " << io::format_complex(s) << "    u = s + 1/s = " << io::format_complex(trace_u(s).value) << '\n';
        out << "branch  t                                        |R12|\n";
        print_point_row(out, pair.plus);
        print_point_row(out, pair.minus);
        if (pair.coincident) out << "note: the two branches coincide (double root)\n";
        break;
    }
    return kSuccess;
}

std::string describe(const TorsionEntry& e) {
    if (e.ok()) return io::format_complex(e.value) + (e.sign_ambiguous ? "  (up to sign)" : "");
    return std::string(status_name(e.status)) + (e.note.empty() ? "" : " (" + e.note + ")");
}

int cmd_torsion(const RunConfig& cfg, Cx s, Branch branch, std::ostream& out) {
    const auto pair = solve_t(s);
    const auto report = full_report(branch == Branch::plus ? pair.plus : pair.minus, cfg.tol);
    switch (cfg.format) {
    case OutputFormat::json: out << io::to_json(report).dump(2) << '\n'; break;
    case OutputFormat::csv: out << io::torsion_csv_header() << '\n' << io::torsion_csv_row(report) << '\n'; break;
    case OutputFormat::pretty: {
        const auto& p = report.point;
        out << "point             s = " << io::format_complex(p.s) << "  t = " << io::format_complex(p.t)
            << "  branch " << branch_symbol(p.branch) << "  |R12| = " << p.residual << '\n';
        out << "u = tr rho(x)     " << io::format_complex(report.u) << '\n';
        out << "tr rho(l)         " << io::format_complex(report.trace_longitude) << '\n';
        out << "tau(E(K)) closed  " << describe(report.tau_exterior_closed) << '\n';
        out << "tau(E(K)) oracle  " << describe(report.tau_exterior_oracle) << '\n';
        out << "tau(E(K)) ratio   " << describe(report.tau_exterior_ratio) << '\n';
        out << "tau(N) u-form     " << describe(report.tau_solid_closed) << '\n';
        out << "tau(N) trace      " << describe(report.tau_solid_trace) << '\n';
        out << "tau(N) circle     " << describe(report.tau_solid_circle) << '\n';
        out << "tau(M) theorem    " << describe(report.tau_surgered) << '\n';
        const auto& f = report.flags;
        out << "checks            exterior_oracle_vs_closed=" << check_name(f.exterior_oracle_vs_closed)
            << " oracle_ratio_vs_chain=" << check_name(f.oracle_ratio_vs_chain)
            << " solid_trace_vs_closed=" << check_name(f.solid_trace_vs_closed)
            << " solid_trace_vs_circle=" << check_name(f.solid_trace_vs_circle)
            << " product_vs_theorem=" << check_name(f.product_vs_theorem)
            << " oracle_product_vs_theorem=" << check_name(f.oracle_product_vs_theorem) << '\n';
        if (report.degenerate)
            out << "==> degenerate: u^2 (u^2 - 5) = 0, tau(M) omitted\n";
        else if (report.tau_manifold.status == EntryStatus::not_acyclic)
            out << "==> tau(M) = 0  (non-acyclic: " << report.tau_manifold.note << ")\n";
        else
            out << "==> tau(M) = " << io::format_complex(report.tau_manifold.value) << '\n';
        out << "consistency: " << (f.all_pass() ? "all checks pass" : "CHECK FAILED") << '\n';
        break;
    }
    }
    return kSuccess;
}

int cmd_surgery(const RunConfig& cfg, int p, int q, std::ostream& out) {
    const auto table = surgery_table(make_slope(p, q), cfg.solver);
    switch (cfg.format) {
    case OutputFormat::json: out << io::to_json(table).dump(2) << '\n'; break;
    case OutputFormat::csv: io::write_surgery_csv(out, table); break;
    case OutputFormat::pretty: {
        char buf[512];
        std::snprintf(buf, sizeof buf, "%-3s %-34s %-34s %-34s %-34s %-34s %-9s %-9s %s\n", "br", "s", "u",
                      "tr rho(l)", "lambda", "tau(M)", "res_var", "res_rel", "flags");
        out << buf;
        for (const auto& s : table.solutions) {
            std::string flags;
            for (const auto& f : solution_flags(s)) flags += (flags.empty() ? "" : ";") + f;
            std::snprintf(buf, sizeof buf, "%-3s %-34s %-34s %-34s %-34s %-34s %-9.2e %-9.2e %s\n",
                          branch_symbol(s.point.branch), io::format_complex(s.point.s).c_str(),
                          io::format_complex(s.u).c_str(), io::format_complex(s.trace_longitude).c_str(),
                          io::format_complex(s.lambda).c_str(),
                          s.torsion ? io::format_complex(*s.torsion).c_str() : "-", s.variety_residual,
                          s.relation_residual, flags.c_str());
            out << buf;
        }
        out << "# slope " << p << "/" << q << ": " << table.seeds << " seeds, " << table.solutions.size()
            << " characters, " << table.failures.size() << " seeds did not yield a solution\n";
        break;
    }
    }
    return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions options;
    options.samples = cfg.samples;
    options.seed = cfg.seed;
    options.tol = cfg.tol;
    options.solver = cfg.solver;
    const auto outcomes = run_verification(options);
    if (cfg.format == OutputFormat::json) {
        io::Json arr = io::Json::array();
        for (const auto& c : outcomes)
            arr.push_back(io::Json{{"name", c.name},
                                   {"passed", c.passed},
                                   {"max_residual", c.max_residual},
                                   {"threshold", c.threshold},
                                   {"cases", c.cases}});
        out << arr.dump(2) << '\n';
    } else {
        print_verification(out, outcomes);
    }
    return all_passed(outcomes) ? kSuccess : kVerificationFailed;
}

Branch parse_branch(const std::string& s) {
    if (s == "+" || s == "plus") return Branch::plus;
    if (s == "-" || s == "minus") return Branch::minus;
    throw ParseError("branch must be + or -");
}

} // namespace

RunConfig load_config_file(const std::string& path, RunConfig cfg) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file " + path);
    io::Json j;
    try {
        j = io::Json::parse(in);
        for (const auto& [key, value] : j.items()) {
            if (key == "tol_variety") cfg.tol.variety = value.get<double>();
            else if (key == "tol_compare") cfg.tol.compare = value.get<double>();
            else if (key == "tol_degenerate") cfg.tol.degenerate = value.get<double>();
            else if (key == "solver_tol") cfg.solver.tol = value.get<double>();
            else if (key == "grid_circles") cfg.solver.grid.radii = value.get<std::vector<double>>();
            else if (key == "grid_angles") cfg.solver.grid.angles = value.get<int>();
            else if (key == "max_iterations") cfg.solver.max_iterations = value.get<int>();
            else if (key == "format") cfg.format = parse_format(value.get<std::string>());
            else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
            else if (key == "samples") cfg.samples = value.get<std::size_t>();
            else throw ParseError("unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config file: ") + e.what());
    }
    return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SL(2,C) representations and Reidemeister torsion of Dehn surgeries on the figure-eight knot",
                 args.empty() ? "fig8" : args.front()};
    app.require_subcommand(1);

    std::string s_text, branch_text = "+";
    int p = 0, q = 0;
    std::size_t samples = 200;

    CommonFlags riley_flags, torsion_flags, surgery_flags, verify_flags;

    auto* riley = app.add_subcommand("riley", "solve R12(s, t) = 0 for t at a given s, both branches");
    riley->add_option("--s", s_text, "s as re,im")->required();
    riley_flags.attach(*riley);

    auto* torsion = app.add_subcommand("torsion", "all torsion quantities at a variety point");
    torsion->add_option("--s", s_text, "s as re,im")->required();
    torsion->add_option("--branch", branch_text, "t-branch: + or -");
    torsion_flags.attach(*torsion);

    auto* surgery = app.add_subcommand("surgery", "characters extending over p/q surgery, with torsion");
    surgery->add_option("--p", p, "surgery numerator")->required();
    surgery->add_option("--q", q, "surgery denominator")->required();
    surgery_flags.attach(*surgery);

    auto* verify = app.add_subcommand("verify", "run the self-verification suite");
    auto* samples_opt = verify->add_option("--samples", samples, "random variety points");
    verify_flags.attach(*verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsage;
    }

    try {
        if (riley->parsed()) {
            const auto cfg = riley_flags.resolve();
            return cmd_riley(cfg, io::parse_complex(s_text), out);
        }
        if (torsion->parsed()) {
            const auto cfg = torsion_flags.resolve();
            return cmd_torsion(cfg, io::parse_complex(s_text), parse_branch(branch_text), out);
        }
        if (surgery->parsed()) {
            const auto cfg = surgery_flags.resolve();
            return cmd_surgery(cfg, p, q, out);
        }
        auto cfg = verify_flags.resolve();
        if (samples_opt->count()) cfg.samples = samples;
        return cmd_verify(cfg, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

} // namespace fig8::cli
