#include "blochnorm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blochnorm/constants.hpp"
#include "blochnorm/monte_carlo.hpp"
#include "blochnorm/quadrature.hpp"
#include "blochnorm/series.hpp"
#include "blochnorm/validation.hpp"

namespace blochnorm::cli {

namespace {

// 15 significant digits everywhere, so reruns diff byte-for-byte.
std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string json_num(double v) {
    if (std::isnan(v)) return "null";
    return fmt15(v);
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else {
            out.push_back(c);
        }
    }
    return out;
}

Method parse_method(const std::string& name) {
    if (name == "series") return Method::series;
    if (name == "double-series") return Method::double_series;
    if (name == "quad2d") return Method::quad2d;
    if (name == "mc") return Method::mc;
    throw CLI::ValidationError("--method", "unknown method '" + name +
                                               "' (expected series|double-series|quad2d|mc)");
}

bool wants(const RunConfig& cfg, Method m) {
    return std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end();
}

struct EvalCell {
    double value = std::nan("");
    double err = std::nan("");
};

EvalCell eval_method(const RunConfig& cfg, Method m, double t) {
    EvalCell cell;
    switch (m) {
        case Method::series: {
            if (t == 0.0) {
                cell.value = series::l_limit_zero(cfg.p);
                cell.err = 0.0;
            } else {
                const SeriesResult r = series::l_series(cfg.p, t, cfg.tol, cfg.max_terms);
                if (!r.converged)
                    throw std::runtime_error("l_series did not converge within max_terms");
                cell.value = r.value;
                cell.err = r.tail_bound;
            }
            break;
        }
        case Method::double_series: {
            const SeriesResult r = series::l_double_series(cfg.p, t, cfg.tol, cfg.max_terms);
            if (!r.converged)
                throw std::runtime_error("l_double_series did not converge within max_terms");
            cell.value = r.value;
            cell.err = r.tail_bound;
            break;
        }
        case Method::quad2d: {
            const NormConstants c = compute_constants(cfg.p);
            const QuadResult r = quad::quad_I_2d(cfg.p, t, std::max(cfg.tol, 1e-9));
            const double chain =
                std::exp(std::log(cfg.p.npa() + 1.0) + c.log_c_alpha + c.log_k_alpha);
            cell.value = chain * r.value;
            cell.err = chain * r.error_estimate;
            break;
        }
        case Method::mc: {
            const QuadResult r = mc::mc_l_full(cfg.p, t, {cfg.samples, cfg.seed, 65536});
            cell.value = r.value;
            cell.err = r.std_error;
            break;
        }
    }
    return cell;
}

int cmd_constants(const RunConfig& cfg, std::ostream& os) {
    const NormConstants c = compute_constants(cfg.p);
    const std::pair<const char*, double> rows[] = {
        {"c_alpha", c.c_alpha},         {"k_alpha", c.k_alpha},
        {"C_alpha", c.C_alpha},         {"C_tilde", c.C_tilde},
        {"bloch_norm", c.bloch_norm},   {"bound_low", c.bound_low},
        {"bound_high", c.bound_high},   {"log_c_alpha", c.log_c_alpha},
        {"log_k_alpha", c.log_k_alpha}, {"log_C_alpha", c.log_C_alpha},
    };
    if (cfg.format == Format::json) {
        os << "{";
        bool first = true;
        for (const auto& [k, v] : rows) {
            os << (first ? "" : ",") << "\"" << k << "\":" << json_num(v);
            first = false;
        }
        os << "}\n";
    } else {
        for (const auto& [k, v] : rows) os << k << "=" << fmt15(v) << "\n";
    }
    return kExitOk;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::double_series: return "double-series";
        case Method::quad2d: return "quad2d";
        case Method::mc: return "mc";
    }
    return "?";
}

int cmd_eval(const RunConfig& cfg, std::ostream& os) {
    const Method m = cfg.methods.empty() ? Method::series : cfg.methods.front();
    const EvalCell cell = eval_method(cfg, m, cfg.t);
    if (cfg.format == Format::json) {
        os << "{\"t\":" << fmt15(cfg.t) << ",\"method\":\"" << method_name(m)
           << "\",\"value\":" << json_num(cell.value) << ",\"error_bound\":" << json_num(cell.err)
           << "}\n";
    } else {
        os << "t,method,value,error_bound\n";
        os << fmt15(cfg.t) << "," << method_name(m) << "," << fmt15(cell.value) << ","
           << fmt15(cell.err) << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& os) {
    const bool s = wants(cfg, Method::series);
    const bool d = wants(cfg, Method::double_series);
    const bool q = wants(cfg, Method::quad2d);
    const bool m = wants(cfg, Method::mc);

    struct Row {
        double t;
        EvalCell series, dbl, quad, mc;
    };
    std::vector<Row> rows;
    for (int i = 0; i < cfg.grid; ++i) {
        Row row;
        row.t = (M_PI / 2.0) * (i + 1) / cfg.grid;
        if (i + 1 == cfg.grid) row.t = M_PI / 2.0;
        if (s) row.series = eval_method(cfg, Method::series, row.t);
        if (d) {
            const double x = std::cos(row.t) * std::cos(row.t);
            if (x <= 0.999) row.dbl = eval_method(cfg, Method::double_series, row.t);
        }
        if (q) row.quad = eval_method(cfg, Method::quad2d, row.t);
        if (m) row.mc = eval_method(cfg, Method::mc, row.t);
        rows.push_back(row);
    }

    if (cfg.format == Format::json) {
        os << "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Row& r = rows[i];
            os << (i ? ",\n" : "\n") << "{\"t\":" << fmt15(r.t);
            if (s) os << ",\"l_series\":" << json_num(r.series.value);
            if (d) os << ",\"l_double_series\":" << json_num(r.dbl.value);
            if (q) os << ",\"l_quad2d\":" << json_num(r.quad.value);
            if (m)
                os << ",\"l_mc\":" << json_num(r.mc.value)
                   << ",\"mc_stderr\":" << json_num(r.mc.err);
            os << "}";
        }
        os << "\n]\n";
    } else {
        os << "t";
        if (s) os << ",l_series";
        if (d) os << ",l_double_series";
        if (q) os << ",l_quad2d";
        if (m) os << ",l_mc,mc_stderr";
        os << "\n";
        for (const Row& r : rows) {
            os << fmt15(r.t);
            if (s) os << "," << fmt15(r.series.value);
            if (d) os << "," << fmt15(r.dbl.value);
            if (q) os << "," << fmt15(r.quad.value);
            if (m) os << "," << fmt15(r.mc.value) << "," << fmt15(r.mc.err);
            os << "\n";
        }
    }
    return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& os) {
    validation::ValidateConfig vcfg;
    vcfg.p = cfg.p;
    vcfg.samples = cfg.samples;
    vcfg.seed = cfg.seed;
    const auto results = validation::run_all(vcfg);
    std::size_t passed = 0;
    if (cfg.format == Format::json) {
        os << "[";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            if (r.pass) ++passed;
            os << (i ? ",\n" : "\n") << "{\"check\":\"" << json_escape(r.name) << "\",\"status\":\""
               << (r.pass ? "pass" : "fail") << "\",\"detail\":\"" << json_escape(r.detail)
               << "\"}";
        }
        os << "\n]\n";
    } else {
        for (const auto& r : results) {
            if (r.pass) ++passed;
            os << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        }
        os << passed << "/" << results.size() << " checks passed\n";
    }
    return passed == results.size() ? kExitOk : kExitValidation;
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& err) {
    ParseOutcome out;
    CLI::App app{"Bloch-seminorm of the weighted Bergman projection: constants, the extremal "
                 "function l(t) by four methods, grid sweeps, and a self-validation suite"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method_arg = "series";
    std::string format_arg = "csv";

    auto add_common = [&](CLI::App* sub, bool with_method) {
        sub->add_option("--n", cfg.p.n, "complex dimension (>= 2)")
            ->check(CLI::Range(2, 1000000).description("n must be >= 2"));
        sub->add_option("--alpha", cfg.p.alpha, "weight exponent (> -1)")
            ->check(CLI::Range(std::nextafter(-1.0, 0.0), 1e9).description("alpha must be > -1"));
        sub->add_option("--tol", cfg.tol, "relative tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--max-terms", cfg.max_terms, "series term budget");
        sub->add_option("--samples", cfg.samples, "Monte Carlo sample count")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Monte Carlo seed");
        sub->add_option("--format", format_arg, "output format (csv|json)")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out, "write the report to a file instead of stdout");
        if (with_method)
            sub->add_option("--method", method_arg,
                            "evaluation method(s): series|double-series|quad2d|mc; "
                            "sweep accepts a comma-separated list");
    };

    CLI::App* c_const = app.add_subcommand("constants", "closed-form norm constants");
    add_common(c_const, false);
    CLI::App* c_eval = app.add_subcommand("eval", "evaluate l(t) by one method");
    add_common(c_eval, true);
    c_eval->add_option("--t", cfg.t, "angle t in radians, in [0, pi/2]")
        ->required()
        ->check(CLI::Range(0.0, M_PI / 2.0).description("t must lie in [0, pi/2]"));
    CLI::App* c_sweep = app.add_subcommand("sweep", "emit l(t) over a t-grid");
    add_common(c_sweep, true);
    c_sweep->add_option("--grid", cfg.grid, "number of grid points")
        ->check(CLI::Range(1, 100000000));
    CLI::App* c_validate = app.add_subcommand("validate", "run the full invariant suite");
    add_common(c_validate, false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        err << app.help();
        out.ok = false;
        out.exit_code = kExitOk;
        return out;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        out.ok = false;
        out.exit_code = kExitUsage;
        return out;
    }

    try {
        cfg.p.validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        out.ok = false;
        out.exit_code = kExitUsage;
        return out;
    }

    if (c_const->parsed()) cfg.cmd = Command::constants;
    if (c_eval->parsed()) cfg.cmd = Command::eval;
    if (c_sweep->parsed()) cfg.cmd = Command::sweep;
    if (c_validate->parsed()) cfg.cmd = Command::validate;
    cfg.format = (format_arg == "json") ? Format::json : Format::csv;

    cfg.methods.clear();
    std::stringstream ss(method_arg);
    std::string tok;
    try {
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) cfg.methods.push_back(parse_method(tok));
        }
        if (cfg.methods.empty()) cfg.methods.push_back(Method::series);
        if (cfg.cmd == Command::eval && cfg.methods.size() != 1)
            throw CLI::ValidationError("--method", "eval takes exactly one method");
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        out.ok = false;
        out.exit_code = kExitUsage;
        return out;
    }

    out.ok = true;
    out.cfg = cfg;
    return out;
}

int run_command(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &os;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file '" << cfg.out << "'\n";
            return kExitComputation;
        }
        sink = &file;
    }
    try {
        switch (cfg.cmd) {
            case Command::constants: return cmd_constants(cfg, *sink);
            case Command::eval: return cmd_eval(cfg, *sink);
            case Command::sweep: return cmd_sweep(cfg, *sink);
            case Command::validate: return cmd_validate(cfg, *sink);
        }
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitComputation;
}

int run_cli(const std::vector<std::string>& args, std::ostream& os, std::ostream& err) {
    const ParseOutcome parsed = parse_args(args, err);
    if (!parsed.ok) return parsed.exit_code;
    return run_command(parsed.cfg, os, err);
}

}  // namespace blochnorm::cli
