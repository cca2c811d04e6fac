#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gasp/cli.hpp"
#include "gasp/errors.hpp"
#include "gasp/solver.hpp"

namespace gasp::cli {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += fmt(v[i]);
    }
    return s;
}

// Rows are written as CSV or as "key=value" lines separated by blank lines.
class Table {
public:
    Table(std::ostream& out, Format f, std::vector<std::string> cols) : out_(out), f_(f), cols_(std::move(cols)) {
        if (f_ == Format::Csv) {
            for (std::size_t i = 0; i < cols_.size(); ++i) out_ << (i ? "," : "") << cols_[i];
            out_ << '\n';
        }
    }
    void row(const std::vector<std::string>& cells) {
        if (f_ == Format::Csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
            out_ << '\n';
        } else {
            for (std::size_t i = 0; i < cells.size(); ++i) out_ << cols_[i] << '=' << cells[i] << '\n';
            out_ << '\n';
        }
    }

private:
    std::ostream& out_;
    Format f_;
    std::vector<std::string> cols_;
};

BoundaryData make_data(const RunConfig& cfg, const EllipticParams& ep) {
    const DataFamily d = cfg.data;
    const int n = ep.n();
    BoundaryData bd;
    BoundaryFunction f;
    if (d.kind == "constant") {
        f = [v = d.value](const Point&) { return v; };
    } else if (d.kind == "polynomial") {
        f = [terms = d.terms, n](const Point& x) {
            double s = 0.0;
            for (const PolyTerm& t : terms) {
                double v = t.coef;
                for (std::size_t i = 0; i < t.powers.size(); ++i) v *= std::pow(x[n + i], t.powers[i]);
                s += v;
            }
            return s;
        };
    } else {
        // the trace of q_n on every face vanishes
        for (int k = 0; k < n; ++k) bd.tau.push_back([](const Point&) { return 0.0; });
        bd.phi = [ep, pole = d.pole, ctl = cfg.ctl](const Point& x) {
            return fundamental_solution(ep, x, pole, ctl);
        };
        return bd;
    }
    for (int k = 0; k < n; ++k) bd.tau.push_back(f);
    bd.phi = f;
    return bd;
}

std::string ctl_cells(const SeriesControl& c) {
    return fmt(c.rel_tol) + "," + std::to_string(c.max_terms_per_axis) + "," + std::to_string(c.max_total_terms);
}

void run_eval_fa(const RunConfig& cfg, std::ostream& out) {
    Table t(out, cfg.format,
            {"a", "b", "c", "z", "method", "value", "abs_error_estimate", "terms_used", "converged", "rel_tol",
             "max_terms_per_axis", "max_total_terms"});
    for (std::size_t i = 0; i < cfg.fa_points.size(); ++i) {
        const FaPoint& f = cfg.fa_points[i];
        LauricellaParams p{f.a, f.b, f.c};
        std::string method = cfg.fa_method;
        if (method == "auto") {
            double s = 0.0;
            for (double v : f.z) s += std::fabs(v);
            method = s < 0.5 ? "direct" : "decomposed";
        }
        EvalResult r;
        try {
            r = method == "direct" ? lauricella_fa_direct(p, f.z, cfg.ctl) : lauricella_fa_decomposed(p, f.z, cfg.ctl);
        } catch (const std::exception& e) {
            throw std::runtime_error("eval-fa point " + std::to_string(i) + " (a=" + fmt(f.a) + " b=" + join(f.b) +
                                     " c=" + join(f.c) + " z=" + join(f.z) + "): " + e.what());
        }
        t.row({fmt(f.a), join(f.b), join(f.c), join(f.z), method, fmt(r.value), fmt(r.abs_error_estimate),
               std::to_string(r.terms_used), r.converged ? "true" : "false", fmt(cfg.ctl.rel_tol),
               std::to_string(cfg.ctl.max_terms_per_axis), std::to_string(cfg.ctl.max_total_terms)});
    }
}

void run_eval_q(const RunConfig& cfg, std::ostream& out) {
    const EllipticParams ep(cfg.m, cfg.alpha);
    Table t(out, cfg.format,
            {"m", "alpha", "R", "x", "xi", "q", "G", "kernel_axis", "G_k_star", "rel_tol", "max_terms_per_axis",
             "max_total_terms"});
    for (std::size_t i = 0; i < cfg.q_pairs.size(); ++i) {
        const QPair& pr = cfg.q_pairs[i];
        std::string q, g, axis, gk;
        try {
            q = fmt(fundamental_solution(ep, pr.x, pr.xi, cfg.ctl));
            double x2 = 0.0, xi2 = 0.0;
            for (double v : pr.x) x2 += v * v;
            for (double v : pr.xi) xi2 += v * v;
            const bool in_x = x2 <= cfg.R * cfg.R, in_xi = xi2 < cfg.R * cfg.R;
            if (in_x && in_xi) g = fmt(green(ep, pr.x, pr.xi, cfg.R, cfg.ctl));
            for (int k = 0; k < ep.n(); ++k)
                if (pr.x[k] == 0.0 && in_x && in_xi) {
                    axis = std::to_string(k + 1);
                    gk = fmt(boundary_kernel(ep, k, pr.x, pr.xi, cfg.R, cfg.ctl));
                    break;
                }
        } catch (const std::exception& e) {
            throw std::runtime_error("eval-q pair " + std::to_string(i) + " (x=" + join(pr.x) + " xi=" + join(pr.xi) +
                                     "): " + e.what());
        }
        t.row({std::to_string(cfg.m), join(cfg.alpha), fmt(cfg.R), join(pr.x), join(pr.xi), q, g, axis, gk,
               fmt(cfg.ctl.rel_tol), std::to_string(cfg.ctl.max_terms_per_axis),
               std::to_string(cfg.ctl.max_total_terms)});
    }
}

void run_solve(const RunConfig& cfg, std::ostream& out) {
    const EllipticParams ep(cfg.m, cfg.alpha);
    DirichletProblem p{HalfBallDomain{cfg.R, ep}, make_data(cfg, ep), cfg.level.value_or(default_level(cfg.m)),
                       cfg.ctl};
    const std::vector<double> u = solve_grid(p, cfg.probes);
    std::string family = cfg.data.kind;
    if (cfg.data.kind == "constant") family += ":" + fmt(cfg.data.value);
    if (cfg.data.kind == "exterior-pole") family += ":" + join(cfg.data.pole);
    if (cfg.data.kind == "polynomial") {
        for (const PolyTerm& t : cfg.data.terms) {
            family += ":" + fmt(t.coef);
            for (int e : t.powers) family += "^" + std::to_string(e);
        }
    }
    Table t(out, cfg.format,
            {"m", "alpha", "R", "data", "level", "rel_tol", "max_terms_per_axis", "max_total_terms", "probe", "u",
             "reference"});
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::string ref;
        if (cfg.data.kind == "constant") ref = fmt(cfg.data.value);
        if (cfg.data.kind == "exterior-pole") ref = fmt(fundamental_solution(ep, cfg.probes[i], cfg.data.pole, cfg.ctl));
        t.row({std::to_string(cfg.m), join(cfg.alpha), fmt(cfg.R), family, std::to_string(p.level),
               fmt(cfg.ctl.rel_tol), std::to_string(cfg.ctl.max_terms_per_axis),
               std::to_string(cfg.ctl.max_total_terms), join(cfg.probes[i]), fmt(u[i]), ref});
    }
}

bool run_verify(const RunConfig& cfg, std::ostream& out) {
    const auto results = verify_suites(cfg.suite, cfg.seed);
    bool ok = true;
    if (cfg.format == Format::Csv) out << "suite,property,status,measured,tolerance\n";
    for (const PropertyResult& r : results) {
        ok = ok && r.pass;
        if (cfg.format == Format::Csv)
            out << r.suite << ',' << r.property << ',' << (r.pass ? "pass" : "FAIL") << ',' << fmt(r.measured) << ','
                << fmt(r.tolerance) << '\n';
        else
            out << (r.pass ? "pass " : "FAIL ") << r.suite << '.' << r.property << " measured=" << fmt(r.measured)
                << " tolerance=" << fmt(r.tolerance) << '\n';
    }
    out << (cfg.format == Format::Csv ? "# " : "") << "seed=" << cfg.seed << " suite=" << cfg.suite
        << " result=" << (ok ? "pass" : "FAIL") << '\n';
    return ok;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out) {
    switch (cfg.mode) {
        case Mode::EvalFa: run_eval_fa(cfg, out); return 0;
        case Mode::EvalQ: run_eval_q(cfg, out); return 0;
        case Mode::Solve: run_solve(cfg, out); return 0;
        case Mode::Verify: return run_verify(cfg, out) ? 0 : 1;
    }
    return 1;
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Dirichlet problem for elliptic equations with singular coefficients in a half-ball"};
    app.require_subcommand(1);

    std::string config, out_path, format, suite;
    std::optional<int> level;
    std::optional<double> rel_tol;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config, "configuration file");
        sub->add_option("--out", out_path, "output file (default: standard output)");
        sub->add_option("--format", format, "csv or report")->check(CLI::IsMember({"csv", "report"}));
        sub->add_option("--level", level, "quadrature level");
        sub->add_option("--rel-tol", rel_tol, "series relative tolerance");
        sub->add_option("--seed", seed, "seed for randomized property suites");
    };
    CLI::App* fa = app.add_subcommand("eval-fa", "evaluate the Lauricella function F_A");
    CLI::App* q = app.add_subcommand("eval-q", "evaluate the fundamental solution, Green's function and face kernels");
    CLI::App* solve = app.add_subcommand("solve", "solve a Dirichlet problem at probe points");
    CLI::App* verify = app.add_subcommand("verify", "run the property suites");
    for (CLI::App* s : {fa, q, solve, verify}) add_common(s);
    verify->add_option("--suite", suite, "all, hyperfun, kernel, domain, solver or oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Mode mode = fa->parsed() ? Mode::EvalFa : q->parsed() ? Mode::EvalQ : solve->parsed() ? Mode::Solve : Mode::Verify;
    RunConfig cfg;
    try {
        if (!config.empty()) {
            cfg = load_config(config, mode);
        } else {
            cfg = parse_config("{}", mode);
        }
        if (!out_path.empty()) cfg.out_path = out_path;
        if (format == "csv") cfg.format = Format::Csv;
        if (format == "report") cfg.format = Format::Report;
        if (level) cfg.level = *level;
        if (rel_tol) cfg.ctl.rel_tol = *rel_tol;
        if (seed) cfg.seed = *seed;
        if (!suite.empty()) cfg.suite = suite;
        validate(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    // results are buffered so a failing run leaves no partial output file
    std::ostringstream buf;
    int status = 0;
    try {
        status = run(cfg, buf);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    if (cfg.out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write '" << cfg.out_path << "'\n";
            return 1;
        }
        f << buf.str();
    }
    return status;
}

}  // namespace gasp::cli
