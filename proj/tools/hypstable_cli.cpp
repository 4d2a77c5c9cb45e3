#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypstable/fluctuation.hpp"
#include "hypstable/model.hpp"
#include "hypstable/passage.hpp"
#include "hypstable/precision.hpp"
#include "hypstable/quadrature.hpp"
#include "hypstable/sim.hpp"
#include "hypstable/specfun.hpp"
#include "hypstable/table.hpp"

namespace {

using hypstable::DistributionTable;
using hypstable::EvalPrecision;
using hypstable::ProcessParams;

struct Check {
    std::string name;
    double expected;
    double observed;
    double tolerance;
    bool pass;
};

struct RunReport {
    std::string command;
    std::vector<Check> checks;
    double wall_ms = 0.0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(const std::string& name, double expected, double observed,
             double tol) {
        bool pass = std::isfinite(observed) &&
                    std::abs(observed - expected) <= tol;
        checks.push_back({name, expected, observed, tol, pass});
    }

    std::string to_json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["status"] = all_pass() ? "pass" : "fail";
        j["wall_ms"] = wall_ms;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.name;
            cj["expected"] = c.expected;
            cj["observed"] = c.observed;
            cj["tolerance"] = c.tolerance;
            cj["pass"] = c.pass;
            j["checks"].push_back(cj);
        }
        return j.dump(2) + "\n";
    }
};

std::vector<double> parse_grid(const std::string& spec) {
    double lo, hi;
    int n;
    char c1, c2;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 ||
        (n == 1 && lo != hi) || hi < lo)
        throw CLI::ValidationError("--grid", "expected lo:hi:n with hi >= lo");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = n == 1 ? lo : lo + (hi - lo) * i / double(n - 1);
    return g;
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << bytes;
    if (!out) throw std::runtime_error("write failed: " + path);
}

EvalPrecision env_precision() {
    EvalPrecision prec;
    if (const char* s = std::getenv("HYPSTABLE_PRECISION")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0.0 && v <= 1e-3) prec.rel_tol = v;
    }
    return prec;
}

std::string csv_line(std::initializer_list<double> vals) {
    std::string line;
    bool first = true;
    for (double v : vals) {
        if (!first) line += ',';
        line += hypstable::format_double(v);
        first = false;
    }
    line += '\n';
    return line;
}

// ---- verify suites ------------------------------------------------------

void verify_wiener_hopf(const ProcessParams& p, const EvalPrecision& prec,
                        RunReport& report, std::string* csv_out) {
    std::vector<double> lambdas{0.5, 1.0, 2.0, 4.0};
    std::string csv =
        "lambda,psi_closed_re,psi_closed_im,psi_numeric_re,psi_numeric_im,"
        "ratio\n";
    hypstable::LevyCharacteristics chars(p, prec);
    std::vector<double> ratios;
    for (double l : lambdas) {
        auto closed = hypstable::char_exponent_closed(l, p);
        auto numeric = hypstable::char_exponent_numeric(l, chars);
        double ratio = std::abs(numeric) / std::abs(closed);
        ratios.push_back(ratio);
        csv += csv_line({l, closed.real(), closed.imag(), numeric.real(),
                         numeric.imag(), ratio});
    }
    double mean = 0.0;
    for (double r : ratios) mean += r;
    mean /= ratios.size();
    double var = 0.0;
    for (double r : ratios) var += (r - mean) * (r - mean);
    double cv = std::sqrt(var / ratios.size()) / mean;
    report.add("wiener-hopf factorization: numeric/closed ratio CV", 0.0, cv,
               1e-4);
    if (p.alpha == 1.0 && p.dim == 1) {
        for (double l : lambdas) {
            double ref = l * std::tanh(M_PI * l / 2.0);
            double got = hypstable::char_exponent_closed(l, p).real();
            report.add("cauchy case closed form at lambda=" +
                           hypstable::format_double(l),
                       0.0, std::abs(got - ref) / ref, 1e-10);
        }
    }
    if (csv_out) *csv_out = csv;
}

void verify_vigon(const ProcessParams& p, const EvalPrecision& prec,
                  RunReport& report) {
    hypstable::LevyCharacteristics chars(p, prec);
    for (double r : {0.1, 0.5, 1.0, 2.0}) {
        double closed = hypstable::ladder_levy_tail_asc(r, p);
        double numeric = hypstable::vigon_tail_numeric(r, chars);
        report.add("ladder tail friendship identity at r=" +
                       hypstable::format_double(r),
                   0.0, std::abs(numeric - closed) / closed, 1e-5);
    }
}

void verify_exit_laws(const ProcessParams& p, const EvalPrecision& prec,
                      RunReport& report) {
    for (double u : {0.2, 1.0, 3.0})
        report.add("overshoot density mass at u=" + hypstable::format_double(u),
                   1.0, hypstable::overshoot_mass(u, p, prec), 1e-6);
    for (double v : {-0.5, -1.0, -2.0}) {
        double mass = hypstable::undershoot_mass(v, p, prec);
        double expect = 1.0 - hypstable::infimum_law(
                                  -v, p, hypstable::LawKind::CDF, prec);
        report.add("undershoot mass vs infimum CDF at v=" +
                       hypstable::format_double(v),
                   expect, mass, 1e-6);
    }
    // infimum CDF must agree with the quadrature of its density
    for (double z : {0.3, 1.0, 2.5}) {
        double cdf = hypstable::infimum_law(z, p, hypstable::LawKind::CDF, prec);
        double quad = hypstable::integrate_endpoint_power(
            [&](double t) {
                return hypstable::infimum_law(t, p, hypstable::LawKind::Density,
                                              prec);
            },
            0.0, z, p.alpha / 2.0, 1.0, prec);
        report.add("infimum CDF vs density quadrature at z=" +
                       hypstable::format_double(z),
                   cdf, quad, 1e-8);
    }
}

void verify_montecarlo(const ProcessParams& p, const EvalPrecision& prec,
                       std::uint64_t seed, bool quick, RunReport& report) {
    hypstable::SimConfig cfg{p};
    cfg.seed = seed;
    cfg.n_paths = quick ? 2000 : 10000;
    cfg.dt = quick ? 4e-4 : 1e-4;
    cfg.t_max = 20.0;
    double u = 0.5;
    auto over = hypstable::estimate_overshoot(cfg, u);
    auto cdf = hypstable::overshoot_cdf_grid(over.samples, u, p, prec);
    double ks_over = hypstable::ks_statistic(over.samples, cdf);
    report.add("overshoot KS vs closed CDF", 0.0, ks_over, quick ? 0.04 : 0.02);

    hypstable::SimConfig icfg = cfg;
    icfg.t_max = 8.0;
    auto inf = hypstable::estimate_infimum(icfg);
    std::vector<double> icdf(inf.samples.size());
    for (std::size_t i = 0; i < inf.samples.size(); ++i)
        icdf[i] = hypstable::infimum_law(inf.samples[i], p,
                                         hypstable::LawKind::CDF, prec);
    double ks_inf = hypstable::ks_statistic(inf.samples, icdf);
    report.add("infimum KS vs closed CDF", 0.0, ks_inf, quick ? 0.04 : 0.02);
}

// ---- eval targets -------------------------------------------------------

int run_eval(const std::string& target, const ProcessParams& p,
             const EvalPrecision& prec, const std::vector<double>& grid,
             double level, double start, const std::vector<double>& points,
             const std::string& ladder, const std::string& format,
             const std::string& out_path) {
    if (target == "exponent") {
        std::string csv = "lambda,psi_re,psi_im\n";
        for (double l : grid) {
            auto v = hypstable::char_exponent_closed(l, p);
            csv += csv_line({l, v.real(), v.imag()});
        }
        write_output(out_path, csv);
        return 0;
    }
    if (target == "hitting") {
        if (points.empty())
            throw CLI::ValidationError("--points",
                                       "eval hitting requires --points");
        auto hit = hypstable::multi_point_hitting(points, start, p, prec);
        std::string csv = "point,first_hit_prob\n";
        std::vector<double> sorted = points;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            csv += csv_line({sorted[i], hit.first_hit[i]});
        csv += "any," + hypstable::format_double(hit.prob_any) + "\n";
        write_output(out_path, csv);
        return 0;
    }

    DistributionTable table;
    table.grid = grid;
    table.values.reserve(grid.size());
    for (double x : grid) {
        double v;
        if (target == "levy-density")
            v = hypstable::levy_density(x, p, prec);
        else if (target == "overshoot")
            v = hypstable::overshoot_density(x, level, p);
        else if (target == "undershoot")
            v = hypstable::undershoot_density(x, level, p);
        else if (target == "infimum")
            v = hypstable::infimum_law(x, p, hypstable::LawKind::Density, prec);
        else if (target == "potential")
            v = hypstable::potential_density_u(start, x, p, prec);
        else if (target == "renewal")
            v = ladder == "asc" ? hypstable::renewal_density_asc(x, p)
                                : hypstable::renewal_density_desc(x, p);
        else
            throw CLI::ValidationError("eval", "unknown target " + target);
        table.values.push_back(v);
    }
    write_output(out_path, format == "json" ? hypstable::to_json(table)
                                            : hypstable::to_csv(table));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypstable: closed-form laws of the log-radial stable "
                 "process, with quadrature and Monte-Carlo cross-checks"};
    app.set_config("--config", "", "key=value config file preloading defaults");
    app.require_subcommand(1);

    double alpha = 1.0;
    int dim = 3;
    double level = 1.0, start = 1.0;
    std::string grid_spec = "0.1:2:20";
    std::string out_path, format = "csv";
    std::vector<double> points;
    std::string ladder = "desc";

    auto add_common = [&](CLI::App* c) {
        c->add_option("--alpha", alpha, "stability index in (0,2)")->required();
        c->add_option("--dim", dim, "spatial dimension")->required();
        c->add_option("--out", out_path, "output file (default stdout)");
    };

    // eval
    auto* eval = app.add_subcommand("eval", "tabulate a closed-form law");
    std::string eval_target;
    eval->add_option("target", eval_target,
                     "levy-density|exponent|overshoot|undershoot|infimum|"
                     "hitting|potential|renewal")
        ->required();
    add_common(eval);
    eval->add_option("--grid", grid_spec, "abscissae as lo:hi:n");
    eval->add_option("--level", level, "passage level (overshoot/undershoot)");
    eval->add_option("--start", start, "start radius (hitting/potential)");
    eval->add_option("--points", points, "target radii for hitting")
        ->delimiter(',');
    eval->add_option("--ladder", ladder, "asc|desc for eval renewal")
        ->check(CLI::IsMember({"asc", "desc"}));
    eval->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo passage sampling");
    add_common(sim);
    int n_paths = 1000;
    double dt = 1e-3, t_max = 10.0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string mode = "overshoot";
    sim->add_option("--paths", n_paths, "number of paths");
    sim->add_option("--dt", dt, "time step");
    sim->add_option("--tmax", t_max, "horizon");
    sim->add_option("--seed", seed, "RNG seed")->required();
    sim->add_option("--mode", mode, "overshoot|infimum")
        ->check(CLI::IsMember({"overshoot", "infimum"}));
    sim->add_option("--level", level, "passage level u for overshoot mode");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_target;
    verify->add_option("target", verify_target,
                       "wiener-hopf|vigon|exit-laws|montecarlo|all")
        ->required();
    add_common(verify);
    bool quick = false;
    verify->add_flag("--quick", quick, "reduced grid sizes");
    auto* vseed =
        verify->add_option("--seed", seed, "RNG seed (required for "
                                           "randomized suites)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        ProcessParams params(alpha, dim);
        EvalPrecision prec = env_precision();
        prec.validate();

        if (eval->parsed())
            return run_eval(eval_target, params, prec, parse_grid(grid_spec),
                            level, start, points, ladder, format, out_path);

        if (sim->parsed()) {
            (void)seed_set;
            hypstable::SimConfig cfg{params};
            cfg.n_paths = n_paths;
            cfg.dt = dt;
            cfg.t_max = t_max;
            cfg.seed = seed;
            hypstable::EmpiricalLaw law =
                mode == "overshoot"
                    ? hypstable::estimate_overshoot(cfg, level)
                    : hypstable::estimate_infimum(cfg);
            std::ostringstream csv;
            csv << "# mode=" << mode << " alpha=" << alpha << " dim=" << dim
                << " paths=" << n_paths << " dt=" << hypstable::format_double(dt)
                << " tmax=" << hypstable::format_double(t_max)
                << " seed=" << seed
                << " defect=" << hypstable::format_double(law.defect) << "\n"
                << "sample\n";
            for (double s : law.samples)
                csv << hypstable::format_double(s) << "\n";
            write_output(out_path, csv.str());
            if (law.defect > 0.01)
                std::cerr << "warning: " << law.defect * 100.0
                          << "% of paths never saw the event before tmax\n";
            return 0;
        }

        // verify
        RunReport report;
        {
            std::ostringstream cmd;
            for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
            report.command = cmd.str();
        }
        auto t0 = std::chrono::steady_clock::now();
        std::string wh_csv;
        bool needs_seed = verify_target == "montecarlo" ||
                          verify_target == "all";
        if (needs_seed && vseed->count() == 0) {
            std::cerr << "error: verify " << verify_target
                      << " requires --seed for reproducibility\n";
            return 2;
        }
        if (verify_target == "wiener-hopf")
            verify_wiener_hopf(params, prec, report, &wh_csv);
        else if (verify_target == "vigon")
            verify_vigon(params, prec, report);
        else if (verify_target == "exit-laws")
            verify_exit_laws(params, prec, report);
        else if (verify_target == "montecarlo")
            verify_montecarlo(params, prec, seed, quick, report);
        else if (verify_target == "all") {
            verify_wiener_hopf(params, prec, report, nullptr);
            verify_vigon(params, prec, report);
            verify_exit_laws(params, prec, report);
            verify_montecarlo(params, prec, seed, true, report);
        } else {
            std::cerr << "error: unknown verify target " << verify_target
                      << "\n";
            return 2;
        }
        report.wall_ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
        if (verify_target == "wiener-hopf" && !out_path.empty()) {
            write_output(out_path, wh_csv);
            std::cout << report.to_json();
        } else {
            write_output(out_path.empty() ? "" : out_path, report.to_json());
        }
        return report.all_pass() ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
