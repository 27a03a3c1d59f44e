#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "frale/analyze.hpp"
#include "frale/io.hpp"
#include "frale/kernels.hpp"
#include "frale/levy_driver.hpp"
#include "frale/simulate.hpp"
#include "frale/verify.hpp"
#include "frale/wiener.hpp"

using namespace frale;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitIncomplete = 3;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

LevyMeasureSpec load_spec(const std::string& path) {
    if (path.empty()) return LevyMeasureSpec::rademacher(1.0);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read spec file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return LevyMeasureSpec::from_json(buf.str());
}

int cmd_kernel(double hurst, const std::string& kind_name, double t, int points, int moment,
               bool g1g2, const std::string& out_path, const std::string& svg_path) {
    HurstParameter h(hurst);
    KernelKind kind =
        kind_name == "mvn" ? KernelKind::MandelbrotVanNess : KernelKind::MolchanGolosov;

    if (g1g2) {
        std::ostringstream csv;
        csv << "H,g1,g2,difference\n";
        std::vector<double> xs, diff;
        for (int i = 1; i <= 49; ++i) {
            double H = 0.5 + 0.005 * i;
            auto [g1, g2] = g1_g2_bounds(HurstParameter(H));
            csv << format_double(H) << "," << format_double(g1) << "," << format_double(g2)
                << "," << format_double(g1 - g2) << "\n";
            xs.push_back(H);
            diff.push_back(g1 - g2);
        }
        emit(csv.str(), out_path);
        if (!svg_path.empty()) write_file(svg_path, svg_line_plot(xs, {diff}));
        return kExitPass;
    }

    std::ostringstream csv;
    csv << "# kind=" << kernel_name(kind) << "\n# hurst=" << format_double(hurst)
        << "\n# t=" << format_double(t) << "\n";
    std::vector<double> xs, ys;
    // sample strictly inside the support; both kernels may blow up at the ends
    double lo = kind == KernelKind::MolchanGolosov ? 0.0 : -t;
    for (int i = 1; i < points; ++i) {
        double s = lo + (t - lo) * static_cast<double>(i) / points;
        double v = kind == KernelKind::MolchanGolosov ? mg_kernel(h, t, s) : mvn_kernel(h, t, s);
        xs.push_back(s);
        ys.push_back(v);
    }
    if (moment > 0) {
        KernelMomentResult m = kernel_moment(kind, h, t, moment);
        std::string moment_text = m.divergent ? "divergent" : format_double(m.value);
        csv << "# moment_" << moment << "=" << moment_text << "\n";
        std::cout << moment_text << "\n";
    }
    csv << "s,value\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        csv << format_double(xs[i]) << "," << format_double(ys[i]) << "\n";
    emit(csv.str(), out_path);
    if (!svg_path.empty()) write_file(svg_path, svg_line_plot(xs, {ys}));
    return kExitPass;
}

int cmd_simulate(const std::string& process, double hurst, const std::string& spec_path,
                 double horizon, int grid_n, std::uint64_t seed, const std::string& scheme,
                 double s_trunc, double sigma, double epsilon, const std::string& out_path,
                 const std::string& svg_path) {
    HurstParameter h(hurst);
    LevyMeasureSpec spec = load_spec(spec_path);
    std::vector<double> grid = make_uniform_grid(horizon, static_cast<std::size_t>(grid_n));

    SamplePath path;
    if (process == "mg") {
        path = scheme == "ibp" ? simulate_flpmg_ibp(h, spec, grid, seed)
                               : simulate_flpmg_jumpsum(h, spec, grid, seed);
    } else if (process == "mvn") {
        double S = s_trunc > 0.0 ? s_trunc : default_s_trunc(h, horizon);
        path = simulate_flpmvn(h, spec, grid, seed, S);
    } else if (process == "fbm") {
        path = simulate_fbm_mg(h, grid, seed);
    } else if (process == "mixed") {
        path = simulate_mixed(h, spec, sigma, epsilon, grid, seed, KernelKind::MolchanGolosov,
                              s_trunc);
    } else {
        throw std::invalid_argument("unknown process: " + process);
    }
    emit(sample_path_csv(path), out_path);
    if (!svg_path.empty()) write_file(svg_path, svg_line_plot(path.grid, {path.values}));
    return kExitPass;
}

int cmd_verify(const std::string& suite, double budget, std::uint64_t seed,
               std::uint64_t ensemble, double hurst, const std::string& stepfn_path,
               const std::string& json_path, const std::string& csv_path) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.budget_seconds = budget;
    opt.ensemble = ensemble;
    opt.hurst = hurst;
    if (!stepfn_path.empty()) {
        std::ifstream in(stepfn_path);
        if (!in) throw std::invalid_argument("cannot read step function file: " + stepfn_path);
        std::stringstream buf;
        buf << in.rdbuf();
        opt.stepfn_json = buf.str();
    }
    SuiteResult r = run_suite(suite, opt);
    for (const auto& c : r.checks) {
        std::printf("[%s] %s: %s -- %s\n",
                    c.divergent_analytic ? "DIVERGENT" : (c.pass ? "PASS" : "FAIL"),
                    r.suite.c_str(), c.name.c_str(), c.details.c_str());
    }
    if (!r.complete)
        std::printf("[INCOMPLETE] %s: budget exhausted, partial report\n", r.suite.c_str());
    if (!json_path.empty()) write_file(json_path, r.json());
    if (!csv_path.empty()) write_file(csv_path, r.csv());
    if (!r.complete) return kExitIncomplete;
    return r.all_pass() ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frale: fractional Levy process simulation and verification toolkit"};
    app.require_subcommand(1);

    auto* kernel = app.add_subcommand("kernel", "evaluate kernels, moments and the g1/g2 sweep");
    double k_hurst = 0.75, k_t = 1.0;
    int k_points = 512, k_moment = 0;
    bool k_g1g2 = false;
    std::string k_kind = "mg", k_out, k_svg;
    kernel->add_option("--kind", k_kind, "mg|mvn")->check(CLI::IsMember({"mg", "mvn"}));
    kernel->add_option("--hurst", k_hurst, "Hurst parameter in (0,1)");
    kernel->add_option("--t", k_t, "horizon t > 0");
    kernel->add_option("--points", k_points, "samples of s")->check(CLI::PositiveNumber);
    kernel->add_option("--moment", k_moment, "append int kernel^K (K >= 2)");
    kernel->add_flag("--g1g2", k_g1g2, "sweep the fourth-moment bounds over H in (1/2, 3/4)");
    kernel->add_option("--out", k_out, "write CSV here instead of stdout");
    kernel->add_option("--svg", k_svg, "write an SVG plot of the CSV data");

    auto* simulate = app.add_subcommand("simulate", "generate one trajectory as CSV");
    double s_hurst = 0.75, s_T = 1.0, s_strunc = 0.0, s_sigma = 1.0, s_epsilon = 1.0;
    int s_grid = 256;
    std::uint64_t s_seed = 1;
    std::string s_process = "mg", s_spec, s_scheme = "jumpsum", s_out, s_svg;
    simulate->add_option("--process", s_process, "mg|mvn|fbm|mixed")
        ->check(CLI::IsMember({"mg", "mvn", "fbm", "mixed"}));
    simulate->add_option("--hurst", s_hurst, "Hurst parameter in (0,1)");
    simulate->add_option("--spec", s_spec, "Levy measure JSON (default: Rademacher lambda = 1)");
    simulate->add_option("--horizon", s_T, "time horizon T > 0");
    simulate->add_option("--grid", s_grid, "number of grid cells")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", s_seed, "master seed");
    simulate->add_option("--scheme", s_scheme, "jumpsum|ibp (mg only)")
        ->check(CLI::IsMember({"jumpsum", "ibp"}));
    simulate->add_option("--strunc", s_strunc, "history horizon for mvn/mixed");
    simulate->add_option("--sigma", s_sigma, "mixed model: fLp weight");
    simulate->add_option("--epsilon", s_epsilon, "mixed model: Brownian weight");
    simulate->add_option("--out", s_out, "write CSV here instead of stdout");
    simulate->add_option("--svg", s_svg, "write an SVG plot of the path");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    double v_budget = 0.0, v_hurst = 0.0;
    std::uint64_t v_seed = 1, v_ensemble = 0;
    std::string v_suite, v_json, v_stepfn, v_csv;
    std::string suites_help;
    for (const auto& name : suite_names()) suites_help += name + " ";
    verify->add_option("--suite", v_suite, "one of: " + suites_help)->required();
    verify->add_option("--budget", v_budget, "wall budget in seconds (0 = none)");
    verify->add_option("--seed", v_seed, "master seed");
    verify->add_option("--ensemble", v_ensemble, "override the suite's ensemble size");
    verify->add_option("--hurst", v_hurst, "override the suite's Hurst parameter");
    verify->add_option("--stepfn", v_stepfn,
                       "wiener suite: extra step function, JSON [{\"upto\":s,\"level\":a},...]");
    verify->add_option("--json", v_json, "write the machine-readable verdict here");
    verify->add_option("--csv", v_csv, "write the quantity,analytic,empirical,stderr table here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (kernel->parsed())
            return cmd_kernel(k_hurst, k_kind, k_t, k_points, k_moment, k_g1g2, k_out, k_svg);
        if (simulate->parsed())
            return cmd_simulate(s_process, s_hurst, s_spec, s_T, s_grid, s_seed, s_scheme,
                                s_strunc, s_sigma, s_epsilon, s_out, s_svg);
        if (verify->parsed())
            return cmd_verify(v_suite, v_budget, v_seed, v_ensemble, v_hurst, v_stepfn, v_json,
                              v_csv);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailure;
    }
    return kExitInvalidInput;
}
