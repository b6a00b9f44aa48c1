// zeno-lab -- CLI front end: run one experiment, emit CSV (and optional SVG)
#include "zenolab/evolution.hpp"
#include "zenolab/io.hpp"
#include "zenolab/model.hpp"
#include "zenolab/oracle.hpp"
#include "zenolab/spectral.hpp"
#include "zenolab/zeno.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace zenolab;
namespace io = zenolab::io;

// Lookup order: "<section>.<key>" then bare "<key>", so configs may use either
// flat keys or [model]/[run] section headers.
double cfg_double(const io::Config& c, const std::string& section,
                  const std::string& key, double def) {
    if (c.has(section + "." + key)) return c.get_double(section + "." + key);
    return c.get_double_or(key, def);
}

long cfg_long(const io::Config& c, const std::string& section,
              const std::string& key, long def) {
    if (c.has(section + "." + key)) return static_cast<long>(c.get_double(section + "." + key));
    return c.get_long_or(key, def);
}

std::string cfg_string(const io::Config& c, const std::string& section,
                       const std::string& key, std::string def) {
    if (c.has(section + "." + key)) return c.get(section + "." + key);
    return c.get_or(key, std::move(def));
}

ModelParams params_from_config(const io::Config& c) {
    ModelParams p = paper_params();
    p.E_A = cfg_double(c, "model", "E_A", p.E_A);
    p.E_B = cfg_double(c, "model", "E_B", p.E_B);
    p.Omega = cfg_double(c, "model", "Omega", p.Omega);
    p.sigma = cfg_double(c, "model", "sigma", p.sigma);
    p.mu = cfg_double(c, "model", "mu", p.mu);
    p.omega_0 = cfg_double(c, "model", "omega_0", p.omega_0);
    p.omega_max = cfg_double(c, "model", "omega_max", p.omega_max);
    p.eps_tol = cfg_double(c, "model", "eps_tol", p.eps_tol);
    p.max_panels = cfg_long(c, "model", "max_panels", p.max_panels);
    p.validate();
    return p;
}

BareState initial_from_config(const io::Config& c) {
    const std::string s = cfg_string(c, "run", "initial", "A");
    if (s == "A" || s == "a") return BareState::A;
    if (s == "B" || s == "b") return BareState::B;
    throw std::runtime_error("config: initial must be 'A' or 'B', got '" + s + "'");
}

void apply_preset(io::Config& c, const std::string& preset) {
    if (preset == "paper-figure-3") {
        c.set("run.initial", "A");
        c.set("run.t_max", "100");
        c.set("run.num_times", "501");
        c.set("run.tau_zeno", "1.0");
        c.set("run.tau_antizeno", "45.0");
    } else if (preset == "paper-figure-4") {
        c.set("model.Omega", "0");
        c.set("run.initial", "B");
        c.set("run.t_max", "30");
        c.set("run.num_times", "501");
        c.set("run.tau_zeno", "0.5");
    } else {
        throw std::runtime_error("unknown preset '" + preset +
                                 "' (available: paper-figure-3, paper-figure-4)");
    }
}

std::vector<std::string> config_echo(const std::string& experiment,
                                     const std::string& preset,
                                     const ModelParams& p, const io::Config& c) {
    std::vector<std::string> lines;
    lines.push_back("experiment = " + experiment);
    if (!preset.empty()) lines.push_back("preset = " + preset);
    lines.push_back("model.E_A = " + io::format_number(p.E_A));
    lines.push_back("model.E_B = " + io::format_number(p.E_B));
    lines.push_back("model.Omega = " + io::format_number(p.Omega));
    lines.push_back("model.sigma = " + io::format_number(p.sigma));
    lines.push_back("model.mu = " + io::format_number(p.mu));
    lines.push_back("model.omega_0 = " + io::format_number(p.omega_0));
    lines.push_back("model.omega_max = " + io::format_number(p.omega_max));
    lines.push_back("model.eps_tol = " + io::format_number(p.eps_tol));
    lines.push_back("model.max_panels = " + std::to_string(p.max_panels));
    for (const auto& [key, value] : c.entries())
        if (key.rfind("run.", 0) == 0) lines.push_back(key + " = " + value);
    return lines;
}

void emit(const std::string& out_dir, const std::string& name,
          const io::CsvTable& table, const std::optional<io::PlotSpec>& plot) {
    const auto dir = std::filesystem::path(out_dir);
    io::write_file_atomic((dir / (name + ".csv")).string(), table.to_string());
    std::cout << "wrote " << (dir / (name + ".csv")).string() << "\n";
    if (plot) {
        io::write_file_atomic((dir / (name + ".svg")).string(), io::render_svg(*plot));
        std::cout << "wrote " << (dir / (name + ".svg")).string() << "\n";
    }
}

int run_spectrum(const ModelParams& p, const io::Config& c, const std::string& out_dir,
                 bool plot, const std::vector<std::string>& echo) {
    const long n = cfg_long(c, "run", "num_lambda", 2000);
    io::CsvTable table;
    table.comments = echo;
    table.columns = {"lambda", "density_A", "density_B"};
    io::PlotSpec spec{"spectral densities", "lambda", "density", false, {}};
    io::PlotSeries sa{"density_A", {}, {}, "#1f6fb4"}, sb{"density_B", {}, {}, "#c44e52"};
    for (long i = 1; i <= n; ++i) {
        const double lambda = p.omega_max * static_cast<double>(i) / (n + 1);
        const double da = density_A(p, lambda), db = density_B(p, lambda);
        table.add_row({lambda, da, db});
        sa.x.push_back(lambda); sa.y.push_back(da);
        sb.x.push_back(lambda); sb.y.push_back(db);
    }
    spec.series = {sa, sb};
    emit(out_dir, "spectrum", table, plot ? std::optional(spec) : std::nullopt);
    return 0;
}

int run_survival(const ModelParams& p, const io::Config& c, const std::string& out_dir,
                 bool plot, double t_max_override, const std::vector<std::string>& echo) {
    const BareState initial = initial_from_config(c);
    const double t_max = t_max_override > 0.0 ? t_max_override
                                              : cfg_double(c, "run", "t_max", 100.0);
    const long num_times = cfg_long(c, "run", "num_times", 501);
    const bool has_zeno = c.has("run.tau_zeno") || c.has("tau_zeno");
    const bool has_anti = c.has("run.tau_antizeno") || c.has("tau_antizeno");

    SpectralGrid grid(p, initial, t_max);
    double gamma_zeno = 0.0, gamma_anti = 0.0;
    if (has_zeno) gamma_zeno = effective_rate(p, initial, cfg_double(c, "run", "tau_zeno", 1.0));
    if (has_anti) gamma_anti = effective_rate(p, initial, cfg_double(c, "run", "tau_antizeno", 1.0));

    io::CsvTable table;
    table.comments = echo;
    table.columns = {"t", "P"};
    if (has_zeno) table.columns.push_back("P_zeno");
    if (has_anti) table.columns.push_back("P_antizeno");

    io::PlotSpec spec{"survival probability, initial " + std::string(to_string(initial)),
                      "t", "P(t)", true, {}};
    io::PlotSeries su{"unmeasured", {}, {}, "#1f6fb4"};
    io::PlotSeries sz{"measured (Zeno tau)", {}, {}, "#55a868"};
    io::PlotSeries sa{"measured (anti-Zeno tau)", {}, {}, "#c44e52"};
    // normalize by the numerical closure so the t=0 row is exactly 1
    const double p0 = grid.probability(0.0);
    for (long i = 0; i < num_times; ++i) {
        const double t = t_max * static_cast<double>(i) / (num_times - 1);
        std::vector<double> row{t, grid.probability(t) / p0};
        su.x.push_back(t); su.y.push_back(row[1]);
        if (has_zeno) {
            row.push_back(std::exp(-gamma_zeno * t));
            sz.x.push_back(t); sz.y.push_back(row.back());
        }
        if (has_anti) {
            row.push_back(std::exp(-gamma_anti * t));
            sa.x.push_back(t); sa.y.push_back(row.back());
        }
        table.add_row(row);
    }
    spec.series.push_back(su);
    if (has_zeno) spec.series.push_back(sz);
    if (has_anti) spec.series.push_back(sa);
    emit(out_dir, "survival", table, plot ? std::optional(spec) : std::nullopt);
    return 0;
}

int run_zeno_scan(const ModelParams& p, const io::Config& c, const std::string& out_dir,
                  bool plot, const std::vector<std::string>& echo) {
    const BareState initial = initial_from_config(c);
    const double T = cfg_double(c, "run", "T", 60.0);
    const double tau_min = cfg_double(c, "run", "tau_min", 0.01);
    const double tau_max = cfg_double(c, "run", "tau_max", 0.5 * T);
    const long num_tau = cfg_long(c, "run", "num_tau", 40);
    if (!(tau_min > 0.0 && tau_max > tau_min))
        throw std::runtime_error("config: need 0 < tau_min < tau_max");

    std::vector<double> taus;
    for (long i = 0; i < num_tau; ++i)
        taus.push_back(tau_min * std::pow(tau_max / tau_min,
                                          static_cast<double>(i) / (num_tau - 1)));
    const auto verdicts = tau_scan(p, initial, taus, T);

    io::CsvTable table;
    table.comments = echo;
    table.columns = {"tau", "P_measured_T", "P_unmeasured_T", "gamma_eff", "classification"};
    io::PlotSpec spec{"effective decay rate, initial " + std::string(to_string(initial)),
                      "tau", "gamma_eff", false, {}};
    io::PlotSeries sg{"gamma_eff", {}, {}, "#1f6fb4"};
    for (const auto& v : verdicts) {
        const double gamma = -std::log(v.p_measured) /
                             (std::max<long>(1, static_cast<long>(std::floor(T / v.tau))) * v.tau);
        table.add_row_cells({io::format_number(v.tau), io::format_number(v.p_measured),
                             io::format_number(v.p_unmeasured), io::format_number(gamma),
                             to_string(v.classification)});
        sg.x.push_back(v.tau); sg.y.push_back(gamma);
    }
    spec.series = {sg};
    emit(out_dir, "zeno-scan", table, plot ? std::optional(spec) : std::nullopt);
    return 0;
}

int run_interrupted(const ModelParams& p, const io::Config& c, const std::string& out_dir,
                    bool plot, const std::vector<std::string>& echo) {
    const BareState initial = initial_from_config(c);
    MeasurementSchedule sched;
    sched.tau = cfg_double(c, "run", "tau", 1.0);
    sched.n = cfg_long(c, "run", "n", 50);
    const SurvivalCurve curve = interrupted_curve(p, initial, sched);

    io::CsvTable table;
    table.comments = echo;
    table.columns = {"t", "P"};
    io::PlotSpec spec{"interrupted evolution, initial " + std::string(to_string(initial)),
                      "t", "P(t)", true, {}};
    io::PlotSeries s{"measured", {}, {}, "#55a868"};
    for (size_t i = 0; i < curve.times.size(); ++i) {
        table.add_row({curve.times[i], curve.probabilities[i]});
        s.x.push_back(curve.times[i]); s.y.push_back(curve.probabilities[i]);
    }
    spec.series = {s};
    emit(out_dir, "interrupted", table, plot ? std::optional(spec) : std::nullopt);
    return 0;
}

int run_bound_states(const ModelParams& p, const io::Config& c, const std::string& out_dir,
                     const std::vector<std::string>& echo) {
    (void)c;
    const auto states = find_bound_states(p);
    io::CsvTable table;
    table.comments = echo;
    table.columns = {"Lambda", "norm", "mu_A", "mu_B"};
    for (const auto& s : states) table.add_row({s.Lambda, s.norm, s.mu_A, s.mu_B});
    table.trailer_comments.push_back("bound_states = " + std::to_string(states.size()));
    emit(out_dir, "bound-states", table, std::nullopt);
    return 0;
}

int run_oracle_compare(const ModelParams& p, const io::Config& c, const std::string& out_dir,
                       bool plot, double t_max_override, const std::vector<std::string>& echo) {
    const BareState initial = initial_from_config(c);
    const double t_max = t_max_override > 0.0 ? t_max_override
                                              : cfg_double(c, "run", "t_max", 50.0);
    const long num_times = cfg_long(c, "run", "num_times", 200);
    const int N = static_cast<int>(cfg_long(c, "run", "N", 4000));

    std::vector<double> times;
    for (long i = 0; i < num_times; ++i)
        times.push_back(t_max * static_cast<double>(i) / (num_times - 1));

    const auto sol = oracle::solve(oracle::build(p, N, p.omega_max));
    const SurvivalCurve matrix = oracle::matrix_survival(sol, initial, times);
    const SurvivalCurve analytic = survival_curve(p, initial, times);

    io::CsvTable table;
    table.comments = echo;
    table.comments.push_back("run.N = " + std::to_string(N));
    table.columns = {"t", "P_analytic", "P_matrix", "abs_deviation"};
    io::PlotSpec spec{"analytic vs matrix survival, initial " + std::string(to_string(initial)),
                      "t", "P(t)", false, {}};
    io::PlotSeries s1{"analytic", {}, {}, "#1f6fb4"}, s2{"matrix", {}, {}, "#c44e52"};
    double max_dev = 0.0;
    for (size_t i = 0; i < times.size(); ++i) {
        const double dev = std::abs(analytic.probabilities[i] - matrix.probabilities[i]);
        max_dev = std::max(max_dev, dev);
        table.add_row({times[i], analytic.probabilities[i], matrix.probabilities[i], dev});
        s1.x.push_back(times[i]); s1.y.push_back(analytic.probabilities[i]);
        s2.x.push_back(times[i]); s2.y.push_back(matrix.probabilities[i]);
    }
    table.trailer_comments.push_back("max_abs_deviation = " + io::format_number(max_dev));
    spec.series = {s1, s2};
    emit(out_dir, "oracle-compare", table, plot ? std::optional(spec) : std::nullopt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("ZENO_LAB_THREADS"))
        setenv("OPENBLAS_NUM_THREADS", threads, 1);

    CLI::App app{"zeno-lab: spectral solution and measured evolution of a "
                 "two-bound-state Friedrichs-Lee model"};
    app.require_subcommand(1);

    std::string config_path, preset, out_dir = ".";
    bool plot = false;
    double t_max_override = -1.0;
    app.add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);
    app.add_option("--preset", preset, "built-in preset (paper-figure-3, paper-figure-4)");
    app.add_option("--out", out_dir, "output directory");
    app.add_flag("--plot", plot, "also write a static SVG plot");
    app.add_option("--t-max", t_max_override, "override the time horizon");

    for (const char* name : {"spectrum", "survival", "zeno-scan", "interrupted",
                             "oracle-compare", "bound-states"})
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);
    const std::string experiment = app.get_subcommands().front()->get_name();

    try {
        zenolab::io::Config cfg;
        if (!preset.empty()) apply_preset(cfg, preset);
        if (!config_path.empty()) {
            const auto file_cfg = zenolab::io::Config::parse_file(config_path);
            for (const auto& [key, value] : file_cfg.entries()) cfg.set(key, value);
        }
        const ModelParams params = params_from_config(cfg);
        zenolab::io::check_writable(out_dir);
        const auto echo = config_echo(experiment, preset, params, cfg);

        if (experiment == "spectrum")
            return run_spectrum(params, cfg, out_dir, plot, echo);
        if (experiment == "survival")
            return run_survival(params, cfg, out_dir, plot, t_max_override, echo);
        if (experiment == "zeno-scan")
            return run_zeno_scan(params, cfg, out_dir, plot, echo);
        if (experiment == "interrupted")
            return run_interrupted(params, cfg, out_dir, plot, echo);
        if (experiment == "bound-states")
            return run_bound_states(params, cfg, out_dir, echo);
        if (experiment == "oracle-compare")
            return run_oracle_compare(params, cfg, out_dir, plot, t_max_override, echo);
        std::cerr << "unknown experiment: " << experiment << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "zeno-lab: " << e.what() << "\n";
        return 1;
    }
}
