// Acceptance checks: one line per criterion, exit status = number of failures.
// Usage: acceptance [path-to-zeno-lab-binary]
#include "zenolab/evolution.hpp"
#include "zenolab/oracle.hpp"
#include "zenolab/spectral.hpp"
#include "zenolab/zeno.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace zenolab;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %-34s %s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a * std::pow(b / a, static_cast<double>(i) / (n - 1));
    return v;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    const ModelParams p = paper_params();
    ModelParams stable = p;
    stable.E_A = stable.E_B = -1.0;
    ModelParams single = p; // single-bound-state system: A decoupled
    single.Omega = 0.0;

    // 1. closure and cross-term normalization
    try {
        const auto t0 = std::chrono::steady_clock::now();
        const double ca = closure_sum(p, BareState::A);
        const double cb = closure_sum(p, BareState::B);
        const double cx = std::abs(cross_sum(p));
        const double dt = elapsed_s(t0);
        const bool ok = std::abs(ca - 1.0) <= 1e-4 && std::abs(cb - 1.0) <= 1e-4 &&
                        cx <= 1e-4 && dt < 10.0;
        report(1, "closure/cross normalization", ok,
               "closure_A=" + fmt(ca) + " closure_B=" + fmt(cb) + " |cross|=" + fmt(cx) +
                   " time=" + fmt(dt) + "s");
    } catch (const std::exception& e) {
        report(1, "closure/cross normalization", false, e.what());
    }

    // 2 + 3 share a single N=4000 eigendecomposition
    oracle::EigenSolution big_sol;
    bool have_big = false;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        big_sol = oracle::solve(oracle::build(p, 4000, p.omega_max));
        have_big = true;
        const double defect = oracle::orthonormality_defect(big_sol);
        report(2, "eigenvector orthonormality N=4000", defect <= 1e-10,
               "defect=" + fmt(defect) + " solve_time=" + fmt(elapsed_s(t0)) + "s");
    } catch (const std::exception& e) {
        report(2, "eigenvector orthonormality N=4000", false, e.what());
    }

    try {
        if (!have_big) throw std::runtime_error("N=4000 solve unavailable");
        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<double> times = linspace(0.0, 50.0, 200);
        const SurvivalCurve matrix = oracle::matrix_survival(big_sol, BareState::A, times);
        const SurvivalCurve analytic = survival_curve(p, BareState::A, times);
        double max_dev = 0.0;
        for (size_t i = 0; i < times.size(); ++i)
            max_dev = std::max(max_dev,
                               std::abs(matrix.probabilities[i] - analytic.probabilities[i]));
        const double dt = elapsed_s(t0);
        report(3, "oracle equivalence on [0,50]", max_dev <= 1e-3 && dt < 120.0,
               "max_dev=" + fmt(max_dev) + " time=" + fmt(dt) + "s");
    } catch (const std::exception& e) {
        report(3, "oracle equivalence on [0,50]", false, e.what());
    }

    // 4. short-time exponent p = 2 +- 0.1 for both initial states
    try {
        const double pa = short_time_exponent(p, BareState::A);
        const double pb = short_time_exponent(p, BareState::B);
        report(4, "zero initial slope (p = 2)",
               std::abs(pa - 2.0) <= 0.1 && std::abs(pb - 2.0) <= 0.1,
               "p_A=" + fmt(pa) + " p_B=" + fmt(pb));
    } catch (const std::exception& e) {
        report(4, "zero initial slope (p = 2)", false, e.what());
    }

    // 5 + 6. Zeno and anti-Zeno verdicts at T ~ 3x the 1/e time, plus the
    // second inflection of the initial-A curve
    try {
        const double t_e = one_over_e_time(p, BareState::A, 100.0);
        const double T = 3.0 * t_e;
        const auto verdicts = tau_scan(p, BareState::A, logspace(0.01, 0.5 * T, 48), T);
        int n_zeno = 0, n_anti = 0;
        for (const auto& v : verdicts) {
            n_zeno += v.classification == ZenoClass::Zeno;
            n_anti += v.classification == ZenoClass::AntiZeno;
        }
        report(5, "Zeno existence", n_zeno > 0,
               "T=" + fmt(T) + " zeno_verdicts=" + std::to_string(n_zeno));
        const auto inflection = find_inflection(p, BareState::A, 2.0, 50.0);
        report(6, "anti-Zeno existence + inflection", n_anti > 0 && inflection.has_value(),
               "antizeno_verdicts=" + std::to_string(n_anti) +
                   " inflection_t=" + (inflection ? fmt(*inflection) : "none"));
    } catch (const std::exception& e) {
        report(5, "Zeno existence", false, e.what());
        report(6, "anti-Zeno existence + inflection", false, e.what());
    }

    // 7. single-bound-state system: Zeno possible, anti-Zeno impossible
    try {
        const double t_e = one_over_e_time(single, BareState::B, 40.0);
        const double T = 3.0 * t_e;
        const auto verdicts = tau_scan(single, BareState::B, logspace(0.01, 0.5 * T, 48), T);
        int n_zeno = 0, n_anti = 0;
        for (const auto& v : verdicts) {
            n_zeno += v.classification == ZenoClass::Zeno;
            n_anti += v.classification == ZenoClass::AntiZeno;
        }
        report(7, "anti-Zeno absence (Omega=0, B)", n_anti == 0 && n_zeno > 0,
               "zeno=" + std::to_string(n_zeno) + " antizeno=" + std::to_string(n_anti));
    } catch (const std::exception& e) {
        report(7, "anti-Zeno absence (Omega=0, B)", false, e.what());
    }

    // 8. intermediate-time exponential rate vs the golden-rule value
    try {
        const double reference = oracle::golden_rule_rate(single).value; // 2*pi*(0.11*sqrt(2.1))^2
        const double t_e = one_over_e_time(single, BareState::B, 40.0);
        const std::vector<double> times = linspace(0.5 * t_e, 1.5 * t_e, 60);
        const SurvivalCurve curve = survival_curve(single, BareState::B, times);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < times.size(); ++i) {
            const double x = times[i], y = std::log(curve.probabilities[i]);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        const double m = static_cast<double>(times.size());
        const double gamma = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
        report(8, "golden-rule decay rate", std::abs(gamma / reference - 1.0) <= 0.20,
               "gamma=" + fmt(gamma) + " reference=" + fmt(reference) +
                   " ratio=" + fmt(gamma / reference));
    } catch (const std::exception& e) {
        report(8, "golden-rule decay rate", false, e.what());
    }

    // 9. stable regime: two bound states, tiny residuals, oracle weights, floor
    try {
        const auto states = find_bound_states(stable);
        bool ok = states.size() == 2;
        std::string detail = "bound_states=" + std::to_string(states.size());
        double max_res = 0.0;
        for (const auto& s : states)
            max_res = std::max(max_res, std::abs(beta_real(stable, s.Lambda)));
        ok = ok && max_res <= 1e-10;
        detail += " max_beta_residual=" + fmt(max_res);

        // sub-threshold oracle weights
        const auto sol = oracle::solve(oracle::build(stable, 2000, stable.omega_max));
        std::vector<double> oracle_wA;
        for (int i = 0; i < sol.eigenvalues.size(); ++i)
            if (sol.eigenvalues[i] < 0.0) oracle_wA.push_back(sol.weights_A[i]);
        ok = ok && oracle_wA.size() == states.size();
        double max_wdev = 1e300;
        if (oracle_wA.size() == states.size()) {
            max_wdev = 0.0;
            for (size_t j = 0; j < states.size(); ++j)
                max_wdev = std::max(max_wdev,
                                    std::abs(states[j].mu_A * states[j].mu_A - oracle_wA[j]));
        }
        ok = ok && max_wdev <= 1e-3;
        detail += " max_weight_dev=" + fmt(max_wdev);

        // survival floor from the two bound-state weights
        if (states.size() == 2) {
            const double w1 = states[0].mu_A * states[0].mu_A;
            const double w2 = states[1].mu_A * states[1].mu_A;
            const double floor = (w1 - w2) * (w1 - w2);
            SpectralGrid grid(stable, BareState::A, 200.0);
            double min_p = 1e300;
            for (double t : linspace(0.0, 200.0, 400)) min_p = std::min(min_p, grid.probability(t));
            ok = ok && min_p >= floor - 1e-3;
            detail += " min_P=" + fmt(min_p) + " floor=" + fmt(floor);
        }
        report(9, "stable regime bound states", ok, detail);
    } catch (const std::exception& e) {
        report(9, "stable regime bound states", false, e.what());
    }

    // 10. reset identity: literal iteration equals P(tau)^n
    try {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> tau_dist(0.1, 5.0);
        std::uniform_int_distribution<long> n_dist(1, 40);
        double max_rel = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const MeasurementSchedule sched{tau_dist(rng), n_dist(rng)};
            const SurvivalCurve curve = interrupted_curve(p, BareState::A, sched);
            const double p_tau = std::norm(survival_amplitude(p, BareState::A, sched.tau));
            const double expected = std::pow(p_tau, static_cast<double>(sched.n));
            max_rel = std::max(max_rel,
                               std::abs(curve.probabilities.back() - expected) / expected);
        }
        report(10, "reset identity P(tau)^n", max_rel <= 1e-12,
               "max_rel_dev=" + fmt(max_rel));
    } catch (const std::exception& e) {
        report(10, "reset identity P(tau)^n", false, e.what());
    }

    // 11. CLI determinism: two preset runs produce byte-identical CSV
    try {
        if (argc < 2) throw std::runtime_error("zeno-lab binary path not given on argv");
        const fs::path exe = argv[1];
        const fs::path base = fs::temp_directory_path() / "zeno-lab-acceptance";
        fs::remove_all(base);
        std::string csv[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path out = base / ("run" + std::to_string(run));
            fs::create_directories(out);
            const std::string cmd = "\"" + exe.string() +
                                    "\" survival --preset paper-figure-3 --out \"" +
                                    out.string() + "\" > /dev/null";
            if (std::system(cmd.c_str()) != 0)
                throw std::runtime_error("zeno-lab survival run failed");
            csv[run] = read_file(out / "survival.csv");
        }
        const bool ok = !csv[0].empty() && csv[0] == csv[1];
        report(11, "deterministic CSV output", ok,
               "bytes=" + std::to_string(csv[0].size()) +
                   (ok ? " identical" : " DIFFER"));
        fs::remove_all(base);
    } catch (const std::exception& e) {
        report(11, "deterministic CSV output", false, e.what());
    }

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
