#include "zenolab/evolution.hpp"

#include <cmath>
#include <numbers>

namespace zenolab {
namespace {

constexpr double kLambdaFloor = 1e-8;

// Panels are 15-node Gauss rules; width <= 1.5 periods keeps >= 10 nodes
// per oscillation of e^{-i lambda t}.
double oscillation_max_width(double t_max) {
    if (t_max <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.5 * 2.0 * std::numbers::pi / t_max;
}

std::vector<double> density_breakpoints(const ModelParams& p) {
    std::vector<double> brk{p.omega_0};
    for (double center : {p.E_A, p.E_B}) {
        if (center <= 0.0 || center >= p.omega_max) continue;
        const double width = std::numbers::pi * form_factor_sq(p, std::max(center, kLambdaFloor));
        brk.push_back(center);
        for (double k : {1.0, 5.0, 25.0}) {
            if (center - k * width > 0.0) brk.push_back(center - k * width);
            if (center + k * width < p.omega_max) brk.push_back(center + k * width);
        }
    }
    return brk;
}

} // namespace

SpectralGrid::SpectralGrid(const ModelParams& params, BareState initial, double t_max,
                           int refine_factor)
    : initial_(initial), t_max_(t_max) {
    params.validate();
    if (t_max < 0.0) throw std::invalid_argument("SpectralGrid: t_max must be >= 0");
    if (refine_factor < 1) throw std::invalid_argument("SpectralGrid: refine_factor must be >= 1");

    if (params.sigma == 0.0) {
        // Continuum decoupled: the physical spectrum of the A/B sector is the
        // exact two-level diagonalization.
        const double half_split = 0.5 * (params.E_B - params.E_A);
        const double mean = 0.5 * (params.E_A + params.E_B);
        const double r = std::hypot(half_split, params.Omega);
        const double w_lo = initial == BareState::A
                                ? 0.5 * (1.0 + half_split / std::max(r, 1e-300))
                                : 0.5 * (1.0 - half_split / std::max(r, 1e-300));
        discrete_energy_ = {mean - r, mean + r};
        discrete_weight_ = {w_lo, 1.0 - w_lo};
        if (r == 0.0) { discrete_energy_ = {mean}; discrete_weight_ = {1.0}; }
        return;
    }

    auto dens = [&](double l) {
        return initial == BareState::A ? density_A(params, l) : density_B(params, l);
    };
    const auto brk = density_breakpoints(params);
    const double tol = params.eps_tol / (refine_factor * refine_factor);
    const double max_w = oscillation_max_width(t_max) / refine_factor;
    quad::PanelGrid grid = quad::build_panel_grid(dens, kLambdaFloor, params.omega_max,
                                                  tol, brk, max_w, params.max_panels);
    lambda_ = std::move(grid.nodes);
    weight_density_.resize(lambda_.size());
    for (Eigen::Index i = 0; i < lambda_.size(); ++i)
        weight_density_[i] = grid.weights[i] * dens(lambda_[i]);

    for (const BoundState& s : find_bound_states(params)) {
        const double mu = initial == BareState::A ? s.mu_A : s.mu_B;
        discrete_energy_.push_back(s.Lambda);
        discrete_weight_.push_back(mu * mu);
    }
}

Complex SpectralGrid::amplitude(double t) const {
    Complex acc{0.0, 0.0};
    if (lambda_.size() > 0) {
        const Eigen::ArrayXd phase = -t * lambda_;
        acc = Complex{(weight_density_ * phase.cos()).sum(),
                      (weight_density_ * phase.sin()).sum()};
    }
    for (size_t j = 0; j < discrete_energy_.size(); ++j)
        acc += discrete_weight_[j] *
               Complex{std::cos(discrete_energy_[j] * t), -std::sin(discrete_energy_[j] * t)};
    return acc;
}

double SpectralGrid::probability_second_derivative(double t) const {
    // A  = sum w e^{-i l t},  A' = sum (-i l) w e^{-i l t},  A'' = sum (-l^2) w e^{-i l t}
    Complex a{}, a1{}, a2{};
    auto accumulate = [&](double l, double w) {
        const Complex ph{std::cos(l * t), -std::sin(l * t)};
        a += w * ph;
        a1 += Complex{0.0, -l} * w * ph;
        a2 += -l * l * w * ph;
    };
    for (Eigen::Index i = 0; i < lambda_.size(); ++i) accumulate(lambda_[i], weight_density_[i]);
    for (size_t j = 0; j < discrete_energy_.size(); ++j)
        accumulate(discrete_energy_[j], discrete_weight_[j]);
    return 2.0 * (a2 * std::conj(a)).real() + 2.0 * std::norm(a1);
}

double SpectralGrid::closure() const { return amplitude(0.0).real(); }

Complex survival_amplitude(const ModelParams& p, BareState initial, double t) {
    if (t < 0.0) throw std::invalid_argument("survival_amplitude: t must be >= 0");
    return SpectralGrid(p, initial, t).amplitude(t);
}

SurvivalCurve survival_curve(const ModelParams& p, BareState initial,
                             const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("survival_curve: empty time list");
    for (size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0 || (i > 0 && times[i] < times[i - 1]))
            throw std::invalid_argument("survival_curve: times must be ascending and >= 0");
    }
    SpectralGrid grid(p, initial, times.back());
    SurvivalCurve curve;
    curve.initial = initial;
    curve.times = times;
    curve.amplitudes.reserve(times.size());
    curve.probabilities.reserve(times.size());
    for (double t : times) {
        const Complex a = grid.amplitude(t);
        curve.amplitudes.push_back(a);
        curve.probabilities.push_back(std::norm(a));
    }
    return curve;
}

double short_time_exponent(const ModelParams& p, BareState initial) {
    double t_lo = 1e-3, t_hi = 1e-2;
    SpectralGrid grid(p, initial, t_hi);
    const double p0 = grid.probability(0.0);
    for (int attempt = 0; attempt < 20; ++attempt) {
        constexpr int n = 16;
        std::vector<double> lx, ly;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (n - 1));
            const double y = 1.0 - grid.probability(t) / p0;
            if (!(y > 0.0)) { ok = false; break; }
            lx.push_back(std::log(t));
            ly.push_back(std::log(y));
        }
        if (!ok) {
            t_lo *= 2.0; // below numerical resolution of 1-P: shrink the window from the left
            t_hi *= 2.0;
            continue;
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < lx.size(); ++i) {
            sx += lx[i]; sy += ly[i]; sxx += lx[i] * lx[i]; sxy += lx[i] * ly[i];
        }
        const double m = static_cast<double>(lx.size());
        return (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    throw std::runtime_error("short_time_exponent: could not find a usable fit window");
}

} // namespace zenolab
