#include "zenolab/zeno.hpp"

#include <cmath>

namespace zenolab {

const char* to_string(ZenoClass c) {
    switch (c) {
        case ZenoClass::Zeno: return "zeno";
        case ZenoClass::AntiZeno: return "anti-zeno";
        default: return "neutral";
    }
}

SurvivalCurve interrupted_curve(const ModelParams& p, BareState initial,
                                const MeasurementSchedule& schedule) {
    schedule.validate();
    const Complex a_tau = survival_amplitude(p, initial, schedule.tau);

    SurvivalCurve curve;
    curve.initial = initial;
    Complex c{1.0, 0.0}; // amplitude of the initial bare component, reset by reset
    for (long k = 0; k <= schedule.n; ++k) {
        curve.times.push_back(static_cast<double>(k) * schedule.tau);
        curve.amplitudes.push_back(c);
        curve.probabilities.push_back(std::norm(c));
        c *= a_tau;
    }
    return curve;
}

double effective_rate(const ModelParams& p, BareState initial, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("effective_rate: tau must be > 0");
    const double prob = std::norm(survival_amplitude(p, initial, tau));
    if (!(prob > 0.0))
        throw std::runtime_error("effective_rate: P(tau) is not positive");
    return -std::log(prob) / tau;
}

std::vector<ZenoVerdict> tau_scan(const ModelParams& p, BareState initial,
                                  const std::vector<double>& tau_grid, double T,
                                  double margin_threshold) {
    if (tau_grid.empty()) throw std::invalid_argument("tau_scan: empty tau grid");
    for (size_t i = 0; i < tau_grid.size(); ++i) {
        if (!(tau_grid[i] > 0.0) || (i > 0 && tau_grid[i] < tau_grid[i - 1]))
            throw std::invalid_argument("tau_scan: tau grid must be positive ascending");
    }
    if (!(T > 0.0)) throw std::invalid_argument("tau_scan: horizon T must be > 0");

    SpectralGrid grid(p, initial, T);
    std::vector<ZenoVerdict> verdicts;
    verdicts.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        const long n = std::max<long>(1, static_cast<long>(std::floor(T / tau)));
        const double horizon = static_cast<double>(n) * tau;
        ZenoVerdict v;
        v.tau = tau;
        v.p_measured = std::pow(grid.probability(tau), static_cast<double>(n));
        v.p_unmeasured = grid.probability(horizon);
        v.margin = v.p_measured - v.p_unmeasured;
        v.classification = v.margin > margin_threshold    ? ZenoClass::Zeno
                           : v.margin < -margin_threshold ? ZenoClass::AntiZeno
                                                          : ZenoClass::Neutral;
        verdicts.push_back(v);
    }
    return verdicts;
}

std::optional<double> find_inflection(const ModelParams& p, BareState initial,
                                      double t_lo, double t_hi) {
    if (!(0.0 <= t_lo && t_lo < t_hi))
        throw std::invalid_argument("find_inflection: need 0 <= t_lo < t_hi");
    SpectralGrid grid(p, initial, t_hi);

    constexpr int n = 2000;
    double prev_t = t_lo;
    double prev = grid.probability_second_derivative(t_lo);
    for (int i = 1; i <= n; ++i) {
        const double t = t_lo + (t_hi - t_lo) * static_cast<double>(i) / n;
        const double cur = grid.probability_second_derivative(t);
        if (prev == 0.0) { prev = cur; prev_t = t; continue; }
        if (prev * cur < 0.0) {
            // bisect the crossing
            double a = prev_t, b = t, fa = prev;
            for (int it = 0; it < 80 && (b - a) > 1e-12 * t_hi; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = grid.probability_second_derivative(m);
                if (fa * fm <= 0.0) b = m;
                else { a = m; fa = fm; }
            }
            return 0.5 * (a + b);
        }
        prev = cur;
        prev_t = t;
    }
    return std::nullopt;
}

double one_over_e_time(const ModelParams& p, BareState initial, double t_limit) {
    SpectralGrid grid(p, initial, t_limit);
    const double target = std::exp(-1.0);
    constexpr int n = 4000;
    double prev_t = 0.0, prev = grid.probability(0.0);
    for (int i = 1; i <= n; ++i) {
        const double t = t_limit * static_cast<double>(i) / n;
        const double cur = grid.probability(t);
        if (prev >= target && cur < target) {
            // linear interpolation is enough here
            return prev_t + (prev - target) / (prev - cur) * (t - prev_t);
        }
        prev_t = t;
        prev = cur;
    }
    throw std::runtime_error("one_over_e_time: curve did not cross 1/e inside the window");
}

} // namespace zenolab
