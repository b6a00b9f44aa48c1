// zeno.hpp -- measurement-induced resets: Zeno / anti-Zeno classification
#pragma once

#include "zenolab/evolution.hpp"

#include <optional>
#include <vector>

namespace zenolab {

/// Reset every tau, n times; effective horizon T = n*tau.
struct MeasurementSchedule {
    double tau = 1.0;
    long n = 1;

    void validate() const {
        if (!(tau > 0.0)) throw std::invalid_argument("MeasurementSchedule: tau must be > 0");
        if (n < 1) throw std::invalid_argument("MeasurementSchedule: n must be >= 1");
    }
};

enum class ZenoClass { Zeno, AntiZeno, Neutral };

const char* to_string(ZenoClass c);

struct ZenoVerdict {
    double tau = 0.0;
    double p_measured = 0.0;   // P(tau)^n at the comparison horizon n*tau
    double p_unmeasured = 0.0; // unmeasured P(n*tau)
    ZenoClass classification = ZenoClass::Neutral;
    double margin = 0.0;       // p_measured - p_unmeasured
};

constexpr double kDefaultMarginThreshold = 1e-3;

// The literal reset procedure: evolve for tau, zero the components that appeared,
// continue from the un-normalized state.  Returns the effective curve sampled at
// (k*tau, |A(tau)|^{2k}) for k = 0..n, interruption periods excised.
SurvivalCurve interrupted_curve(const ModelParams& p, BareState initial,
                                const MeasurementSchedule& schedule);

// Gamma_eff(tau) = -ln P(tau) / tau, so that P_measured(n*tau) = exp(-Gamma_eff*n*tau).
double effective_rate(const ModelParams& p, BareState initial, double tau);

// For each tau, compares P(tau)^n against unmeasured P(n*tau) with n the largest
// integer such that n*tau <= T (n >= 1).
std::vector<ZenoVerdict> tau_scan(const ModelParams& p, BareState initial,
                                  const std::vector<double>& tau_grid, double T,
                                  double margin_threshold = kDefaultMarginThreshold);

// First sign change of d^2P/dt^2 inside (t_lo, t_hi); std::nullopt when the
// window contains no inflection.
std::optional<double> find_inflection(const ModelParams& p, BareState initial,
                                      double t_lo, double t_hi);

// First time the unmeasured curve crosses 1/e (searched on (0, t_limit]).
double one_over_e_time(const ModelParams& p, BareState initial, double t_limit);

} // namespace zenolab
