// evolution.hpp -- survival amplitudes and probabilities of the bare states
#pragma once

#include "zenolab/model.hpp"
#include "zenolab/quadrature.hpp"
#include "zenolab/spectral.hpp"

#include <vector>

namespace zenolab {

struct SurvivalCurve {
    BareState initial = BareState::A;
    std::vector<double> times;
    std::vector<Complex> amplitudes;
    std::vector<double> probabilities; // |amplitudes[i]|^2, stored as computed
};

// Shared spectral decomposition of the chosen initial bare state: the continuum
// density tabulated on an oscillation-resolving quadrature grid plus discrete
// contributions (physical bound states, or the two-level spectrum when the
// continuum is decoupled at sigma == 0).  Built once per largest requested time,
// then reused for every evaluation.
class SpectralGrid {
  public:
    SpectralGrid(const ModelParams& params, BareState initial, double t_max,
                 int refine_factor = 1);

    // survival amplitude A(t) = int e^{-i lambda t} rho(lambda) dlambda + bound terms
    Complex amplitude(double t) const;
    double probability(double t) const { return std::norm(amplitude(t)); }

    // exact d^2P/dt^2 from spectral moments (no finite differences)
    double probability_second_derivative(double t) const;

    double closure() const; // A(0); deviates from 1 only by quadrature error
    double t_max() const { return t_max_; }
    BareState initial() const { return initial_; }

  private:
    BareState initial_;
    double t_max_;
    Eigen::ArrayXd lambda_;          // continuum nodes
    Eigen::ArrayXd weight_density_;  // quadrature weight * density at each node
    std::vector<double> discrete_energy_;
    std::vector<double> discrete_weight_;
};

// A(t) for a single time; builds a grid resolving oscillations up to t.
Complex survival_amplitude(const ModelParams& p, BareState initial, double t);

// Vectorized survival over an ascending, non-negative time list.
SurvivalCurve survival_curve(const ModelParams& p, BareState initial,
                             const std::vector<double>& times);

// Fits 1 - P(t) ~ c * t^p on a short-time log-log window and returns p
// (the quantum-Zeno quadratic region has p = 2).
double short_time_exponent(const ModelParams& p, BareState initial);

} // namespace zenolab
