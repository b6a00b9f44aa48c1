// spectral.hpp -- continuum spectral densities, bound states, pole estimates
#pragma once

#include "zenolab/model.hpp"

#include <array>
#include <vector>

namespace zenolab {

/// Bare-basis components of the physical continuum eigenstate at energy lambda.
struct ContinuumAmplitudes {
    double lambda = 0.0;
    Complex mu_A{};
    Complex mu_B{};
};

/// A real eigenvalue below threshold with its normalization 1/sqrt(beta'(Lambda)).
struct BoundState {
    double Lambda = 0.0;
    double norm = 0.0; // == mu_B
    double mu_A = 0.0;
    double mu_B = 0.0;
};

/// Weak-coupling resonance estimate: center on the real axis, width = pi*|f(center)|^2.
/// The decaying pole sits at center - i*width (sign convention: decay, not growth).
struct PoleEstimate {
    double center = 0.0;
    double width = 0.0;
};

// (lambda - E_A) * beta_plus(lambda), computed without dividing by (lambda - E_A).
Complex beta_plus_pole_safe(const ModelParams& p, double lambda);

// |mu_A|^2 = |f|^2 Omega^2 / |(lambda-E_A) beta_plus|^2.  Finite and continuous
// at lambda = E_A (removable singularity).
double density_A(const ModelParams& p, double lambda);

// |mu_B|^2 = |f|^2 / |beta_plus|^2 in the pole-safe combined form.
double density_B(const ModelParams& p, double lambda);

// Real-valued mu_A * conj(mu_B) = |f|^2 Omega (lambda-E_A) / |(lambda-E_A) beta_plus|^2.
double density_cross(const ModelParams& p, double lambda);

// Continuum eigenstate components at lambda (requires lambda != E_A when Omega > 0).
ContinuumAmplitudes continuum_amplitudes(const ModelParams& p, double lambda);

struct BoundStateSearch {
    double lambda_min = -50.0;
    int grid_points = 400;    // log-spaced bracket grid
    double root_tol = 1e-12;
};

// All real roots of beta on (lambda_min, 0), packaged with their normalizations.
// Returns an empty vector in the unstable regime (paper parameters).
std::vector<BoundState> find_bound_states(const ModelParams& p,
                                          const BoundStateSearch& search = {});

// Eq.-level weak-coupling estimates for the two resonance poles (requires E_A, E_B > 0).
std::array<PoleEstimate, 2> pole_estimates(const ModelParams& p);

// <X|X> expanded in the physical basis: continuum integral of density_X plus the
// bound-state weights.  Should be 1.
double closure_sum(const ModelParams& p, BareState which);

// <A|B> expanded in the physical basis.  Should be 0.
Complex cross_sum(const ModelParams& p);

} // namespace zenolab
