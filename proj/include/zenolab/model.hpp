// model.hpp -- physical parameters, form factor and the resolvent function beta
#pragma once

#include <complex>
#include <stdexcept>

namespace zenolab {

using Complex = std::complex<double>;

enum class BareState { A, B };

inline const char* to_string(BareState s) { return s == BareState::A ? "A" : "B"; }

/// The six physical parameters of the model plus numerical controls.
struct ModelParams {
    double E_A = 2.00;        // energy of bare state A
    double E_B = 2.10;        // energy of bare state B
    double Omega = 0.04;      // A<->B coupling, real and >= 0
    double sigma = 0.11;      // form-factor strength
    double mu = 0.30;         // form-factor width
    double omega_0 = 2.10;    // form-factor peak
    double omega_max = 10.0;  // continuum cutoff for all quadrature
    double eps_tol = 1e-9;    // absolute tolerance for quadrature/root-finding
    long max_panels = 200000; // oscillatory-integral panel budget

    // Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

// Figure-3 parameter set: E_A=2.00, E_B=2.10, omega_0=2.10, mu=0.30,
// sigma=0.11, Omega=0.04.
ModelParams paper_params();

// f(omega) = sigma*mu^2*sqrt(omega) / ((omega-omega_0)^2 + mu^2).
// Requires omega >= 0.
double form_factor(const ModelParams& p, double omega);

// |f(omega)|^2.
double form_factor_sq(const ModelParams& p, double omega);

// Analytic bound on the neglected tail integral(omega_max..inf) |f|^2/|omega-lambda| domega
// for lambda inside (0, omega_0 + mu).
double truncation_tail_bound(const ModelParams& p);

// Cauchy principal value  P int_0^omega_max |f(omega)|^2/(lambda-omega) domega
// by singularity subtraction.  Requires 1e-8 <= lambda < omega_max.
double pv_integral(const ModelParams& p, double lambda);

// beta(lambda + i0) = lambda - E_B - Omega^2/(lambda-E_A) - PV + i*pi*|f(lambda)|^2.
// Requires lambda in (0, omega_max) and lambda != E_A.
Complex beta_plus(const ModelParams& p, double lambda);

// beta(lambda) for lambda < 0 where the integral is regular.
// Requires lambda < 0 and lambda != E_A.
double beta_real(const ModelParams& p, double lambda);

// d(beta)/d(lambda) for lambda < 0:
//   1 + Omega^2/(lambda-E_A)^2 + int |f|^2/(lambda-omega)^2 domega.
double beta_derivative(const ModelParams& p, double lambda);

} // namespace zenolab
