#include "zenolab/model.hpp"
#include "zenolab/quadrature.hpp"

#include <cmath>
#include <limits>

namespace zenolab {
namespace {

constexpr double kLambdaFloor = 1e-8; // public APIs keep lambda away from 0*log(0)

// d/domega |f(omega)|^2, analytic.
double form_factor_sq_deriv(const ModelParams& p, double omega) {
    if (omega <= 0.0) return 0.0;
    const double q = (omega - p.omega_0) * (omega - p.omega_0) + p.mu * p.mu;
    const double s = p.sigma * p.mu * p.mu;
    // g = s^2 * omega / q^2
    return s * s * (q - 4.0 * omega * (omega - p.omega_0)) / (q * q * q);
}

} // namespace

void ModelParams::validate() const {
    if (!(mu > 0.0)) throw std::invalid_argument("ModelParams: mu must be > 0");
    if (!(sigma >= 0.0)) throw std::invalid_argument("ModelParams: sigma must be >= 0");
    if (!(omega_0 > 0.0)) throw std::invalid_argument("ModelParams: omega_0 must be > 0");
    if (!(Omega >= 0.0)) throw std::invalid_argument("ModelParams: Omega must be real and >= 0");
    if (!(omega_max > omega_0 + 20.0 * mu))
        throw std::invalid_argument("ModelParams: omega_max must exceed omega_0 + 20*mu");
    if (!(eps_tol > 0.0)) throw std::invalid_argument("ModelParams: eps_tol must be > 0");
    if (truncation_tail_bound(*this) > 1e-6)
        throw std::invalid_argument(
            "ModelParams: continuum tail beyond omega_max is not negligible; raise omega_max");
}

ModelParams paper_params() { return ModelParams{}; }

double form_factor(const ModelParams& p, double omega) {
    if (omega < 0.0) throw std::invalid_argument("form_factor: omega must be >= 0");
    const double q = (omega - p.omega_0) * (omega - p.omega_0) + p.mu * p.mu;
    return p.sigma * p.mu * p.mu * std::sqrt(omega) / q;
}

double form_factor_sq(const ModelParams& p, double omega) {
    const double f = form_factor(p, omega);
    return f * f;
}

double truncation_tail_bound(const ModelParams& p) {
    // For omega >= omega_max:  |f|^2 <= s^2*omega/(omega-omega_0)^4 with s = sigma*mu^2,
    // and |omega - lambda| >= omega_max - omega_0 - mu for lambda below the peak region.
    const double s = p.sigma * p.mu * p.mu;
    const double d = p.omega_max - p.omega_0;
    const double denom = p.omega_max - p.omega_0 - p.mu;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    // int_W^inf s^2*omega/(omega-omega_0)^4 domega = s^2*(d + omega_0/... ) -- bound omega <= 2(omega-omega_0) for omega >= 2*omega_0
    // keep it simple: omega/(omega-omega_0)^4 <= (1 + omega_0/d)/(omega-omega_0)^3
    const double integral = s * s * (1.0 + p.omega_0 / d) / (2.0 * d * d);
    return integral / denom;
}

double pv_integral(const ModelParams& p, double lambda) {
    if (!(lambda >= kLambdaFloor && lambda < p.omega_max))
        throw std::invalid_argument("pv_integral: lambda must lie in [1e-8, omega_max)");
    auto g = [&](double w) { return form_factor_sq(p, w); };
    const double brk[] = {p.omega_0};
    return quad::principal_value(g, form_factor_sq(p, lambda),
                                 form_factor_sq_deriv(p, lambda), lambda, 0.0,
                                 p.omega_max, p.eps_tol, brk);
}

Complex beta_plus(const ModelParams& p, double lambda) {
    if (!(lambda >= kLambdaFloor && lambda < p.omega_max))
        throw std::invalid_argument("beta_plus: lambda must lie in [1e-8, omega_max)");
    if (lambda == p.E_A)
        throw std::domain_error("beta_plus: pole at lambda == E_A; use the pole-safe densities");
    const double re = lambda - p.E_B - p.Omega * p.Omega / (lambda - p.E_A) -
                      pv_integral(p, lambda);
    const double im = M_PI * form_factor_sq(p, lambda); // Sokhotski-Plemelj
    return {re, im};
}

double beta_real(const ModelParams& p, double lambda) {
    if (!(lambda < 0.0))
        throw std::invalid_argument("beta_real: lambda must be < 0 (use beta_plus above threshold)");
    if (lambda == p.E_A)
        throw std::domain_error("beta_real: pole at lambda == E_A");
    auto integrand = [&](double w) { return form_factor_sq(p, w) / (lambda - w); };
    const double brk[] = {p.omega_0};
    const double integral = quad::integrate(integrand, 0.0, p.omega_max, p.eps_tol, brk);
    return lambda - p.E_B - p.Omega * p.Omega / (lambda - p.E_A) - integral;
}

double beta_derivative(const ModelParams& p, double lambda) {
    if (!(lambda < 0.0))
        throw std::invalid_argument("beta_derivative: lambda must be < 0");
    auto integrand = [&](double w) {
        const double d = lambda - w;
        return form_factor_sq(p, w) / (d * d);
    };
    const double brk[] = {p.omega_0};
    const double integral = quad::integrate(integrand, 0.0, p.omega_max, p.eps_tol, brk);
    const double dA = lambda - p.E_A;
    return 1.0 + p.Omega * p.Omega / (dA * dA) + integral;
}

} // namespace zenolab
