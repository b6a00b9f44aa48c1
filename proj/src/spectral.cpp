#include "zenolab/spectral.hpp"
#include "zenolab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zenolab {
namespace {

constexpr double kLambdaFloor = 1e-8;

// lambda - E_B - PV + i*pi*g : beta_plus with the A-pole term left out.
Complex beta_reduced(const ModelParams& p, double lambda) {
    const double re = lambda - p.E_B - pv_integral(p, lambda);
    const double im = M_PI * form_factor_sq(p, lambda);
    return {re, im};
}

double clamp_lambda(const ModelParams& p, double lambda) {
    if (!(lambda > 0.0 && lambda < p.omega_max))
        throw std::invalid_argument("spectral density: lambda must lie in (0, omega_max)");
    return std::max(lambda, kLambdaFloor);
}

// breakpoints that concentrate quadrature panels on the resonances
std::vector<double> density_breakpoints(const ModelParams& p) {
    std::vector<double> brk{p.omega_0};
    for (double center : {p.E_A, p.E_B}) {
        if (center <= 0.0 || center >= p.omega_max) continue;
        const double width = M_PI * form_factor_sq(p, std::max(center, kLambdaFloor));
        brk.push_back(center);
        for (double k : {1.0, 5.0, 25.0}) {
            if (center - k * width > 0.0) brk.push_back(center - k * width);
            if (center + k * width < p.omega_max) brk.push_back(center + k * width);
        }
    }
    return brk;
}

} // namespace

Complex beta_plus_pole_safe(const ModelParams& p, double lambda) {
    lambda = clamp_lambda(p, lambda);
    return (lambda - p.E_A) * beta_reduced(p, lambda) - Complex{p.Omega * p.Omega, 0.0};
}

double density_A(const ModelParams& p, double lambda) {
    lambda = clamp_lambda(p, lambda);
    if (p.Omega == 0.0) return 0.0;
    const Complex d = beta_plus_pole_safe(p, lambda);
    return form_factor_sq(p, lambda) * p.Omega * p.Omega / std::norm(d);
}

double density_B(const ModelParams& p, double lambda) {
    lambda = clamp_lambda(p, lambda);
    if (p.Omega == 0.0) return form_factor_sq(p, lambda) / std::norm(beta_reduced(p, lambda));
    const Complex d = beta_plus_pole_safe(p, lambda);
    const double dA = lambda - p.E_A;
    return form_factor_sq(p, lambda) * dA * dA / std::norm(d);
}

double density_cross(const ModelParams& p, double lambda) {
    lambda = clamp_lambda(p, lambda);
    if (p.Omega == 0.0) return 0.0;
    const Complex d = beta_plus_pole_safe(p, lambda);
    return form_factor_sq(p, lambda) * p.Omega * (lambda - p.E_A) / std::norm(d);
}

ContinuumAmplitudes continuum_amplitudes(const ModelParams& p, double lambda) {
    lambda = clamp_lambda(p, lambda);
    const Complex d = beta_plus_pole_safe(p, lambda);
    const double f = form_factor(p, lambda);
    ContinuumAmplitudes out;
    out.lambda = lambda;
    out.mu_A = f * p.Omega / d;
    out.mu_B = f * (lambda - p.E_A) / d;
    return out;
}

std::vector<BoundState> find_bound_states(const ModelParams& p,
                                          const BoundStateSearch& search) {
    const double lambda_hi = -1e-6;
    double lambda_min = search.lambda_min;

    auto beta = [&](double x) { return beta_real(p, x); };

    for (int attempt = 0; attempt < 8; ++attempt) {
        // log-spaced bracket grid on (lambda_min, lambda_hi)
        std::vector<double> grid;
        grid.reserve(search.grid_points + 4);
        const double lo = std::log(-lambda_min), hi = std::log(-lambda_hi);
        for (int i = 0; i < search.grid_points; ++i) {
            const double u = lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(search.grid_points - 1);
            grid.push_back(-std::exp(u));
        }
        std::sort(grid.begin(), grid.end());
        // the A-pole of beta must never sit inside a bracket
        if (p.E_A < 0.0 && p.E_A > lambda_min) {
            const double delta = 1e-9 * std::max(1.0, std::abs(p.E_A));
            grid.push_back(p.E_A - delta);
            grid.push_back(p.E_A + delta);
            std::sort(grid.begin(), grid.end());
        }

        if (beta(grid.front()) > 0.0) {
            lambda_min *= 4.0; // root pushed past the search floor: widen and retry
            continue;
        }

        std::vector<BoundState> states;
        bool boundary_hit = false;
        for (size_t i = 0; i + 1 < grid.size(); ++i) {
            double a = grid[i], b = grid[i + 1];
            if (p.E_A > a && p.E_A < b) continue; // pole interval, not a root bracket
            double fa = beta(a), fb = beta(b);
            if (fa == 0.0 && i == 0) { boundary_hit = true; break; }
            if (fa * fb > 0.0) continue;

            // bisection down to a narrow bracket, then Newton polish
            for (int it = 0; it < 200 && (b - a) > search.root_tol; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = beta(m);
                if (fa * fm <= 0.0) { b = m; fb = fm; }
                else { a = m; fa = fm; }
            }
            double root = 0.5 * (a + b);
            for (int it = 0; it < 8; ++it) {
                const double fr = beta(root);
                const double dr = beta_derivative(p, root);
                const double step = fr / dr;
                const double next = root - step;
                if (next <= a || next >= b) break;
                root = next;
                if (std::abs(step) < 0.25 * search.root_tol) break;
            }

            const double bp = beta_derivative(p, root);
            BoundState s;
            s.Lambda = root;
            s.norm = 1.0 / std::sqrt(bp);
            s.mu_B = s.norm;
            s.mu_A = s.norm * p.Omega / (root - p.E_A);
            if (states.empty() || std::abs(states.back().Lambda - root) > 1e-8)
                states.push_back(s);
        }
        if (boundary_hit) {
            lambda_min *= 4.0;
            continue;
        }
        return states;
    }
    throw std::runtime_error("find_bound_states: beta has unexpected sign at the search floor");
}

std::array<PoleEstimate, 2> pole_estimates(const ModelParams& p) {
    if (!(p.E_A > 0.0 && p.E_B > 0.0))
        throw std::invalid_argument("pole_estimates: requires E_A, E_B > 0 (unstable regime)");
    auto width = [&](double e) { return M_PI * form_factor_sq(p, e); };
    return {PoleEstimate{p.E_A, width(p.E_A)}, PoleEstimate{p.E_B, width(p.E_B)}};
}

namespace {

double continuum_integral(const ModelParams& p, const std::function<double(double)>& dens) {
    const auto brk = density_breakpoints(p);
    return quad::integrate(dens, kLambdaFloor, p.omega_max, p.eps_tol, brk);
}

[[noreturn]] void closure_diagnostic(const char* what, double residual) {
    std::ostringstream os;
    os << what << ": completeness residual " << residual
       << " exceeds 100*eps_tol; quadrature or truncation is off";
    throw std::runtime_error(os.str());
}

} // namespace

double closure_sum(const ModelParams& p, BareState which) {
    auto dens = [&](double l) {
        return which == BareState::A ? density_A(p, l) : density_B(p, l);
    };
    double sum = continuum_integral(p, dens);
    for (const BoundState& s : find_bound_states(p)) {
        const double mu = which == BareState::A ? s.mu_A : s.mu_B;
        sum += mu * mu;
    }
    if (std::abs(sum - 1.0) > 100.0 * p.eps_tol)
        closure_diagnostic("closure_sum", std::abs(sum - 1.0));
    return sum;
}

Complex cross_sum(const ModelParams& p) {
    auto dens = [&](double l) { return density_cross(p, l); };
    double sum = continuum_integral(p, dens);
    for (const BoundState& s : find_bound_states(p)) sum += s.mu_A * s.mu_B;
    if (std::abs(sum) > 100.0 * p.eps_tol) closure_diagnostic("cross_sum", std::abs(sum));
    return {sum, 0.0};
}

} // namespace zenolab
