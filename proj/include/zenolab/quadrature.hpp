// quadrature.hpp -- adaptive Gauss panels and the oscillation-resolving node grid
#pragma once

#include <Eigen/Core>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace zenolab::quad {

using RealFn = std::function<double(double)>;

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive integration of f on [a, b] to absolute tolerance tol.
// Each panel is estimated with nested 7- and 15-point Gauss rules; panels
// are split until the local error estimates sum below tol.  Breakpoints
// force initial panel boundaries (pass singular/peaked abscissae here).
double integrate(const RealFn& f, double a, double b, double tol,
                 std::span<const double> breakpoints = {});

// Cauchy principal value of  int_a^b g(omega)/(lambda-omega) domega  with
// a < lambda < b, by subtraction of g(lambda):
//   int (g(omega)-g(lambda))/(lambda-omega) + g(lambda)*log((lambda-a)/(b-lambda)).
// g_deriv is used only to evaluate the subtracted integrand at omega=lambda.
double principal_value(const RealFn& g, double g_at_lambda, double g_deriv_at_lambda,
                       double lambda, double a, double b, double tol,
                       std::span<const double> breakpoints = {});

// A fixed quadrature grid: 15 Gauss-Legendre nodes per panel.  Built once,
// then reused for many integrands/times.
struct PanelGrid {
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;

    Eigen::Index size() const { return nodes.size(); }

    // Integrate tabulated values (same ordering as nodes).
    double apply(const Eigen::ArrayXd& values) const {
        return (weights * values).sum();
    }
};

// Builds a panel grid on [a, b]:
//  1. panels from adaptive refinement of f (so the grid resolves f to tol),
//     seeded at the given breakpoints;
//  2. every panel further split so its width is at most max_width
//     (pass +inf to skip; used to resolve e^{-i*lambda*t} oscillation).
// Throws BudgetError if more than max_panels panels would be needed.
PanelGrid build_panel_grid(const RealFn& f, double a, double b, double tol,
                           std::span<const double> breakpoints,
                           double max_width, long max_panels);

} // namespace zenolab::quad
