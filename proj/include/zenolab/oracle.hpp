// oracle.hpp -- brute-force verification path: discretized Hamiltonian + closed forms
#pragma once

#include "zenolab/evolution.hpp"

#include <Eigen/Dense>

namespace zenolab::oracle {

/// Finite Hermitian realization of the model: basis ordering [A, B, omega_1..omega_N],
/// midpoint grid omega_k = (k-1/2)*domega with sqrt(domega) coupling weights.
struct DiscretizedModel {
    int N = 0;
    double omega_max = 0.0;
    double delta_omega = 0.0;
    Eigen::VectorXd grid;   // omega_k
    Eigen::MatrixXd H;      // (N+2) x (N+2), real symmetric
};

struct EigenSolution {
    Eigen::VectorXd eigenvalues;          // ascending
    Eigen::VectorXd weights_A, weights_B; // |<A|v_j>|^2, |<B|v_j>|^2
    Eigen::MatrixXd vectors;              // columns ordered like eigenvalues
};

DiscretizedModel build(const ModelParams& p, int N, double omega_max);

// Dense symmetric eigendecomposition (LAPACK divide-and-conquer).
EigenSolution solve(const DiscretizedModel& model);

// max |V^T V - I| entry: finite-dimensional orthonormality defect.
double orthonormality_defect(const EigenSolution& sol);

// P(t) = |sum_j e^{-i E_j t} w_j|^2, exact for the finite model.
SurvivalCurve matrix_survival(const EigenSolution& sol, BareState initial,
                              const std::vector<double>& times);

/// Closed-form limit value carrying a validity flag.
struct LimitValue {
    double value = 0.0;
    bool in_validity_regime = true;
};

// Two-level survival probability of the initial state A for sigma == 0:
//   P(t) = 1 - Omega^2/(Omega^2+Delta^2) * sin^2(sqrt(Omega^2+Delta^2) t),
// Delta = (E_B - E_A)/2.  Flagged invalid when sigma != 0.
LimitValue rabi_closed_form(const ModelParams& p, double t);

// Fermi golden rule decay rate 2*pi*|f(E_B)|^2 for B embedded in the continuum.
// Flagged invalid outside the weak-coupling regime (sigma^2 * pi not << mu).
LimitValue golden_rule_rate(const ModelParams& p);

} // namespace zenolab::oracle
