#include "zenolab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <lapacke.h>

namespace zenolab::oracle {

DiscretizedModel build(const ModelParams& p, int N, double omega_max) {
    if (N < 2) throw std::invalid_argument("oracle::build: N must be >= 2");
    if (!(omega_max > 0.0)) throw std::invalid_argument("oracle::build: omega_max must be > 0");

    DiscretizedModel m;
    m.N = N;
    m.omega_max = omega_max;
    m.delta_omega = omega_max / N;
    m.grid.resize(N);
    for (int k = 0; k < N; ++k) m.grid[k] = (k + 0.5) * m.delta_omega;

    const int dim = N + 2;
    m.H = Eigen::MatrixXd::Zero(dim, dim);
    m.H(0, 0) = p.E_A;
    m.H(1, 1) = p.E_B;
    m.H(0, 1) = m.H(1, 0) = p.Omega;
    const double root_dw = std::sqrt(m.delta_omega);
    for (int k = 0; k < N; ++k) {
        const double c = form_factor(p, m.grid[k]) * root_dw;
        m.H(1, 2 + k) = m.H(2 + k, 1) = c;
        m.H(2 + k, 2 + k) = m.grid[k];
    }
    return m;
}

EigenSolution solve(const DiscretizedModel& model) {
    const int dim = model.N + 2;
    EigenSolution sol;
    sol.vectors = model.H; // dsyevd overwrites with eigenvectors
    sol.eigenvalues.resize(dim);
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', dim,
                                           sol.vectors.data(), dim,
                                           sol.eigenvalues.data());
    if (info != 0)
        throw std::runtime_error("oracle::solve: LAPACK dsyevd failed to converge");

    // dsyevd returns ascending eigenvalues; break exact ties by weight_A descending
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        if (sol.eigenvalues[i] != sol.eigenvalues[j])
            return sol.eigenvalues[i] < sol.eigenvalues[j];
        return sol.vectors(0, i) * sol.vectors(0, i) > sol.vectors(0, j) * sol.vectors(0, j);
    });
    bool permuted = false;
    for (int i = 0; i < dim; ++i)
        if (order[i] != i) { permuted = true; break; }
    if (permuted) {
        Eigen::VectorXd ev(dim);
        Eigen::MatrixXd vec(dim, dim);
        for (int i = 0; i < dim; ++i) {
            ev[i] = sol.eigenvalues[order[i]];
            vec.col(i) = sol.vectors.col(order[i]);
        }
        sol.eigenvalues = std::move(ev);
        sol.vectors = std::move(vec);
    }

    sol.weights_A = sol.vectors.row(0).array().square();
    sol.weights_B = sol.vectors.row(1).array().square();
    return sol;
}

double orthonormality_defect(const EigenSolution& sol) {
    const Eigen::Index dim = sol.vectors.rows();
    Eigen::MatrixXd gram = sol.vectors.transpose() * sol.vectors;
    gram.diagonal().array() -= 1.0;
    return gram.cwiseAbs().maxCoeff();
}

SurvivalCurve matrix_survival(const EigenSolution& sol, BareState initial,
                              const std::vector<double>& times) {
    const Eigen::VectorXd& w = initial == BareState::A ? sol.weights_A : sol.weights_B;
    SurvivalCurve curve;
    curve.initial = initial;
    curve.times = times;
    curve.amplitudes.reserve(times.size());
    curve.probabilities.reserve(times.size());
    for (double t : times) {
        const Eigen::ArrayXd phase = -t * sol.eigenvalues.array();
        const Complex a{(w.array() * phase.cos()).sum(), (w.array() * phase.sin()).sum()};
        curve.amplitudes.push_back(a);
        curve.probabilities.push_back(std::norm(a));
    }
    return curve;
}

LimitValue rabi_closed_form(const ModelParams& p, double t) {
    const double delta = 0.5 * (p.E_B - p.E_A);
    const double r2 = p.Omega * p.Omega + delta * delta;
    LimitValue out;
    out.in_validity_regime = (p.sigma == 0.0);
    if (r2 == 0.0) {
        out.value = 1.0;
        return out;
    }
    const double s = std::sin(std::sqrt(r2) * t);
    out.value = 1.0 - (p.Omega * p.Omega / r2) * s * s;
    return out;
}

LimitValue golden_rule_rate(const ModelParams& p) {
    LimitValue out;
    out.value = 2.0 * std::numbers::pi * form_factor_sq(p, p.E_B);
    out.in_validity_regime = (p.sigma * p.sigma * std::numbers::pi < 0.2 * p.mu);
    return out;
}

} // namespace zenolab::oracle
