#include "zenolab/evolution.hpp"
#include "zenolab/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace zenolab;

TEST_CASE("closure: A(0) is 1 up to quadrature error") {
    const ModelParams p = paper_params();
    for (BareState s : {BareState::A, BareState::B}) {
        SpectralGrid grid(p, s, 10.0);
        CHECK(grid.closure() == doctest::Approx(1.0).epsilon(1e-7));
        CHECK(std::abs(grid.amplitude(0.0).imag()) < 1e-12);
    }
}

TEST_CASE("frozen value: P_A(10) with paper parameters") {
    const ModelParams p = paper_params();
    CHECK(std::norm(survival_amplitude(p, BareState::A, 10.0)) ==
          doctest::Approx(0.8701848674).epsilon(1e-5));
}

TEST_CASE("conjugate symmetry: A(-t) = conj(A(t))") {
    SpectralGrid grid(paper_params(), BareState::A, 5.0);
    for (double t : {0.5, 2.0, 5.0}) {
        const Complex fwd = grid.amplitude(t), bwd = grid.amplitude(-t);
        CHECK(bwd.real() == doctest::Approx(fwd.real()).epsilon(1e-13));
        CHECK(bwd.imag() == doctest::Approx(-fwd.imag()).epsilon(1e-13));
    }
}

TEST_CASE("sigma = 0 reduces to the exact two-level oscillation") {
    ModelParams p = paper_params();
    p.sigma = 0.0;
    SpectralGrid grid(p, BareState::A, 50.0);
    for (double t = 0.0; t <= 50.0; t += 1.7) {
        const auto rabi = oracle::rabi_closed_form(p, t);
        REQUIRE(rabi.in_validity_regime);
        CHECK(grid.probability(t) == doctest::Approx(rabi.value).epsilon(1e-12));
    }
}

TEST_CASE("grid refinement changes nothing beyond the tolerance") {
    const ModelParams p = paper_params();
    SpectralGrid coarse(p, BareState::A, 20.0);
    SpectralGrid fine(p, BareState::A, 20.0, 2);
    for (double t : {0.0, 1.0, 7.5, 14.0, 20.0})
        CHECK(fine.probability(t) == doctest::Approx(coarse.probability(t)).epsilon(1e-6));
}

TEST_CASE("survival_curve input validation") {
    const ModelParams p = paper_params();
    CHECK_THROWS_AS(survival_curve(p, BareState::A, {}), std::invalid_argument);
    CHECK_THROWS_AS(survival_curve(p, BareState::A, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(survival_curve(p, BareState::A, {-1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(survival_amplitude(p, BareState::A, -1.0), std::invalid_argument);
}

TEST_CASE("survival_curve agrees with pointwise amplitudes") {
    const ModelParams p = paper_params();
    const std::vector<double> times{0.0, 2.0, 5.0};
    const SurvivalCurve curve = survival_curve(p, BareState::B, times);
    REQUIRE(curve.times.size() == 3);
    for (size_t i = 0; i < times.size(); ++i)
        CHECK(curve.probabilities[i] == doctest::Approx(std::norm(curve.amplitudes[i])));
    CHECK(curve.probabilities[0] == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("panel budget errors surface as BudgetError") {
    ModelParams p = paper_params();
    p.max_panels = 20; // far below what t_max = 100 needs
    CHECK_THROWS_AS(SpectralGrid(p, BareState::A, 100.0), quad::BudgetError);
}

TEST_CASE("second derivative matches a finite difference of P") {
    SpectralGrid grid(paper_params(), BareState::A, 10.0);
    const double t = 4.0, h = 1e-4;
    const double fd = (grid.probability(t + h) - 2.0 * grid.probability(t) +
                       grid.probability(t - h)) / (h * h);
    CHECK(grid.probability_second_derivative(t) == doctest::Approx(fd).epsilon(1e-5));
}

TEST_CASE("short-time exponent is quadratic (Zeno region)") {
    CHECK(short_time_exponent(paper_params(), BareState::A) ==
          doctest::Approx(2.0).epsilon(0.05));
}
