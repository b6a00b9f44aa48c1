#include "zenolab/zeno.hpp"
#include "zenolab/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace zenolab;

TEST_CASE("interrupted_curve is the power iteration of one period") {
    const ModelParams p = paper_params();
    const MeasurementSchedule sched{2.0, 5};
    const SurvivalCurve curve = interrupted_curve(p, BareState::A, sched);
    REQUIRE(curve.times.size() == 6);
    CHECK(curve.probabilities[0] == 1.0);
    const double p_tau = std::norm(survival_amplitude(p, BareState::A, sched.tau));
    for (size_t k = 0; k < curve.times.size(); ++k) {
        CHECK(curve.times[k] == doctest::Approx(2.0 * static_cast<double>(k)));
        CHECK(curve.probabilities[k] ==
              doctest::Approx(std::pow(p_tau, static_cast<double>(k))).epsilon(1e-13));
    }
}

TEST_CASE("schedule validation") {
    const ModelParams p = paper_params();
    CHECK_THROWS_AS(interrupted_curve(p, BareState::A, {0.0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(interrupted_curve(p, BareState::A, {1.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(effective_rate(p, BareState::A, -1.0), std::invalid_argument);
}

TEST_CASE("effective_rate matches the sigma = 0 closed form") {
    ModelParams p = paper_params();
    p.sigma = 0.0;
    for (double tau : {0.3, 1.0, 2.5}) {
        const auto rabi = oracle::rabi_closed_form(p, tau);
        const double expected = -std::log(rabi.value) / tau;
        CHECK(effective_rate(p, BareState::A, tau) ==
              doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("tau_scan validates its grid and classifies by margin") {
    const ModelParams p = paper_params();
    CHECK_THROWS_AS(tau_scan(p, BareState::A, {}, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(tau_scan(p, BareState::A, {2.0, 1.0}, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(tau_scan(p, BareState::A, {1.0}, -1.0), std::invalid_argument);

    const auto verdicts = tau_scan(p, BareState::A, {0.5, 1.0, 2.0}, 20.0);
    REQUIRE(verdicts.size() == 3);
    for (const auto& v : verdicts) {
        CHECK(v.p_measured > 0.0);
        CHECK(v.p_measured <= 1.0 + 1e-9);
        CHECK(v.margin == doctest::Approx(v.p_measured - v.p_unmeasured));
        const ZenoClass expect = v.margin > kDefaultMarginThreshold    ? ZenoClass::Zeno
                                 : v.margin < -kDefaultMarginThreshold ? ZenoClass::AntiZeno
                                                                       : ZenoClass::Neutral;
        CHECK(v.classification == expect);
    }
}

TEST_CASE("frequent resets freeze the two-level system (Zeno limit)") {
    ModelParams p = paper_params();
    p.sigma = 0.0;
    // Gamma_eff ~ (Omega^2) * tau for tau -> 0: the rate itself vanishes
    const double g_small = effective_rate(p, BareState::A, 0.05);
    const double g_large = effective_rate(p, BareState::A, 1.0);
    CHECK(g_small < g_large);
    CHECK(g_small == doctest::Approx(p.Omega * p.Omega * 0.05).epsilon(1e-2));
}

TEST_CASE("find_inflection: window and argument checks") {
    const ModelParams p = paper_params();
    CHECK_THROWS_AS(find_inflection(p, BareState::A, 5.0, 2.0), std::invalid_argument);

    // second inflection of the initial-A curve (after the short-time shoulder)
    const auto t = find_inflection(p, BareState::A, 2.0, 50.0);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(11.912).epsilon(5e-3));
}

TEST_CASE("find_inflection: pure exponential-like window reports none") {
    ModelParams p = paper_params();
    p.Omega = 0.0;
    CHECK_FALSE(find_inflection(p, BareState::B, 8.0, 30.0).has_value());
}

TEST_CASE("one_over_e_time: frozen values") {
    const ModelParams p = paper_params();
    CHECK(one_over_e_time(p, BareState::A, 60.0) == doctest::Approx(46.5).epsilon(0.01));

    ModelParams q = paper_params();
    q.Omega = 0.0;
    CHECK(one_over_e_time(q, BareState::B, 20.0) == doctest::Approx(9.95).epsilon(0.01));

    ModelParams r = paper_params();
    r.sigma = 0.0;
    r.Omega = 0.001; // oscillation never reaches 1/e
    CHECK_THROWS_AS(one_over_e_time(r, BareState::A, 10.0), std::runtime_error);
}
