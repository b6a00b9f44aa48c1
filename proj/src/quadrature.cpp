#include "zenolab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zenolab::quad {
namespace {

struct Node { double x, w; };

constexpr Node kGauss7[] = {
    {-9.49107912342758486e-01, 1.29484966168870647e-01},
    {-7.41531185599394460e-01, 2.79705391489276589e-01},
    {-4.05845151377397184e-01, 3.81830050505118312e-01},
    {0.00000000000000000e+00, 4.17959183673468959e-01},
    {4.05845151377397184e-01, 3.81830050505118312e-01},
    {7.41531185599394460e-01, 2.79705391489276589e-01},
    {9.49107912342758486e-01, 1.29484966168870647e-01},
};

constexpr Node kGauss15[] = {
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {0.00000000000000000e+00, 2.02578241925560898e-01},
    {2.01194093997434514e-01, 1.98431485327111246e-01},
    {3.94151347077563385e-01, 1.86161000015561878e-01},
    {5.70972172608538830e-01, 1.66269205816993781e-01},
    {7.24417731360170070e-01, 1.39570677926153908e-01},
    {8.48206583410427206e-01, 1.07159220467171773e-01},
    {9.37273392400705951e-01, 7.03660474881080689e-02},
    {9.87992518020485377e-01, 3.07532419961186465e-02},
};

// 15-point value plus |G15-G7| error estimate on [a, b].
void panel_estimate(const RealFn& f, double a, double b, double& value, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double g7 = 0.0, g15 = 0.0;
    for (const Node& n : kGauss7) g7 += n.w * f(c + h * n.x);
    for (const Node& n : kGauss15) g15 += n.w * f(c + h * n.x);
    g7 *= h;
    g15 *= h;
    value = g15;
    err = std::abs(g15 - g7);
}

struct Interval { double a, b, value, err; };

// Shared adaptive driver.  Returns the final interval list (sorted) when
// out_intervals is non-null.
double adapt(const RealFn& f, double a, double b, double tol,
             std::span<const double> breakpoints,
             std::vector<Interval>* out_intervals, long max_intervals) {
    std::vector<double> edges{a, b};
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    std::sort(edges.begin(), edges.end());

    std::vector<Interval> work;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        Interval iv{edges[i], edges[i + 1], 0, 0};
        if (iv.b <= iv.a) continue;
        panel_estimate(f, iv.a, iv.b, iv.value, iv.err);
        work.push_back(iv);
    }

    const int max_rounds = 60;
    for (int round = 0; round < max_rounds; ++round) {
        double total_err = 0.0;
        for (const Interval& iv : work) total_err += iv.err;
        if (total_err <= tol) break;

        // split every interval whose error exceeds its width-proportional share
        std::vector<Interval> next;
        next.reserve(work.size() * 2);
        const double share = 0.5 * tol / static_cast<double>(work.size());
        bool split_any = false;
        for (const Interval& iv : work) {
            const double m = 0.5 * (iv.a + iv.b);
            if (iv.err > share && m > iv.a && m < iv.b) {
                Interval l{iv.a, m, 0, 0}, r{m, iv.b, 0, 0};
                panel_estimate(f, l.a, l.b, l.value, l.err);
                panel_estimate(f, r.a, r.b, r.value, r.err);
                next.push_back(l);
                next.push_back(r);
                split_any = true;
            } else {
                next.push_back(iv);
            }
        }
        work.swap(next);
        if (!split_any) break;
        if (static_cast<long>(work.size()) > max_intervals)
            throw BudgetError("adaptive quadrature exceeded its panel budget");
    }

    double total = 0.0;
    for (const Interval& iv : work) total += iv.value;
    if (out_intervals) *out_intervals = std::move(work);
    return total;
}

} // namespace

double integrate(const RealFn& f, double a, double b, double tol,
                 std::span<const double> breakpoints) {
    if (!(b > a)) return 0.0;
    return adapt(f, a, b, tol, breakpoints, nullptr, 1000000);
}

double principal_value(const RealFn& g, double g_at_lambda, double g_deriv_at_lambda,
                       double lambda, double a, double b, double tol,
                       std::span<const double> breakpoints) {
    if (!(a < lambda && lambda < b))
        throw std::invalid_argument("principal_value: lambda must lie inside (a, b)");
    auto subtracted = [&](double w) {
        const double d = lambda - w;
        if (std::abs(d) < 1e-14 * std::max(1.0, std::abs(lambda)))
            return -g_deriv_at_lambda; // limit of (g(w)-g(lambda))/(lambda-w)
        return (g(w) - g_at_lambda) / d;
    };
    std::vector<double> brk(breakpoints.begin(), breakpoints.end());
    brk.push_back(lambda);
    const double log_term = g_at_lambda * std::log((lambda - a) / (b - lambda));
    return integrate(subtracted, a, b, tol, brk) + log_term;
}

PanelGrid build_panel_grid(const RealFn& f, double a, double b, double tol,
                           std::span<const double> breakpoints,
                           double max_width, long max_panels) {
    std::vector<Interval> intervals;
    adapt(f, a, b, tol, breakpoints, &intervals, max_panels);
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& u, const Interval& v) { return u.a < v.a; });

    // oscillation cap: split panels to the requested maximum width
    std::vector<std::pair<double, double>> panels;
    long count = 0;
    for (const Interval& iv : intervals) {
        const double width = iv.b - iv.a;
        long nsplit = 1;
        if (std::isfinite(max_width) && width > max_width)
            nsplit = static_cast<long>(std::ceil(width / max_width));
        count += nsplit;
        if (count > max_panels)
            throw BudgetError("oscillation-resolving grid exceeded the panel budget; "
                              "increase max_panels or reduce the largest time");
        for (long k = 0; k < nsplit; ++k) {
            const double pa = iv.a + width * static_cast<double>(k) / static_cast<double>(nsplit);
            const double pb = iv.a + width * static_cast<double>(k + 1) / static_cast<double>(nsplit);
            panels.emplace_back(pa, pb);
        }
    }

    PanelGrid grid;
    const Eigen::Index n = static_cast<Eigen::Index>(panels.size()) * 15;
    grid.nodes.resize(n);
    grid.weights.resize(n);
    Eigen::Index j = 0;
    for (const auto& [pa, pb] : panels) {
        const double c = 0.5 * (pa + pb), h = 0.5 * (pb - pa);
        for (const Node& nd : kGauss15) {
            grid.nodes[j] = c + h * nd.x;
            grid.weights[j] = h * nd.w;
            ++j;
        }
    }
    return grid;
}

} // namespace zenolab::quad
