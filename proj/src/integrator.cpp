#include "foldsym/integrator.hpp"

#include <cmath>

#include "foldsym/errors.hpp"

namespace foldsym {

Eigen::VectorXi Trajectory::winding(const Chart& chart) const {
    Eigen::VectorXi w = Eigen::VectorXi::Zero(chart.dim());
    if (states.empty()) return w;
    for (int i = 0; i < chart.dim(); ++i)
        if (chart.coord(i).kind == CoordKind::Angle)
            w[i] = static_cast<int>(std::floor(states.back()[i]) - std::floor(states.front()[i]));
    return w;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

} // namespace

Trajectory integrate_flow(const VectorFieldFn& field, const Chart& chart, const Vec& p0,
                          double T, const IntegratorOptions& opts) {
    chart.check_point(p0);
    Trajectory traj;
    traj.tol = opts.rel_tol;

    const double dir = (T >= 0) ? 1.0 : -1.0;
    const double t_end = std::abs(T);

    auto rhs = [&](const Vec& y) { return Vec(dir * field(chart.normalize(y))); };

    double t = 0.0;
    Vec y = p0;
    traj.times.push_back(0.0);
    traj.states.push_back(y);
    if (t_end == 0.0) return traj;

    Vec k1 = rhs(y);
    double h = std::min(opts.max_step, t_end);
    {
        const double d0 = y.norm() + opts.abs_tol, d1 = k1.norm();
        if (d1 > 1e-12) h = std::min(h, 0.01 * d0 / d1 + 1e-6);
    }

    while (t < t_end) {
        h = std::min(h, t_end - t);
        if (h < opts.min_step)
            throw NumericsError("integrator step size underflow (possible blow-up)");

        const Vec k2 = rhs(y + h * (a21 * k1));
        const Vec k3 = rhs(y + h * (a31 * k1 + a32 * k2));
        const Vec k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const Vec k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Vec k6 = rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Vec ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Vec k7 = rhs(ynew);
        const Vec err_v = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double err = 0.0;
        for (int i = 0; i < y.size(); ++i) {
            const double sk = opts.abs_tol +
                              opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double r = err_v[i] / sk;
            err += r * r;
        }
        err = std::sqrt(err / static_cast<double>(y.size()));

        if (err <= 1.0 || h <= 4 * opts.min_step) {
            t += h;
            y = ynew;
            k1 = k7;
            ++traj.steps;
            if (traj.steps > opts.max_steps)
                throw NumericsError("integrator exceeded the step budget");
            traj.times.push_back(dir * t);
            traj.states.push_back(y);
            if (opts.clamp_to_chart && !chart.contains(chart.normalize(y))) {
                traj.truncated = true;
                break;
            }
        } else {
            ++traj.rejected;
        }
        const double fac = (err > 0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, fac));
        h = std::min(h, opts.max_step);
    }
    return traj;
}

Vec flow_to(const VectorFieldFn& field, const Chart& chart, const Vec& p0, double T,
            const IntegratorOptions& opts) {
    Trajectory tr = integrate_flow(field, chart, p0, T, opts);
    if (tr.truncated) throw NumericsError("flow left the chart before reaching T");
    return tr.endpoint();
}

} // namespace foldsym
