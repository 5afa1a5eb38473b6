#ifndef FOLDSYM_INTEGRATOR_HPP
#define FOLDSYM_INTEGRATOR_HPP

#include <functional>

#include "foldsym/chart.hpp"

namespace foldsym {

using VectorFieldFn = std::function<Vec(const Vec&)>;

struct IntegratorOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.25;
    double min_step = 1e-14;
    long max_steps = 20000000;
    bool clamp_to_chart = true; // truncate when a linear coordinate leaves its bounds
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Vec> states; // angle coordinates unwrapped (winding kept)
    long steps = 0;
    long rejected = 0;
    bool truncated = false; // left the chart or blew up
    double tol = 0.0;

    const Vec& endpoint() const { return states.back(); }
    double end_time() const { return times.back(); }
    // Winding counts of the endpoint's angle coordinates relative to start.
    Eigen::VectorXi winding(const Chart& chart) const;
};

// Adaptive embedded Runge-Kutta 5(4) (Dormand-Prince) on chart coordinates.
// The field is evaluated on normalized points; states keep the unwrapped
// angles. record_every <= 0 keeps only accepted steps.
Trajectory integrate_flow(const VectorFieldFn& field, const Chart& chart, const Vec& p0,
                          double T, const IntegratorOptions& opts = {});

// Endpoint only.
Vec flow_to(const VectorFieldFn& field, const Chart& chart, const Vec& p0, double T,
            const IntegratorOptions& opts = {});

} // namespace foldsym

#endif
