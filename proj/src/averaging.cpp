#include "foldsym/averaging.hpp"

#include <cmath>

namespace foldsym {

namespace {

ScalarField sum_over_orbit(const Chart& chart, const ScalarField& f, const PointMap& action,
                           int k) {
    auto chart_ptr = &chart; // charts outlive the fields built on them
    ScalarField out;
    out.value = [f, action, k, chart_ptr](const Vec& p) {
        double s = f.value(p);
        Vec q = p;
        for (int j = 1; j < k; ++j) {
            q = chart_ptr->normalize(action(q));
            s += f.value(q);
        }
        return s;
    };
    return out;
}

} // namespace

AveragingResult average_invariant_function(const Chart& chart, const ScalarField& f,
                                           const PointMap& action, int k,
                                           const AveragingOptions& opts) {
    if (k < 1) throw ConfigError("averaging: order must be positive");
    const auto samples = interior_samples(chart, opts.n_samples, opts.seed);

    // Verified order: phi^k = id on samples.
    double worst = 0.0;
    for (const auto& p : samples) {
        Vec q = p;
        for (int j = 0; j < k; ++j) q = chart.normalize(action(q));
        worst = std::max(worst, chart.distance(q, chart.normalize(p)));
    }
    if (worst > opts.order_tol)
        throw ConfigError("averaging: action does not have the declared order (|phi^k - id| = " +
                          std::to_string(worst) + ")");

    auto evaluate = [&](const ScalarField& input, AveragingResult& res) {
        res.averaged = sum_over_orbit(chart, input, action, k);
        res.invariance_residual = 0.0;
        res.non_constancy = 0.0;
        for (const auto& p : samples) {
            const Vec q = chart.normalize(action(p));
            res.invariance_residual = std::max(
                res.invariance_residual, std::abs(res.averaged.value(q) - res.averaged.value(p)));
            res.non_constancy =
                std::max(res.non_constancy, differential(chart, res.averaged, p).norm());
        }
    };

    AveragingResult res;
    evaluate(f, res);
    if (res.non_constancy > opts.constancy_floor) return res;

    // Degenerate input averaged to a constant; retry with a deterministic
    // perturbation (square of the first linear coordinate, else cos of k
    // times the first angle).
    int lin = -1, ang = -1;
    for (int i = 0; i < chart.dim(); ++i) {
        if (chart.coord(i).kind == CoordKind::Linear && lin < 0) lin = i;
        if (chart.coord(i).kind == CoordKind::Angle && ang < 0) ang = i;
    }
    ScalarField bump;
    if (lin >= 0) {
        bump.value = [lin](const Vec& p) { return p[lin] * p[lin]; };
    } else {
        bump.value = [ang, k](const Vec& p) { return std::cos(2 * M_PI * k * p[ang]); };
    }
    const double scale = opts.perturbation;
    ScalarField perturbed;
    perturbed.value = [f, bump, scale](const Vec& p) {
        return f.value(p) + scale * bump.value(p);
    };
    evaluate(perturbed, res);
    res.perturbed = true;
    if (res.non_constancy <= opts.constancy_floor)
        throw NumericsError("averaging: output constant even after perturbation");
    return res;
}

} // namespace foldsym
