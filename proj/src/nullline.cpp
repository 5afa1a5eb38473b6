#include "foldsym/nullline.hpp"

#include <cmath>

namespace foldsym {

namespace {

// Unit null-line direction with sign continuity against the previous one.
class OrientedNullField {
public:
    OrientedNullField(const SingularForm& form, Vec first_dir)
        : form_(form), prev_(std::move(first_dir)) {}

    Vec operator()(const Vec& p) {
        Vec v = form_.null_line(p);
        if (prev_.size() && v.dot(prev_) < 0) v = -v;
        prev_ = v;
        return v;
    }

private:
    const SingularForm& form_;
    Vec prev_;
};

} // namespace

NullLineResult null_line_closed_orbits(const SingularForm& form, const std::vector<Vec>& seeds,
                                       const NullLineOptions& opts) {
    if (form.kind() != FormKind::Folded)
        throw ConfigError("null-line orbits are defined for folded forms");
    const Chart& chart = form.chart();
    const int it = chart.z_index();

    NullLineResult result;
    result.n_seeds = static_cast<int>(seeds.size());

    for (const Vec& seed0 : seeds) {
        Vec seed = chart.normalize(seed0);
        seed[it] = 0.0;

        OrientedNullField field(form, form.null_line(seed));
        auto rhs = [&field, it](const Vec& p) {
            Vec v = field(p);
            v[it] = 0.0; // stay on Z
            return v;
        };

        std::vector<Vec> points;
        points.push_back(seed);
        Vec q = seed;
        bool closed = false;
        double period = 0.0;
        double prev_d = 0.0;
        bool armed = false;
        const int nsteps = static_cast<int>(std::ceil(opts.max_arc / opts.step));
        for (int k = 1; k <= nsteps; ++k) {
            q = flow_to(rhs, chart, q, opts.step, opts.integrator);
            const double arc = k * opts.step;
            points.push_back(chart.normalize(q));
            const double dist = chart.distance(chart.normalize(q), seed);
            if (arc > opts.min_arc + opts.step && armed && dist > prev_d &&
                prev_d < 10 * opts.close_tol) {
                // Refine the minimum near arc - step by golden section.
                auto dist_at = [&](double s) {
                    OrientedNullField f2(form, form.null_line(seed));
                    auto r2 = [&f2, it](const Vec& p) {
                        Vec v = f2(p);
                        v[it] = 0.0;
                        return v;
                    };
                    const Vec z = flow_to(r2, chart, seed, s, opts.integrator);
                    return chart.distance(chart.normalize(z), seed);
                };
                double a = arc - 2 * opts.step, b = arc;
                const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
                double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
                double f1 = dist_at(x1), f2v = dist_at(x2);
                for (int g = 0; g < 50 && (b - a) > 1e-11; ++g) {
                    if (f1 < f2v) {
                        b = x2;
                        x2 = x1;
                        f2v = f1;
                        x1 = b - gr * (b - a);
                        f1 = dist_at(x1);
                    } else {
                        a = x1;
                        x1 = x2;
                        f1 = f2v;
                        x2 = a + gr * (b - a);
                        f2v = dist_at(x2);
                    }
                }
                const double tstar = 0.5 * (a + b);
                if (dist_at(tstar) < opts.close_tol) {
                    closed = true;
                    period = tstar;
                    break;
                }
            }
            armed = dist < prev_d;
            prev_d = dist;
        }
        if (!closed && nsteps * opts.step >= opts.max_arc) result.budget_exhausted = true;
        if (!closed) continue;
        ++result.n_closed_seeds;

        // Deduplicate against already recorded orbits.
        bool dup = false;
        for (const auto& orbit : result.closed) {
            double dmin = std::numeric_limits<double>::infinity();
            for (const auto& pt : orbit.points)
                dmin = std::min(dmin, chart.distance(pt, seed));
            if (dmin < opts.dedup_tol) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            ClosedOrbit orbit;
            orbit.seed = seed;
            orbit.period = period;
            orbit.points = std::move(points);
            result.closed.push_back(std::move(orbit));
        }
    }
    return result;
}

} // namespace foldsym
