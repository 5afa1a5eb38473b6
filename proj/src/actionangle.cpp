#include "foldsym/actionangle.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace foldsym {

const PeriodLattice& UniformizedRegion::nearest(const Chart& chart, const Vec& p) const {
    if (lattices.empty()) throw NumericsError("empty uniformized region");
    size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < grid.size(); ++i) {
        const double d = chart.distance(chart.normalize(grid[i]), chart.normalize(p));
        if (d < bd) {
            bd = d;
            best = i;
        }
    }
    return lattices[best];
}

UniformizedRegion uniformize(const IntegrableSystem& sys, const std::vector<Vec>& grid,
                             const UniformizeOptions& opts) {
    if (grid.empty()) throw ConfigError("uniformize: empty base grid");
    UniformizedRegion region;
    region.grid = grid;
    region.lattices.reserve(grid.size());

    for (size_t k = 0; k < grid.size(); ++k) {
        const Vec& b = grid[k];
        PeriodLattice lat;
        if (k == 0) {
            lat = period_lattice(sys, b, opts.lattice);
        } else {
            const PeriodLattice& warm = region.nearest(sys.chart(), b);
            lat = refine_lattice(sys, b, warm.basis, opts.lattice);
            // A jump of the refined basis against the warm start signals
            // monodromy inside the region.
            for (size_t i = 0; i < lat.basis.size(); ++i) {
                const double ref = std::max(1.0, warm.basis[i].norm());
                if ((lat.basis[i] - warm.basis[i]).norm() > opts.jump_tol * ref)
                    throw ContinuationError(
                        "uniformize: lattice basis jump at a grid node; split the region");
            }
        }
        // Unit-period verification of the uniformized fields.
        for (const auto& v : lat.basis) {
            if (lattice_residual(sys, b, v, opts.lattice.integrator) > opts.period_tol)
                throw NumericsError("uniformize: Y_i fails the unit-period check");
        }
        region.lattices.push_back(std::move(lat));
    }
    return region;
}

namespace {

// Nodes/weights for Gauss-Legendre on [0,1].
void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<size_t>(n), 0.0);
    w.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5)); // initial guess on [-1,1]
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
            }
            const double dp = n * (t * p0 - p1) / (t * t - 1.0);
            const double dt = p0 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
        }
        const double dp = n * (t * p0 - p1) / (t * t - 1.0);
        x[static_cast<size_t>(i)] = 0.5 * (1.0 - t); // map to [0,1], ascending
        w[static_cast<size_t>(i)] = 1.0 / ((1.0 - t * t) * dp * dp);
    }
}

Vec default_center(const Chart& chart) {
    Vec c(chart.dim());
    for (int i = 0; i < chart.dim(); ++i) {
        const Coord& co = chart.coord(i);
        c[i] = (co.kind == CoordKind::Angle) ? 0.0 : 0.5 * (co.lo + co.hi);
    }
    if (chart.has_z()) c[chart.z_index()] = 0.0;
    return c;
}

} // namespace

Vec primitive_covector(const SingularForm& form, const Vec& p, const Vec& center,
                       int gauss_nodes) {
    const Chart& chart = form.chart();
    const int d = chart.dim();
    if (!chart.contains(center))
        throw GeometryError("primitive center lies outside the chart box");

    std::vector<double> xs, ws;
    gauss_legendre_01(gauss_nodes, xs, ws);

    // Scaling velocity: linear coordinates head toward the center, angles
    // are frozen (the box is star-shaped in its non-angle coordinates).
    Vec v = Vec::Zero(d);
    for (int i = 0; i < d; ++i)
        if (chart.coord(i).kind == CoordKind::Linear) v[i] = p[i] - center[i];

    auto accumulate = [&](auto&& matrix_at) {
        Vec lam = Vec::Zero(d);
        for (int q = 0; q < gauss_nodes; ++q) {
            const double s = xs[static_cast<size_t>(q)];
            Vec hs = p;
            for (int i = 0; i < d; ++i)
                if (chart.coord(i).kind == CoordKind::Linear)
                    hs[i] = center[i] + s * (p[i] - center[i]);
            const Mat omega = matrix_at(hs);
            const Vec row = omega.transpose() * v; // (V^T Omega)_j
            for (int j = 0; j < d; ++j) {
                const double dscale = (chart.coord(j).kind == CoordKind::Linear) ? s : 1.0;
                lam[j] += ws[static_cast<size_t>(q)] * row[j] * dscale;
            }
        }
        return lam;
    };

    if (form.kind() != FormKind::BSymplectic) {
        return accumulate([&](const Vec& q) { return form.omega().matrix(q, d); });
    }

    // b-form: homotopy on the smooth part beta, log|t| alpha analytically
    // (alpha closed, its dt component does not enter the form).
    Vec lam = accumulate([&](const Vec& q) { return form.beta().matrix(q, d); });
    const double t = chart.z_value(p);
    if (t == 0.0) throw NumericsError("b-form primitive evaluated on Z");
    Vec a = form.alpha().covector(p, d);
    a[chart.z_index()] = 0.0;
    lam += std::log(std::abs(t)) * a;
    return lam;
}

ActionAngleChart::ActionAngleChart(IntegrableSystem sys, UniformizedRegion region,
                                   ActionAngleOptions opts)
    : sys_(std::move(sys)), region_(std::move(region)), opts_(std::move(opts)) {
    center_ = opts_.primitive_center ? *opts_.primitive_center : default_center(sys_.chart());
    if (!sys_.chart().contains(center_))
        throw GeometryError("action chart: primitive center outside the chart");
    for (int i = 0; i < sys_.n(); ++i)
        if (sys_.observable(i).is_bfun()) singular_index_ = i;
    if (!opts_.section_point) {
        opts_.section_point = sys_.chart().normalize(region_.grid.front());
    }
    if (opts_.section_coords.empty()) {
        // Default transversal section: pin every angle coordinate.
        for (int i = 0; i < sys_.chart().dim(); ++i)
            if (sys_.chart().coord(i).kind == CoordKind::Angle)
                opts_.section_coords.push_back(i);
    }
    if (static_cast<int>(opts_.section_coords.size()) != sys_.n())
        throw GeometryError("section must pin exactly n coordinates");
}

PeriodLattice ActionAngleChart::lattice_at(const Vec& p) const {
    const Chart& chart = sys_.chart();
    double bd = std::numeric_limits<double>::infinity();
    const PeriodLattice* nearest = nullptr;
    for (const auto& lat : cache_) {
        const double d = chart.distance(chart.normalize(lat.base), chart.normalize(p));
        if (d < bd) {
            bd = d;
            nearest = &lat;
        }
    }
    if (nearest && bd < 1e-9) return *nearest;
    const PeriodLattice& warm =
        nearest ? *nearest : region_.nearest(chart, p);
    PeriodLattice lat = refine_lattice(sys_, p, warm.basis, opts_.uniformize.lattice);
    cache_.push_back(lat);
    if (cache_.size() > 512) cache_.erase(cache_.begin());
    return lat;
}

Vec ActionAngleChart::actions(const Vec& p) const {
    const PeriodLattice lat = lattice_at(p);
    const int n = sys_.n();
    const int nodes = opts_.loop_nodes;
    Vec sigma(n);
    for (int i = 0; i < n; ++i) {
        const Vec& lambda = lat.basis[static_cast<size_t>(i)];
        // gamma(s) = Phi(s lambda)(p), gamma'(s) = sum_j lambda_j X_j.
        double integral = 0.0;
        Vec q = p;
        const double ds = 1.0 / nodes;
        for (int k = 0; k < nodes; ++k) {
            const Vec qn = sys_.chart().normalize(q);
            Vec gdot = Vec::Zero(sys_.chart().dim());
            for (int j = 0; j < n; ++j)
                if (lambda[j] != 0.0) gdot += lambda[j] * sys_.field(j).eval(qn);
            const Vec lam = primitive_covector(sys_.form(), qn, center_, opts_.gauss_nodes);
            integral += lam.dot(gdot) * ds; // periodic trapezoid
            if (k + 1 < nodes) q = joint_flow(sys_, q, Vec(ds * lambda), opts_.integrator);
        }
        // Orientation: with theta_i the Y_i flow times, omega = sum d theta_i
        // ^ d sigma_i fixes sigma_i = - loop integral of the primitive.
        sigma[i] = -integral;
    }
    return sigma;
}

Vec ActionAngleChart::angles(const Vec& p) const {
    const Chart& chart = sys_.chart();
    const int n = sys_.n();
    const Vec& sec = *opts_.section_point;

    // Newton shooting: find tau with Phi(tau)(p) on the section.
    auto residual = [&](const Vec& tau) {
        const Vec q = chart.normalize(joint_flow(sys_, p, tau, opts_.integrator));
        Vec r(n);
        for (int k = 0; k < n; ++k) {
            const int ci = opts_.section_coords[static_cast<size_t>(k)];
            r[k] = chart.coord_delta(ci, sec[ci], q[ci]);
        }
        return r;
    };
    Vec tau = Vec::Zero(n);
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
        const Vec r = residual(tau);
        if (r.norm() < 1e-10) {
            converged = true;
            break;
        }
        Mat j(n, n);
        const double fd = 1e-7;
        for (int k = 0; k < n; ++k) {
            Vec tp = tau;
            tp[k] += fd;
            j.col(k) = (residual(tp) - r) / fd;
        }
        const Vec step = j.fullPivLu().solve(r);
        if (!step.allFinite()) break;
        tau -= step;
    }
    if (!converged)
        throw GeometryError("angle coordinates: shooting to the section did not converge "
                            "(section not transversal?)");

    const PeriodLattice lat = lattice_at(p);
    const Vec s = lat.basis_matrix().fullPivLu().solve(tau);
    Vec theta(n);
    for (int i = 0; i < n; ++i) {
        double v = -s[i];
        v -= std::floor(v);
        if (v >= 1.0) v -= 1.0;
        theta[i] = v;
    }
    return theta;
}

double ActionAngleChart::singular_action_coefficient() const {
    if (singular_index_ < 0) return 0.0;
    // The modular direction of the lattice: the basis vector's component
    // along the b observable, scaled by its log coefficient.
    const PeriodLattice& lat = region_.lattices.front();
    double best = 0.0;
    for (const auto& v : lat.basis)
        if (std::abs(v[singular_index_]) > std::abs(best)) best = v[singular_index_];
    return std::abs(best) * sys_.observable(singular_index_).c();
}

ActionAngleChart action_angle_chart(const IntegrableSystem& sys, const std::vector<Vec>& grid,
                                    ActionAngleOptions opts) {
    UniformizedRegion region = uniformize(sys, grid, opts.uniformize);
    return ActionAngleChart(sys, std::move(region), std::move(opts));
}

double normal_form_residual(const IntegrableSystem& sys, const ActionAngleChart& chart,
                            const std::vector<Vec>& samples,
                            const std::optional<Vec>& sigma_scale) {
    const Chart& ch = sys.chart();
    const int d = ch.dim();
    const int n = sys.n();
    double worst = 0.0;
    for (const Vec& p : samples) {
        Mat dtheta(n, d), dsigma(n, d);
        for (int j = 0; j < d; ++j) {
            const Coord& co = ch.coord(j);
            const double h = 1e-4 * (co.kind == CoordKind::Angle ? 1.0 : (co.hi - co.lo));
            Vec a = p, b = p;
            a[j] += h;
            b[j] -= h;
            const Vec ta = chart.angles(a), tb = chart.angles(b);
            const Vec sa = chart.actions(a), sb = chart.actions(b);
            for (int i = 0; i < n; ++i) {
                double dt = ta[i] - tb[i];
                dt -= std::round(dt); // angle differences mod 1
                dtheta(i, j) = dt / (2 * h);
                dsigma(i, j) = (sa[i] - sb[i]) / (2 * h);
            }
        }
        if (sigma_scale)
            for (int i = 0; i < n; ++i) dsigma.row(i) *= (*sigma_scale)[i];
        Mat r = (sys.form().kind() == FormKind::BSymplectic) ? sys.form().matrix(p)
                                                             : sys.form().omega().matrix(p, d);
        for (int i = 0; i < n; ++i)
            r -= dtheta.row(i).transpose() * dsigma.row(i) -
                 dsigma.row(i).transpose() * dtheta.row(i);
        worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
    return worst;
}

double modular_period(FormPtr form, const Vec& z_point, double budget, double return_tol) {
    if (form->kind() != FormKind::BSymplectic)
        throw ConfigError("modular_period is defined for b-symplectic forms");
    const Chart& chart = form->chart();
    Vec p0 = z_point;
    p0[chart.z_index()] = 0.0;
    p0 = chart.normalize(p0);

    HamiltonianField xmod(Observable::bfun(1.0, ScalarField::constant(0.0), "log|t|"), form);
    auto field = [&xmod](const Vec& q) { return xmod.eval(q); };

    // March in small steps, then bisect the first close-return window.
    const double dt = 0.01;
    Vec q = p0;
    double prev_d = 0.0;
    bool armed = false;
    IntegratorOptions iopts;
    for (double t = dt; t <= budget + 1e-12; t += dt) {
        q = flow_to(field, chart, q, dt, iopts);
        const double dist = chart.distance(chart.normalize(q), p0);
        if (t > 2 * dt && armed && dist > prev_d && prev_d < 0.2) {
            // Local minimum passed near t - dt: refine by golden section.
            double lo = t - 2 * dt, hi = t;
            auto dist_at = [&](double s) {
                const Vec qq = flow_to(field, chart, p0, s, iopts);
                return chart.distance(chart.normalize(qq), p0);
            };
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double a = lo, b = hi;
            double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
            double f1 = dist_at(x1), f2 = dist_at(x2);
            for (int it = 0; it < 60; ++it) {
                if (f1 < f2) {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - gr * (b - a);
                    f1 = dist_at(x1);
                } else {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + gr * (b - a);
                    f2 = dist_at(x2);
                }
                if (b - a < 1e-12) break;
            }
            const double tstar = 0.5 * (a + b);
            if (dist_at(tstar) < return_tol) return tstar;
        }
        armed = dist < prev_d;
        prev_d = dist;
    }
    throw NumericsError("modular vector field did not return within the budget");
}

} // namespace foldsym
