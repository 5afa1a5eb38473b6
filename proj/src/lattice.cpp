#include "foldsym/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace foldsym {

Vec joint_flow(const IntegrableSystem& sys, const Vec& p0, const Vec& tau,
               const IntegratorOptions& opts) {
    if (tau.size() != sys.n())
        throw DimensionError("joint_flow: tau must have n components");
    Vec p = p0;
    // phi_1^{t1} o ... o phi_n^{tn}: apply the last flow first.
    for (int i = sys.n() - 1; i >= 0; --i) {
        if (tau[i] == 0.0) continue;
        const auto& xf = sys.field(i);
        p = flow_to([&xf](const Vec& q) { return xf.eval(q); }, sys.chart(), p, tau[i], opts);
    }
    return p;
}

Vec integral_drift(const IntegrableSystem& sys, const Trajectory& traj) {
    Vec drift = Vec::Zero(sys.n());
    if (traj.states.size() < 2) return drift;
    const Chart& chart = sys.chart();
    const Vec a = chart.normalize(traj.states.front());
    const Vec b = chart.normalize(traj.states.back());
    for (int i = 0; i < sys.n(); ++i)
        drift[i] = sys.observable(i).value(chart, b) - sys.observable(i).value(chart, a);
    return drift;
}

Mat PeriodLattice::basis_matrix() const {
    const int n = static_cast<int>(basis.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.col(i) = basis[static_cast<size_t>(i)];
    return m;
}

double lattice_residual(const IntegrableSystem& sys, const Vec& x, const Vec& tau,
                        const IntegratorOptions& opts) {
    const Vec y = joint_flow(sys, x, tau, opts);
    return sys.chart().distance(sys.chart().normalize(y), sys.chart().normalize(x));
}

namespace {

Vec wrapped_return_error(const IntegrableSystem& sys, const Vec& p0, const Vec& tau,
                         const IntegratorOptions& opts) {
    const Vec y = joint_flow(sys, p0, tau, opts);
    return sys.chart().delta(sys.chart().normalize(p0), sys.chart().normalize(y));
}

// Gauss-Newton on Phi(tau)(p0) - p0 = 0 over tau in R^n.
bool newton_polish(const IntegrableSystem& sys, const Vec& p0, Vec& tau,
                   const LatticeOptions& opts) {
    const int n = sys.n();
    const double fd = 1e-7 * (1.0 + tau.norm());
    for (int it = 0; it < opts.max_newton; ++it) {
        const Vec r = wrapped_return_error(sys, p0, tau, opts.integrator);
        if (r.norm() <= opts.tol) return true;
        Mat j(r.size(), n);
        for (int k = 0; k < n; ++k) {
            Vec tp = tau;
            tp[k] += fd;
            j.col(k) = (wrapped_return_error(sys, p0, tp, opts.integrator) - r) / fd;
        }
        const Mat jtj = j.transpose() * j;
        const Vec step = jtj.ldlt().solve(j.transpose() * r);
        if (!step.allFinite() || step.norm() > 2.0 * opts.search_tmax) return false;
        tau -= step;
        if (step.norm() < 1e-14 && r.norm() > opts.tol) return false; // stagnation
    }
    return wrapped_return_error(sys, p0, tau, opts.integrator).norm() <= opts.tol;
}

bool is_small(const Vec& v) { return v.norm() < 1e-7; }

// Keep tau if it is not an integer combination of the vectors already kept.
bool reduce_against(Vec& tau, const std::vector<Vec>& kept) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& b : kept) {
            const double bn = b.squaredNorm();
            if (bn == 0.0) continue;
            const double m = std::round(tau.dot(b) / bn);
            if (m != 0.0) {
                const Vec cand = tau - m * b;
                if (cand.norm() < tau.norm() - 1e-12) {
                    tau = cand;
                    changed = true;
                }
            }
        }
    }
    return !is_small(tau);
}

} // namespace

PeriodLattice refine_lattice(const IntegrableSystem& sys, const Vec& p0,
                             const std::vector<Vec>& warm_basis, const LatticeOptions& opts) {
    PeriodLattice lat;
    lat.base = p0;
    for (const Vec& w : warm_basis) {
        Vec tau = w;
        if (!newton_polish(sys, p0, tau, opts))
            throw NumericsError("period lattice refinement stagnated");
        lat.basis.push_back(tau);
        lat.residuals.push_back(wrapped_return_error(sys, p0, tau, opts.integrator).norm());
    }
    const Mat b = lat.basis_matrix();
    if (std::abs(b.determinant()) < 1e-10)
        throw ContinuationError("refined lattice basis is degenerate");
    return lat;
}

PeriodLattice period_lattice(const IntegrableSystem& sys, const Vec& p0,
                             const LatticeOptions& opts) {
    const int n = sys.n();
    if (classify_point(sys, p0) != PointClass::Regular)
        throw NumericsError("period_lattice: base point is singular for the system");

    // Coarse search, factored through the commuting flows: tabulate the
    // trajectory of flow n over the grid once, then scan flow-1 lines.
    const int m = static_cast<int>(std::floor(opts.search_tmax / opts.search_step)) + 1;
    std::vector<Vec> candidates;

    auto consider = [&](Vec tau) {
        if (is_small(tau)) return;
        candidates.push_back(std::move(tau));
    };

    if (n == 1) {
        for (int i = 1; i < m; ++i) {
            Vec tau(1);
            tau << i * opts.search_step;
            if (lattice_residual(sys, p0, tau, opts.integrator) < opts.near_return)
                consider(tau);
        }
    } else {
        // March flow n along its own grid, then scan the remaining (n-1)
        // directions from each intermediate point. n <= 3 keeps this cheap.
        const auto& xn = sys.field(n - 1);
        Vec pn = p0;
        std::vector<std::pair<double, Vec>> line;
        line.emplace_back(0.0, pn);
        for (int i = 1; i < m; ++i) {
            pn = flow_to([&xn](const Vec& q) { return xn.eval(q); }, sys.chart(), pn,
                         opts.search_step, opts.integrator);
            line.emplace_back(i * opts.search_step, pn);
        }
        for (const auto& [tn, q] : line) {
            // One-dimensional sweep of flow 1 (n == 2), or a 2d sweep (n == 3).
            if (n == 2) {
                const auto& x1 = sys.field(0);
                Vec p1 = q;
                for (int i = 0; i < m; ++i) {
                    if (i > 0)
                        p1 = flow_to([&x1](const Vec& r) { return x1.eval(r); }, sys.chart(),
                                     p1, opts.search_step, opts.integrator);
                    const double d = sys.chart().distance(sys.chart().normalize(p1),
                                                          sys.chart().normalize(p0));
                    if (d < opts.near_return && (i > 0 || tn > 0)) {
                        Vec tau(2);
                        tau << i * opts.search_step, tn;
                        consider(tau);
                    }
                }
            } else {
                const auto& x2 = sys.field(1);
                Vec p2 = q;
                for (int j = 0; j < m; ++j) {
                    if (j > 0)
                        p2 = flow_to([&x2](const Vec& r) { return x2.eval(r); }, sys.chart(),
                                     p2, opts.search_step, opts.integrator);
                    const auto& x1 = sys.field(0);
                    Vec p1 = p2;
                    for (int i = 0; i < m; ++i) {
                        if (i > 0)
                            p1 = flow_to([&x1](const Vec& r) { return x1.eval(r); },
                                         sys.chart(), p1, opts.search_step, opts.integrator);
                        const double d = sys.chart().distance(sys.chart().normalize(p1),
                                                              sys.chart().normalize(p0));
                        if (d < opts.near_return && (i > 0 || j > 0 || tn > 0)) {
                            Vec tau(3);
                            tau << i * opts.search_step, j * opts.search_step, tn;
                            consider(tau);
                        }
                    }
                }
            }
        }
    }

    if (candidates.empty())
        throw NonCompactOrbitError("period_lattice: no near-return inside the search budget");

    // Closest candidates first; polish until n independent lattice vectors.
    std::sort(candidates.begin(), candidates.end(), [&](const Vec& a, const Vec& b) {
        return lattice_residual(sys, p0, a, opts.integrator) <
               lattice_residual(sys, p0, b, opts.integrator);
    });
    if (static_cast<int>(candidates.size()) > 40) candidates.resize(40);

    std::vector<Vec> found;
    int polished = 0;
    for (Vec tau : candidates) {
        if (static_cast<int>(found.size()) >= n && polished >= opts.max_candidates) break;
        if (!newton_polish(sys, p0, tau, opts)) continue;
        ++polished;
        if (reduce_against(tau, found)) {
            // Re-polish after reduction (reduction composes exact lattice
            // vectors, so this mostly re-verifies).
            if (!newton_polish(sys, p0, tau, opts)) continue;
            if (reduce_against(tau, found)) found.push_back(tau);
        }
        // Size-reduce the collection pairwise (Gauss / greedy for n <= 3).
        for (size_t a = 0; a < found.size(); ++a)
            for (size_t b = 0; b < found.size(); ++b) {
                if (a == b) continue;
                const double bn = found[b].squaredNorm();
                if (bn == 0.0) continue;
                const double mu = std::round(found[a].dot(found[b]) / bn);
                if (mu != 0.0 && (found[a] - mu * found[b]).norm() < found[a].norm() - 1e-12)
                    found[a] -= mu * found[b];
            }
    }

    if (static_cast<int>(found.size()) < n)
        throw NumericsError("period_lattice: found only " + std::to_string(found.size()) +
                            " independent periods");

    std::sort(found.begin(), found.end(),
              [](const Vec& a, const Vec& b) { return a.norm() < b.norm(); });

    // Canonical orientation: order by dominant flow direction and make the
    // dominant component positive, so continuation is stable.
    std::vector<Vec> basis(found.begin(), found.begin() + n);
    for (auto& v : basis) {
        int dom = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(v[i]) > std::abs(v[dom])) dom = i;
        if (v[dom] < 0) v = -v;
    }
    std::sort(basis.begin(), basis.end(), [](const Vec& a, const Vec& b) {
        int da = 0, db = 0;
        for (int i = 1; i < a.size(); ++i)
            if (std::abs(a[i]) > std::abs(a[da])) da = i;
        for (int i = 1; i < b.size(); ++i)
            if (std::abs(b[i]) > std::abs(b[db])) db = i;
        return da < db;
    });

    PeriodLattice lat;
    lat.base = p0;
    lat.basis = basis;
    const Mat bm = lat.basis_matrix();
    if (std::abs(bm.determinant()) < 1e-12)
        throw NumericsError("period_lattice: basis degenerate after reduction");
    for (const auto& v : lat.basis)
        lat.residuals.push_back(wrapped_return_error(sys, p0, v, opts.integrator).norm());

    // Closure spot-check: lambda_i + lambda_j must also return.
    if (n >= 2) {
        const Vec sum = lat.basis[0] + lat.basis[1];
        if (wrapped_return_error(sys, p0, sum, opts.integrator).norm() > 50 * opts.tol)
            throw NumericsError("period_lattice: closure check failed for lambda_i + lambda_j");
    }
    return lat;
}

} // namespace foldsym
