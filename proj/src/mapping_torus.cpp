#include "foldsym/mapping_torus.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace foldsym {

std::string to_string(Obstruction o) {
    switch (o) {
        case Obstruction::Trivial: return "trivial";
        case Obstruction::Nontrivial: return "nontrivial";
        case Obstruction::Unknown: return "unknown";
    }
    return "?";
}

namespace {

Mat map_jacobian(const Chart& chart, const PointMap& f, const Vec& p, double h = 1e-6) {
    const int d = chart.dim();
    Mat j(d, d);
    for (int k = 0; k < d; ++k) {
        Vec a = p, b = p;
        a[k] += h;
        b[k] -= h;
        const Vec fa = f(a), fb = f(b);
        for (int r = 0; r < d; ++r) j(r, k) = chart.coord_delta(r, fb[r], fa[r]) / (2 * h);
    }
    return j;
}

} // namespace

ValidationReport validate_mapping_torus(const MappingTorus& mt, const SamplePlan& plan,
                                        double tol) {
    ValidationReport rep;
    const Chart& leaf = *mt.leaf;
    const auto samples = interior_samples(leaf, plan.n_interior / 8 + 16, plan.seed, 0.05);

    // phi* omega_L = omega_L on samples.
    double worst = 0.0;
    for (const auto& p : samples) {
        const Mat j = map_jacobian(leaf, mt.monodromy, p);
        const Mat w_here = mt.leaf_form.matrix(p, leaf.dim());
        const Mat w_there = mt.leaf_form.matrix(leaf.normalize(mt.monodromy(p)), leaf.dim());
        worst = std::max(worst, (j.transpose() * w_there * j - w_here).cwiseAbs().maxCoeff());
    }
    rep.add({"monodromy_symplectic", worst, tol, worst <= tol, "max |phi* omega - omega|"});

    if (mt.order) {
        double dist = 0.0;
        for (const auto& p : samples) {
            Vec q = leaf.normalize(p);
            for (int j = 0; j < *mt.order; ++j) q = leaf.normalize(mt.monodromy(q));
            dist = std::max(dist, leaf.distance(q, leaf.normalize(p)));
        }
        rep.add({"monodromy_order", dist, tol, dist <= 1e-6, "max |phi^m - id|"});
    }
    if (mt.period_k <= 0)
        rep.add({"period_positive", mt.period_k, 0.0, false, "mapping torus period"});
    return rep;
}

ObstructionReport obstruction_report(const MappingTorus& mt, const SamplePlan& plan,
                                     double tol) {
    ObstructionReport rep;
    const Chart& leaf = *mt.leaf;
    const auto samples = interior_samples(leaf, plan.n_interior / 8 + 16, plan.seed, 0.05);
    double worst = 0.0;
    for (const auto& p : samples) {
        const Vec q = leaf.normalize(mt.monodromy(p));
        worst = std::max(worst, leaf.distance(q, leaf.normalize(p)));
    }
    if (worst <= tol) {
        rep.verdict = Obstruction::Trivial;
        rep.reason = "monodromy is the identity on samples; Z = L x S^1";
        return rep;
    }
    if (mt.homology_action) {
        const auto& h = *mt.homology_action;
        if (!h.isIdentity()) {
            rep.verdict = Obstruction::Nontrivial;
            rep.reason = "homology action differs from the identity; "
                         "global action-angle coordinates obstructed";
            return rep;
        }
        rep.verdict = Obstruction::Unknown;
        rep.reason = "monodromy nontrivial on samples but homology action is the identity";
        return rep;
    }
    rep.verdict = Obstruction::Unknown;
    rep.reason = "monodromy not the identity and no homology data supplied";
    return rep;
}

std::vector<Vec> exceptional_orbits(const MappingTorus& mt, const ExceptionalOrbitOptions& opts) {
    if (!mt.order || *mt.order < 1)
        throw ConfigError("exceptional orbits require a finite monodromy order");
    const int k = *mt.order;
    const Chart& leaf = *mt.leaf;
    const int d = leaf.dim();

    std::vector<Vec> found;
    auto record = [&](const Vec& p) {
        for (const auto& q : found)
            if (leaf.distance(p, q) < opts.dedup_tol) return;
        found.push_back(p);
    };

    // Seed grid over the leaf box.
    std::vector<Vec> seeds;
    {
        std::vector<int> idx(static_cast<size_t>(d), 0);
        const int m = opts.grid_per_axis;
        for (;;) {
            Vec p(d);
            for (int i = 0; i < d; ++i) {
                const Coord& c = leaf.coord(i);
                const double u = (idx[static_cast<size_t>(i)] + 0.5) / m;
                p[i] = (c.kind == CoordKind::Angle) ? u : c.lo + u * (c.hi - c.lo);
            }
            seeds.push_back(p);
            int a = 0;
            while (a < d && ++idx[static_cast<size_t>(a)] == m) idx[static_cast<size_t>(a++)] = 0;
            if (a == d) break;
        }
    }

    for (int j = 1; j < k; ++j) {
        auto phi_j = [&](const Vec& p) {
            Vec q = leaf.normalize(p);
            for (int r = 0; r < j; ++r) q = leaf.normalize(mt.monodromy(q));
            return q;
        };
        auto gap = [&](const Vec& p) {
            return Vec(leaf.embed(phi_j(p)) - leaf.embed(leaf.normalize(p)));
        };
        for (const Vec& seed : seeds) {
            Vec p = seed;
            bool ok = false;
            for (int it = 0; it < opts.max_newton; ++it) {
                const Vec r = gap(p);
                if (r.norm() < opts.fixed_tol) {
                    ok = true;
                    break;
                }
                Mat jm(r.size(), d);
                const double h = 1e-6;
                for (int c = 0; c < d; ++c) {
                    Vec pp = p;
                    pp[c] += h;
                    pp = leaf.clamp_to_bounds(pp, 0.0);
                    jm.col(c) = (gap(pp) - r) / h;
                }
                const Mat jtj = jm.transpose() * jm + 1e-12 * Mat::Identity(d, d);
                Vec step = jtj.ldlt().solve(jm.transpose() * r);
                if (!step.allFinite()) break;
                // Damped step, clamped to the chart box.
                double len = step.norm();
                if (len > 0.25) step *= 0.25 / len;
                p = leaf.clamp_to_bounds(p - step, opts.boundary_pad);
            }
            if (ok) record(leaf.clamp_to_bounds(p, opts.boundary_pad));
        }
    }
    return found;
}

} // namespace foldsym
