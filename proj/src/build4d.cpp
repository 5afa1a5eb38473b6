#include "foldsym/build4d.hpp"

#include <cmath>

#include "foldsym/desingularize.hpp"

namespace foldsym {

double flat_ramp(double x) { return x <= 0.0 ? 0.0 : std::exp(-1.0 / x); }

namespace {

// Smooth transition q: [0,1] -> [0,1], flat at both ends.
double flat_step(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = flat_ramp(x), b = flat_ramp(1.0 - x);
    return a / (a + b);
}

// C-infinity bump supported on (-1, 1), equal to 1 at 0.
double unit_bump(double x) {
    const double y = x * x;
    if (y >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - y));
}

} // namespace

double plateau_bump(double t, const BumpParams& bump) {
    const double a = std::abs(t);
    if (a <= bump.delta) return 1.0;
    if (a >= bump.delta_prime) return 0.0;
    return 1.0 - flat_step((a - bump.delta) / (bump.delta_prime - bump.delta));
}

Built4d build_b_integrable_4d(const MappingTorus& mt, double eps, const BumpParams& bump,
                              const Build4dOptions& opts) {
    if (!mt.order || *mt.order < 1)
        throw ConfigError("build_b_integrable_4d: finite monodromy order required");
    const int k = *mt.order;
    const Chart& leaf = *mt.leaf;
    if (leaf.dim() != 2) throw ConfigError("build_b_integrable_4d: leaf must be 2-dimensional");
    if (leaf.coord(0).kind != CoordKind::Linear || leaf.coord(1).kind != CoordKind::Angle)
        throw ConfigError("build_b_integrable_4d: leaf chart must be (linear, angle)");
    if (!(bump.delta > 0 && bump.delta < bump.delta_prime))
        throw ConfigError("build_b_integrable_4d: bump needs 0 < delta < delta'");
    if (bump.delta_prime >= eps)
        throw ConfigError("build_b_integrable_4d: bump must die inside the collar (delta' < eps)");
    if (eps >= opts.t_extent)
        throw GeometryError("build_b_integrable_4d: eps collar leaves the chart");
    if (opts.t_extent >= 1.0)
        throw ConfigError("build_b_integrable_4d: t extent must stay below 1");

    // The construction works in untwisted coordinates u = psi + s/k, where the
    // monodromy is the rotation psi -> psi + 1/k; verify that it is.
    {
        auto samples = interior_samples(leaf, 32, 5);
        for (const auto& p : samples) {
            Vec q = leaf.normalize(mt.monodromy(p));
            Vec expect = p;
            expect[1] += 1.0 / k;
            if (leaf.distance(q, leaf.normalize(expect)) > 1e-9)
                throw ConfigError("build_b_integrable_4d: only rotation monodromies are "
                                  "supported by the collar coordinates");
        }
    }

    const double c = opts.modular_period;
    const double hlo = leaf.coord(0).lo, hhi = leaf.coord(0).hi;
    auto chart = make_chart("mapping_torus_collar",
                            {{"h", CoordKind::Linear, hlo, hhi},
                             {"u", CoordKind::Angle, 0, 1},
                             {"s", CoordKind::Angle, 0, 1},
                             {"t", CoordKind::Linear, -opts.t_extent, opts.t_extent}},
                            "t");

    // omega = (dt/t) ^ (c ds) + dh ^ du - (1/k) dh ^ ds; the beta part is the
    // suspension form whose leaf restriction is dh ^ dpsi.
    OneFormField alpha;
    alpha.add(2, c);
    TwoFormField beta;
    beta.add(0, 1, 1.0);
    beta.add(0, 2, -1.0 / k);

    // Invariant leaf function via the averaging trick, with pole-flat caps so
    // the chart functions descend to the sphere leaf: the raw function mixes
    // a first harmonic (averaged away) with a k-th harmonic (survives).
    const double hcap = std::max(std::abs(hlo), hhi) - opts.cap;
    auto cap_a = [hcap](double h) { return flat_step((h + hcap) / (2 * hcap)); };
    auto cap_b = [hcap](double h) { return unit_bump(h / hcap); };
    ScalarField raw;
    raw.value = [cap_a, cap_b, k](const Vec& p) {
        return cap_a(p[0]) +
               0.5 * cap_b(p[0]) * (std::cos(2 * M_PI * p[1]) + std::cos(2 * M_PI * k * p[1]));
    };
    PointMap rotation = [k](const Vec& p) {
        Vec q = p;
        q[1] += 1.0 / k;
        return q;
    };
    AveragingOptions avg_opts;
    const AveragingResult avg = average_invariant_function(leaf, raw, rotation, k, avg_opts);
    const ScalarField f_leaf = avg.averaged;

    // Extension along the circle action: F~(h, u, s) = F(h, u - s/k).
    auto f_tilde = [f_leaf, k](const Vec& p) {
        Vec q(2);
        q[0] = p[0];
        q[1] = p[1] - p[2] / k;
        return f_leaf.value(q);
    };

    const BumpParams bp = bump;
    auto psi_slab = [bp](double t) { return flat_ramp(std::abs(t) - bp.delta_prime); };

    std::vector<Observable> obs;
    const double eff_c = c;

    if (opts.variant == Build4dVariant::BIntegrable) {
        auto form = std::make_shared<SingularForm>(
            SingularForm::b_symplectic(chart, std::move(alpha), std::move(beta)));
        // f1 = phi(t) c log|t| + slab ramp, as the b-function
        // c log|t| + [ (phi-1) c log|t| + Psi ].
        ScalarField g1;
        g1.value = [bp, eff_c, psi_slab](const Vec& p) {
            const double t = p[3];
            const double phi = plateau_bump(t, bp);
            double v = psi_slab(t);
            if (phi != 1.0) v += (phi - 1.0) * eff_c * std::log(std::abs(t));
            return v;
        };
        obs.push_back(Observable::bfun(eff_c, std::move(g1), "f1"));
        ScalarField f2;
        f2.value = [bp, psi_slab, f_tilde](const Vec& p) {
            const double t = p[3];
            return plateau_bump(t, bp) * f_tilde(p) + psi_slab(t) * p[0];
        };
        obs.push_back(Observable::smooth(std::move(f2), "f2"));

        Built4d out{IntegrableSystem(form, std::move(obs)), chart, c, bump, {}};
        MappingTorus mt2 = mt;
        out.exceptional_leaf_points = exceptional_orbits(mt2);
        return out;
    }

    // Desingularized variant: folded form omega_eps with first function
    // phi(t) t^2 (plus the slab ramp).
    auto bform = std::make_shared<SingularForm>(
        SingularForm::b_symplectic(chart, std::move(alpha), std::move(beta)));
    auto form = std::make_shared<SingularForm>(desingularize(*bform, opts.desing_eps));
    ScalarField f1;
    f1.value = [bp, psi_slab](const Vec& p) {
        const double t = p[3];
        return plateau_bump(t, bp) * t * t + psi_slab(t);
    };
    obs.push_back(Observable::smooth(std::move(f1), "f1"));
    ScalarField f2;
    f2.value = [bp, psi_slab, f_tilde](const Vec& p) {
        const double t = p[3];
        return plateau_bump(t, bp) * f_tilde(p) + psi_slab(t) * p[0];
    };
    obs.push_back(Observable::smooth(std::move(f2), "f2"));

    Built4d out{IntegrableSystem(form, std::move(obs)), chart, c, bump, {}};
    MappingTorus mt2 = mt;
    out.exceptional_leaf_points = exceptional_orbits(mt2);
    return out;
}

} // namespace foldsym
