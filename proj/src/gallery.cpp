#include "foldsym/gallery.hpp"

#include <cmath>
#include <cstdio>

#include "foldsym/lifts.hpp"
#include "foldsym/nullline.hpp"
#include "foldsym/products.hpp"

namespace foldsym {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kGoldenRotation = 0.61803398874989484820; // (sqrt(5)-1)/2
} // namespace

ChartPtr sphere_chart(const std::string& name, const std::string& h_name,
                      const std::string& angle_name, double h_extent, bool h_is_z) {
    auto chart = make_chart(name,
                            {{h_name, CoordKind::Linear, -h_extent, h_extent},
                             {angle_name, CoordKind::Angle, 0, 1}},
                            h_is_z ? std::optional<std::string>(h_name) : std::nullopt);
    auto mutable_chart = std::const_pointer_cast<Chart>(chart);
    mutable_chart->set_embedding([](const Vec& p) {
        const double h = std::min(1.0, std::max(-1.0, p[0]));
        const double r = std::sqrt(std::max(0.0, 1.0 - h * h));
        Vec e(3);
        e << r * std::cos(kTwoPi * p[1]), r * std::sin(kTwoPi * p[1]), h;
        return e;
    });
    return chart;
}

std::vector<std::string> gallery_ids() {
    return {"double_collision", "origami_s4",       "fibrating_boundary",
            "product_surface",  "spherical_pendulum", "non_b_modelable",
            "radko_sphere",     "no_cotangent_model", "swap_monodromy"};
}

namespace {

GalleryEntry make_double_collision() {
    // McGehee-type model of double collision: omega = r dr ^ dv + dtheta ^ dw
    // with H = -(r^2/2)(w^2 + v^2 - 2) + w^2/2 and second integral w.
    auto chart = make_chart("double_collision",
                            {{"r", CoordKind::Linear, -1.5, 1.5},
                             {"v", CoordKind::Linear, -2, 2},
                             {"theta", CoordKind::Angle, 0, 1},
                             {"w", CoordKind::Linear, -2, 2}},
                            "r");
    TwoFormField omega;
    omega.add(0, 1, [](const Vec& p) { return p[0]; });
    omega.add(2, 3, 1.0);
    auto form = std::make_shared<SingularForm>(SingularForm::folded(chart, std::move(omega)));

    ScalarField H;
    H.value = [](const Vec& p) {
        const double r = p[0], v = p[1], w = p[3];
        return -0.5 * r * r * (w * w + v * v - 2.0) + 0.5 * w * w;
    };
    H.grad = [](const Vec& p) {
        const double r = p[0], v = p[1], w = p[3];
        Vec g(4);
        g << -r * (w * w + v * v - 2.0), -r * r * v, 0.0, w - r * r * w;
        return g;
    };
    std::vector<Observable> obs;
    obs.push_back(Observable::smooth(std::move(H), "H"));
    obs.push_back(Observable::smooth(ScalarField::coordinate(3), "w"));

    GalleryEntry e{"double_collision", "double collision of two particles (McGehee chart)",
                   IntegrableSystem(form, std::move(obs)),
                   nullptr, std::nullopt, {}, {}, {}};
    e.oracle_field = [](const Vec& p) {
        const double r = p[0], v = p[1], w = p[3];
        Vec x(4);
        x << r * v, -(w * w + v * v - 2.0), r * r * w - w, 0.0;
        return x;
    };
    return e;
}

GalleryEntry make_origami_s4() {
    // Pullback of the standard R^4 structure under the folding of S^4 over
    // the closed 4-disk, in fiber coordinates (z, u, theta1, theta2):
    // r1^2 = (1 - z^2) u, r2^2 = (1 - z^2)(1 - u).
    auto chart = make_chart("origami_s4",
                            {{"z", CoordKind::Linear, -0.9, 0.9},
                             {"u", CoordKind::Linear, 0.1, 0.9},
                             {"theta1", CoordKind::Angle, 0, 1},
                             {"theta2", CoordKind::Angle, 0, 1}},
                            "z");
    TwoFormField omega;
    omega.add(1, 2, [](const Vec& p) { return M_PI * (1.0 - p[0] * p[0]); });
    omega.add(0, 2, [](const Vec& p) { return -kTwoPi * p[0] * p[1]; });
    omega.add(1, 3, [](const Vec& p) { return -M_PI * (1.0 - p[0] * p[0]); });
    omega.add(0, 3, [](const Vec& p) { return -kTwoPi * p[0] * (1.0 - p[1]); });
    auto form = std::make_shared<SingularForm>(SingularForm::folded(chart, std::move(omega)));

    ScalarField f1; // x1^2 + y1^2 + x2^2 + y2^2 pulled back: 1 - z^2
    f1.value = [](const Vec& p) { return 1.0 - p[0] * p[0]; };
    f1.grad = [](const Vec& p) {
        Vec g = Vec::Zero(4);
        g[0] = -2.0 * p[0];
        return g;
    };
    ScalarField f2; // x1 y2 - x2 y1 pulled back
    f2.value = [](const Vec& p) {
        const double R = 1.0 - p[0] * p[0];
        const double Q = std::sqrt(p[1] * (1.0 - p[1]));
        return R * Q * std::sin(kTwoPi * (p[3] - p[2]));
    };
    f2.grad = [](const Vec& p) {
        const double R = 1.0 - p[0] * p[0];
        const double Q = std::sqrt(p[1] * (1.0 - p[1]));
        const double S = std::sin(kTwoPi * (p[3] - p[2]));
        const double C = std::cos(kTwoPi * (p[3] - p[2]));
        Vec g(4);
        g << -2.0 * p[0] * Q * S, R * S * (1.0 - 2.0 * p[1]) / (2.0 * Q),
            -kTwoPi * R * Q * C, kTwoPi * R * Q * C;
        return g;
    };
    std::vector<Observable> obs;
    obs.push_back(Observable::smooth(std::move(f1), "|x|^2"));
    obs.push_back(Observable::smooth(std::move(f2), "x1y2-x2y1"));

    GalleryEntry e{"origami_s4", "toric origami structure on the 4-sphere",
                   IntegrableSystem(form, std::move(obs)),
                   nullptr, std::nullopt, {}, {}, {}};
    // Null foliation on Z = S^3 is the Hopf foliation: every seed closes.
    for (double u : {0.2, 0.4, 0.6, 0.8})
        for (double th : {0.0, 0.33}) {
            Vec s(4);
            s << 0.0, u, th, 0.61 * th + 0.11;
            e.null_seeds.push_back(s);
        }
    e.null_opts.max_arc = 4.0;
    e.null_opts.close_tol = 1e-5;
    e.null_opts.min_arc = 0.5;
    e.expected.all_seeds_close = true;
    return e;
}

GalleryEntry make_fibrating_boundary() {
    // Martinet local model with the boundary integrable system (t^2, x2).
    auto chart = make_chart("martinet",
                            {{"t", CoordKind::Linear, -1, 1},
                             {"q", CoordKind::Linear, -2, 2},
                             {"x2", CoordKind::Linear, -2, 2},
                             {"y2", CoordKind::Linear, -2, 2}},
                            "t");
    TwoFormField omega;
    omega.add(0, 1, [](const Vec& p) { return p[0]; });
    omega.add(2, 3, 1.0);
    auto form = std::make_shared<SingularForm>(SingularForm::folded(chart, std::move(omega)));

    ScalarField t2;
    t2.value = [](const Vec& p) { return p[0] * p[0]; };
    t2.grad = [](const Vec& p) {
        Vec g = Vec::Zero(4);
        g[0] = 2.0 * p[0];
        return g;
    };
    std::vector<Observable> obs;
    obs.push_back(Observable::smooth(std::move(t2), "t^2"));
    obs.push_back(Observable::smooth(ScalarField::coordinate(2), "x2"));

    GalleryEntry e{"fibrating_boundary", "symplectic manifold with fibrating boundary (local model)",
                   IntegrableSystem(form, std::move(obs)),
                   nullptr, std::nullopt, {}, {}, {}};
    e.oracle_field = [](const Vec& p) {
        (void)p;
        Vec x(4);
        x << 0.0, 2.0, 0.0, 0.0; // X_{t^2} = 2 dq
        return x;
    };
    return e;
}

GalleryEntry make_product_surface() {
    // (S^2, h dh ^ dtheta) x (T*S^1, dphi ^ dJ) with observables (h^2, J).
    FoldedSurface surface;
    surface.chart = sphere_chart("s2_factor", "h", "theta");
    surface.t = ScalarField::coordinate(0);
    surface.area.add(0, 1, 1.0);
    surface.t_coord = 0;

    auto m_chart = make_chart("t_star_s1",
                              {{"phi", CoordKind::Angle, 0, 1},
                               {"J", CoordKind::Linear, -2, 2}});
    TwoFormField m_omega;
    m_omega.add(0, 1, 1.0);
    auto m_form = std::make_shared<SingularForm>(
        SingularForm::symplectic(m_chart, std::move(m_omega)));
    std::vector<Observable> m_obs;
    m_obs.push_back(Observable::smooth(ScalarField::coordinate(1), "J"));
    IntegrableSystem factor(m_form, std::move(m_obs));

    GalleryEntry e{"product_surface", "product of a folded surface with a symplectic system",
                   product_with_folded_surface(surface, factor),
                   nullptr, std::nullopt, {}, {}, {}};
    return e;
}

GalleryEntry make_spherical_pendulum() {
    // Folded spherical pendulum: omega = P_phi dP_phi ^ dphi + dP_theta ^
    // dtheta, H = (P_theta^2 + P_phi^2 / sin^2 theta)/2 + cos theta.
    auto chart = make_chart("folded_spherical_pendulum",
                            {{"theta", CoordKind::Linear, 0.35, M_PI - 0.35},
                             {"phi", CoordKind::Angle, 0, 1},
                             {"P_theta", CoordKind::Linear, -2.5, 2.5},
                             {"P_phi", CoordKind::Linear, -2, 2}},
                            "P_phi");
    TwoFormField omega;
    omega.add(3, 1, [](const Vec& p) { return p[3]; });
    omega.add(2, 0, 1.0);
    auto form = std::make_shared<SingularForm>(SingularForm::folded(chart, std::move(omega)));

    ScalarField H;
    H.value = [](const Vec& p) {
        const double th = p[0], pt = p[2], pf = p[3];
        const double s = std::sin(th);
        return 0.5 * (pt * pt + pf * pf / (s * s)) + std::cos(th);
    };
    H.grad = [](const Vec& p) {
        const double th = p[0], pt = p[2], pf = p[3];
        const double s = std::sin(th), c = std::cos(th);
        Vec g(4);
        g << -pf * pf * c / (s * s * s) - s, 0.0, pt, pf / (s * s);
        return g;
    };
    ScalarField pf2;
    pf2.value = [](const Vec& p) { return p[3] * p[3]; };
    pf2.grad = [](const Vec& p) {
        Vec g = Vec::Zero(4);
        g[3] = 2.0 * p[3];
        return g;
    };
    std::vector<Observable> obs;
    obs.push_back(Observable::smooth(std::move(H), "H"));
    obs.push_back(Observable::smooth(std::move(pf2), "P_phi^2"));

    GalleryEntry e{"spherical_pendulum", "folded spherical pendulum",
                   IntegrableSystem(form, std::move(obs)),
                   nullptr, std::nullopt, {}, {}, {}};
    e.oracle_field = [](const Vec& p) {
        const double th = p[0], pt = p[2], pf = p[3];
        const double s = std::sin(th), c = std::cos(th);
        Vec x(4);
        x << pt, 1.0 / (s * s), s + pf * pf * c / (s * s * s), 0.0;
        return x;
    };
    return e;
}

GalleryEntry make_non_b_modelable() {
    // (S^2, h dh ^ dtheta) with f = cos(theta) h^2: the Hamiltonian field
    // vanishes at points of the critical locus, which no b-system allows.
    ChartPtr chart = sphere_chart("s2_folded", "h", "theta");
    TwoFormField omega;
    omega.add(0, 1, [](const Vec& p) { return p[0]; });
    auto form = std::make_shared<SingularForm>(SingularForm::folded(chart, std::move(omega)));

    ScalarField f;
    f.value = [](const Vec& p) { return std::cos(kTwoPi * p[1]) * p[0] * p[0]; };
    f.grad = [](const Vec& p) {
        Vec g(2);
        g << 2.0 * p[0] * std::cos(kTwoPi * p[1]),
            -kTwoPi * p[0] * p[0] * std::sin(kTwoPi * p[1]);
        return g;
    };
    std::vector<Observable> obs;
    obs.push_back(Observable::smooth(std::move(f), "cos(theta) h^2"));

    GalleryEntry e{"non_b_modelable", "folded system with singular points on Z",
                   IntegrableSystem(form, std::move(obs)),
                   nullptr, std::nullopt, {}, {}, {}};
    e.oracle_field = [](const Vec& p) {
        Vec x(2);
        x << kTwoPi * p[0] * std::sin(kTwoPi * p[1]), 2.0 * std::cos(kTwoPi * p[1]);
        return x;
    };
    return e;
}

GalleryEntry make_radko_sphere() {
    // Radko sphere: Pi = h d/dh ^ d/dtheta, i.e. omega = (dh/h) ^ dtheta.
    ChartPtr chart = sphere_chart("radko_sphere", "h", "theta");
    OneFormField alpha;
    alpha.add(1, 1.0);
    TwoFormField beta;
    auto form = std::make_shared<SingularForm>(
        SingularForm::b_symplectic(chart, std::move(alpha), std::move(beta)));
    std::vector<Observable> obs;
    obs.push_back(Observable::bfun(1.0, ScalarField::constant(0.0), "log|h|"));

    GalleryEntry e{"radko_sphere", "Radko sphere (b-symplectic surface)",
                   IntegrableSystem(form, std::move(obs)),
                   nullptr, std::nullopt, {}, {}, {}};
    e.oracle_field = [](const Vec& p) {
        (void)p;
        Vec x(2);
        x << 0.0, 1.0; // modular field d/dtheta, period 1
        return x;
    };
    return e;
}

GalleryEntry make_no_cotangent_model() {
    // Mapping torus of S^2 by an irrational rotation, times S^1, with
    // omega = sin(2 pi x) dx ^ ds + dh ^ dpsi - rho dh ^ ds. The null line
    // field on Z = {x=0} is the suspension, with closed orbits only at the
    // poles.
    auto chart = make_chart("irrational_suspension",
                            {{"x", CoordKind::Linear, -0.25, 0.25},
                             {"h", CoordKind::Linear, -1, 1},
                             {"psi", CoordKind::Angle, 0, 1},
                             {"s", CoordKind::Angle, 0, 1}},
                            "x");
    auto mutable_chart = std::const_pointer_cast<Chart>(chart);
    mutable_chart->set_embedding([](const Vec& p) {
        const double h = std::min(1.0, std::max(-1.0, p[1]));
        const double r = std::sqrt(std::max(0.0, 1.0 - h * h));
        Vec e(6);
        e << p[0], r * std::cos(kTwoPi * p[2]), r * std::sin(kTwoPi * p[2]), h,
            std::cos(kTwoPi * p[3]) / kTwoPi, std::sin(kTwoPi * p[3]) / kTwoPi;
        return e;
    });

    const double rho = kGoldenRotation;
    TwoFormField omega;
    omega.add(0, 3, [](const Vec& p) { return std::sin(kTwoPi * p[0]); });
    omega.add(1, 2, 1.0);
    omega.add(1, 3, -rho);
    auto form = std::make_shared<SingularForm>(SingularForm::folded(chart, std::move(omega)));

    ScalarField f1;
    f1.value = [](const Vec& p) { return std::cos(kTwoPi * p[0]); };
    f1.grad = [](const Vec& p) {
        Vec g = Vec::Zero(4);
        g[0] = -kTwoPi * std::sin(kTwoPi * p[0]);
        return g;
    };
    std::vector<Observable> obs;
    obs.push_back(Observable::smooth(std::move(f1), "cos(x)"));
    obs.push_back(Observable::smooth(ScalarField::coordinate(1), "h"));

    GalleryEntry e{"no_cotangent_model",
                   "irrational-rotation mapping torus times S^1 (no cotangent model)",
                   IntegrableSystem(form, std::move(obs)),
                   nullptr, std::nullopt, {}, {}, {}};
    for (double h : {-(1.0 - 1e-6), -0.8, -0.6, -0.4, -0.2, 0.0, 0.2, 0.4, 0.6, 0.8,
                     1.0 - 1e-6}) {
        Vec s(4);
        s << 0.0, h, 0.0, 0.0;
        e.null_seeds.push_back(s);
    }
    e.null_opts.max_arc = 75.0;
    e.null_opts.step = 0.02;
    e.null_opts.close_tol = 2e-3;
    e.null_opts.min_arc = 0.5;
    e.expected.closed_null_orbits = 2;
    return e;
}

GalleryEntry make_swap_monodromy() {
    // S^2 x S^2 with the factor swap as monodromy; the homology action swaps
    // the generators of H_2, so the mapping torus is not trivial.
    auto leaf = make_chart("s2_x_s2",
                           {{"h1", CoordKind::Linear, -1, 1},
                            {"th1", CoordKind::Angle, 0, 1},
                            {"h2", CoordKind::Linear, -1, 1},
                            {"th2", CoordKind::Angle, 0, 1}});
    TwoFormField omega;
    omega.add(0, 1, 1.0);
    omega.add(2, 3, 1.0);
    auto form = std::make_shared<SingularForm>(SingularForm::symplectic(leaf, omega));

    ScalarField f1;
    f1.value = [](const Vec& p) { return p[0] + p[2]; };
    f1.grad = [](const Vec& p) {
        (void)p;
        Vec g = Vec::Zero(4);
        g[0] = g[2] = 1.0;
        return g;
    };
    ScalarField f2;
    f2.value = [](const Vec& p) { return p[0] * p[2]; };
    f2.grad = [](const Vec& p) {
        Vec g = Vec::Zero(4);
        g[0] = p[2];
        g[2] = p[0];
        return g;
    };
    std::vector<Observable> obs;
    obs.push_back(Observable::smooth(std::move(f1), "h1+h2"));
    obs.push_back(Observable::smooth(std::move(f2), "h1*h2"));

    MappingTorus mt;
    mt.leaf = leaf;
    mt.leaf_form = omega;
    mt.monodromy = [](const Vec& p) {
        Vec q(4);
        q << p[2], p[3], p[0], p[1];
        return q;
    };
    mt.period_k = 1.0;
    mt.order = 2;
    Eigen::MatrixXi h(2, 2);
    h << 0, 1, 1, 0;
    mt.homology_action = h;

    GalleryEntry e{"swap_monodromy", "mapping torus of S^2 x S^2 by the factor swap",
                   IntegrableSystem(form, std::move(obs)),
                   nullptr, std::move(mt), {}, {}, {}};
    e.expected.obstruction = Obstruction::Nontrivial;
    return e;
}

} // namespace

GalleryEntry instantiate(const std::string& id) {
    if (id == "double_collision") return make_double_collision();
    if (id == "origami_s4") return make_origami_s4();
    if (id == "fibrating_boundary") return make_fibrating_boundary();
    if (id == "product_surface") return make_product_surface();
    if (id == "spherical_pendulum") return make_spherical_pendulum();
    if (id == "non_b_modelable") return make_non_b_modelable();
    if (id == "radko_sphere") return make_radko_sphere();
    if (id == "no_cotangent_model") return make_no_cotangent_model();
    if (id == "swap_monodromy") return make_swap_monodromy();
    throw ConfigError("unknown gallery id '" + id + "'");
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

std::string ConsolidatedReport::to_records() const {
    std::string out;
    for (const auto& it : items) {
        out += "record=check id=" + id + " name=" + it.name + " value=" + fmt(it.value) +
               " threshold=" + fmt(it.threshold) + " pass=" + (it.pass ? "true" : "false");
        if (!it.note.empty()) out += " note=\"" + it.note + "\"";
        out += "\n";
    }
    out += "record=summary id=" + id + " pass=" + (pass ? "true" : "false") + "\n";
    return out;
}

ConsolidatedReport run_all_checks(const GalleryEntry& entry, uint64_t seed) {
    ConsolidatedReport rep;
    rep.id = entry.id;
    const IntegrableSystem& sys = entry.system;
    SamplePlan plan;
    plan.n_interior = 1500;
    plan.n_z = 200;
    plan.seed = seed;

    auto push = [&rep](CheckItem item) {
        rep.pass = rep.pass && item.pass;
        rep.items.push_back(std::move(item));
    };

    {
        ValidationReport v = validate_form(sys.form(), plan);
        for (auto& item : v.items) push(item);
        push({"validate_expected", v.pass ? 1.0 : 0.0, entry.expected.validate_pass ? 1.0 : 0.0,
              v.pass == entry.expected.validate_pass, "form validation matches expectation"});
    }

    if (sys.form().kind() == FormKind::Folded) {
        const auto zs = z_samples(sys.chart(), 64, plan.seed);
        for (int i = 0; i < sys.n(); ++i) {
            const auto adm = is_folded_function(sys.observable(i), sys.form(), zs);
            push({"admissible_f" + std::to_string(i), adm.worst_margin, 1e-6, adm.pass,
                  "max |df(v)| over the kernel on Z"});
        }
    }

    if (sys.n() > 1) {
        const auto comm = check_commutation(sys, plan, 1e-8);
        push({"commutation", comm.worst, comm.tol,
              comm.pass == entry.expected.commutation_pass, "max |{f_i,f_j}| over samples"});
    }
    {
        const auto ind = check_independence(sys, plan);
        push({"independence_interior", ind.interior_fraction, ind.threshold,
              (ind.interior_fraction >= ind.threshold) == entry.expected.independence_pass,
              "fraction of interior samples with rank n"});
        if (sys.form().singular())
            push({"independence_z", ind.z_fraction, ind.threshold,
                  (ind.z_fraction >= ind.threshold) == entry.expected.independence_pass,
                  "fraction of Z samples with rank n"});
    }

    if (entry.oracle_field) {
        Rng rng(seed + 77);
        const auto pts = random_points(sys.chart(), 100, rng, 0.03);
        double worst = 0.0;
        for (const auto& p : pts) {
            const Vec a = sys.field(0).eval(p);
            const Vec b = entry.oracle_field(p);
            worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
        }
        // On-Z cross-check through the extension path.
        if (sys.form().singular()) {
            for (auto p : z_samples(sys.chart(), 20, seed)) {
                const Vec a = sys.field(0).eval(p);
                const Vec b = entry.oracle_field(p);
                worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
            }
        }
        push({"oracle_agreement", worst, 1e-7, worst <= 1e-7,
              "max |X_solver - X_closed_form| at random points"});
    }

    if (entry.expected.closed_null_orbits || entry.expected.all_seeds_close) {
        const auto res = null_line_closed_orbits(sys.form(), entry.null_seeds, entry.null_opts);
        if (entry.expected.closed_null_orbits) {
            const int want = *entry.expected.closed_null_orbits;
            push({"closed_null_orbits", static_cast<double>(res.closed.size()),
                  static_cast<double>(want), static_cast<int>(res.closed.size()) == want,
                  "deduplicated closed null-line orbits"});
        }
        if (entry.expected.all_seeds_close) {
            push({"all_null_seeds_close", static_cast<double>(res.n_closed_seeds),
                  static_cast<double>(entry.null_seeds.size()),
                  res.n_closed_seeds == static_cast<int>(entry.null_seeds.size()),
                  "every seed orbit closes (origami null fibration)"});
        }
    }

    if (entry.mapping_torus) {
        ValidationReport v = validate_mapping_torus(*entry.mapping_torus, plan);
        for (auto& item : v.items) push(item);
        const auto obs = obstruction_report(*entry.mapping_torus, plan);
        const bool match =
            !entry.expected.obstruction || obs.verdict == *entry.expected.obstruction;
        push({"obstruction_" + to_string(obs.verdict), 0.0, 0.0, match, obs.reason});
    }

    // Entry-specific structural facts.
    if (entry.id == "double_collision") {
        Rng rng(seed + 5);
        const auto pts = random_points(sys.chart(), 50, rng, 0.03);
        double w_comp = 0.0, r_on_z = 0.0;
        for (auto p : pts) {
            w_comp = std::max(w_comp, std::abs(sys.field(0).eval(p)[3]));
            p[0] = 0.0;
            r_on_z = std::max(r_on_z, std::abs(sys.field(0).eval(p)[0]));
        }
        push({"no_dw_component", w_comp, 1e-9, w_comp <= 1e-9, "X_H has no d/dw component"});
        push({"r_component_on_z", r_on_z, 1e-9, r_on_z <= 1e-9,
              "radial component of X_H vanishes on Z"});
    }
    if (entry.id == "non_b_modelable") {
        Vec p(2);
        p << 0.0, 0.25;
        const bool sing = classify_point(sys, p) == PointClass::Singular;
        p << 0.0, 0.0;
        const bool reg = classify_point(sys, p) == PointClass::Regular;
        push({"zero_on_z_quarter_turn", sing ? 1.0 : 0.0, 1.0, sing,
              "X_f vanishes on Z where cos(theta) = 0"});
        push({"regular_on_z_origin", reg ? 1.0 : 0.0, 1.0, reg,
              "X_f = 2 d/dtheta at theta = 0"});
    }
    return rep;
}

} // namespace foldsym
