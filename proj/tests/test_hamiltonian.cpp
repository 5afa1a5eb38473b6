#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "foldsym/gallery.hpp"
#include "foldsym/hamiltonian.hpp"
#include "foldsym/lifts.hpp"

using namespace foldsym;

namespace {

ChartPtr martinet_chart() {
    return make_chart("martinet",
                      {{"t", CoordKind::Linear, -1, 1},
                       {"q", CoordKind::Linear, -2, 2},
                       {"x2", CoordKind::Linear, -2, 2},
                       {"y2", CoordKind::Linear, -2, 2}},
                      "t");
}

FormPtr martinet_form() {
    TwoFormField w;
    w.add(0, 1, [](const Vec& p) { return p[0]; });
    w.add(2, 3, 1.0);
    return std::make_shared<SingularForm>(SingularForm::folded(martinet_chart(), std::move(w)));
}

Vec pt(std::initializer_list<double> v) {
    Vec p(static_cast<int>(v.size()));
    int i = 0;
    for (double x : v) p[i++] = x;
    return p;
}

Observable half_t_squared() {
    ScalarField f;
    f.value = [](const Vec& p) { return 0.5 * p[0] * p[0]; };
    f.grad = [](const Vec& p) {
        Vec g = Vec::Zero(p.size());
        g[0] = p[0];
        return g;
    };
    return Observable::smooth(std::move(f), "t^2/2");
}

} // namespace

TEST_CASE("admissibility dichotomy on the Martinet chart") {
    auto form = martinet_form();
    const auto zs = z_samples(form->chart(), 32, 3);

    // f = t is rejected (df = dt does not annihilate the kernel).
    const auto bad = is_folded_function(Observable::smooth(ScalarField::coordinate(0)), *form, zs);
    CHECK_FALSE(bad.pass);
    CHECK(bad.worst_margin > 0.5);

    // f = t^2/2 and f = x2 are folded functions.
    CHECK(is_folded_function(half_t_squared(), *form, zs).pass);
    CHECK(is_folded_function(Observable::smooth(ScalarField::coordinate(2)), *form, zs).pass);
}

TEST_CASE("X_{t^2/2} = d/dq everywhere including Z") {
    auto form = martinet_form();
    HamiltonianField x(half_t_squared(), form);
    for (double t : {0.0, 1e-7, -0.4, 0.8}) {
        const Vec v = x.eval(pt({t, 0.3, 0.2, -0.9}));
        CHECK(v[0] == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(v[2]) < 1e-9);
        CHECK(std::abs(v[3]) < 1e-9);
    }
}

TEST_CASE("non-admissible observable fails the on-Z solve both ways") {
    auto form = martinet_form();
    // f = t: inconsistent linear system on Z.
    HamiltonianField xt(Observable::smooth(ScalarField::coordinate(0), "t"), form);
    CHECK_THROWS_AS(xt.eval(pt({0, 0, 0, 0})), AdmissibilityError);
    // f = q: df = dq lies in the kernel pairing too (a1 component ~ 1/t).
    HamiltonianField xq(Observable::smooth(ScalarField::coordinate(1), "q"), form);
    CHECK_THROWS_AS(xq.eval(pt({0, 0.3, 0, 0})), AdmissibilityError);
}

TEST_CASE("off-Z solver residual") {
    auto form = martinet_form();
    HamiltonianField x(half_t_squared(), form);
    Rng rng(4);
    for (int k = 0; k < 25; ++k) {
        Vec p = pt({rng.uniform(-0.9, 0.9), rng.uniform(-1, 1), rng.uniform(-1, 1),
                    rng.uniform(-1, 1)});
        if (std::abs(p[0]) < 1e-3) p[0] = 0.5;
        const Vec rhs = x.source().differential_at(form->chart(), p);
        const Vec resid = form->matrix(p) * x.eval(p) - rhs;
        CHECK(resid.norm() <= 1e-10 * (1.0 + rhs.norm()));
    }
}

TEST_CASE("folded spherical pendulum solver matches the closed form") {
    GalleryEntry e = instantiate("spherical_pendulum");
    // Spec anchor point (theta = pi/2, phi = 0, P_theta = 1, P_phi = 2):
    // (theta', phi', P_theta', P_phi') = (1, 1, 1, 0).
    const Vec x = e.system.field(0).eval(pt({M_PI / 2, 0.0, 1.0, 2.0}));
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(x[2] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(x[3]) < 1e-12);

    Rng rng(9);
    const auto pts = random_points(e.system.chart(), 100, rng, 0.05);
    for (const auto& p : pts) {
        const Vec a = e.system.field(0).eval(p);
        const Vec b = e.oracle_field(p);
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-8);
    }
    // Points on Z = {P_phi = 0} via the extension.
    for (auto p : z_samples(e.system.chart(), 20, 2)) {
        const Vec a = e.system.field(0).eval(p);
        const Vec b = e.oracle_field(p);
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("twisted b-lift: X_{log|a1|} = -(1/c) d/dtheta1") {
    for (double c : {0.5, 1.0, 2.0}) {
        IntegrableSystem lift = twisted_b_cotangent_lift(2, c);
        const Vec x = lift.field(0).eval(pt({0.1, 0.2, 0.5, 0.3}));
        CHECK(x[0] == doctest::Approx(-1.0 / c).epsilon(1e-12));
        CHECK(std::abs(x[1]) < 1e-12);
        CHECK(std::abs(x[2]) < 1e-12);
        CHECK(std::abs(x[3]) < 1e-12);
        // The b-field is tangent to Z: the a1 component vanishes on Z exactly.
        const Vec on_z = lift.field(0).eval(pt({0.1, 0.2, 0.0, 0.3}));
        CHECK(on_z[2] == 0.0);
    }
}

TEST_CASE("poisson brackets: pendulum pair, Martinet pair, antisymmetry") {
    GalleryEntry pend = instantiate("spherical_pendulum");
    auto bracket = poisson_bracket(pend.system.observable(0), pend.system.observable(1),
                                   pend.system.form_ptr());
    Rng rng(11);
    for (const auto& p : random_points(pend.system.chart(), 200, rng, 0.05))
        CHECK(std::abs(bracket.value(p)) < 1e-8);

    auto form = martinet_form();
    auto b2 = poisson_bracket(half_t_squared(),
                              Observable::smooth(ScalarField::coordinate(2), "x2"), form);
    CHECK(std::abs(b2.value(pt({0.4, 0.1, 0.2, 0.3}))) < 1e-10);

    // {f, f} = 0 and exact antisymmetry at every sample.
    auto bff = poisson_bracket(half_t_squared(), half_t_squared(), form);
    auto bfg = poisson_bracket(half_t_squared(),
                               Observable::smooth(ScalarField::coordinate(2), "x2"), form);
    auto bgf = poisson_bracket(Observable::smooth(ScalarField::coordinate(2), "x2"),
                               half_t_squared(), form);
    for (const auto& p : random_points(form->chart(), 50, rng, 0.05)) {
        CHECK(bff.value(p) == 0.0);
        CHECK(bfg.value(p) == -bgf.value(p)); // exact, not approximate
    }
}

TEST_CASE("{H, P_phi^2} vanishes on a large pendulum grid") {
    GalleryEntry pend = instantiate("spherical_pendulum");
    SamplePlan plan;
    plan.n_interior = 10000;
    plan.n_z = 500;
    const auto rep = check_commutation(pend.system, plan, 1e-8);
    CHECK(rep.pass);
    CHECK(rep.worst <= 1e-8);
}
