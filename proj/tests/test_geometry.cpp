#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "foldsym/expression.hpp"
#include "foldsym/forms.hpp"
#include "foldsym/gallery.hpp"

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

SingularForm martinet_form(ChartPtr chart) {
    TwoFormField w;
    w.add(0, 1, [](const Vec& p) { return p[0]; });
    w.add(2, 3, 1.0);
    return SingularForm::folded(chart, std::move(w));
}

Vec pt(std::initializer_list<double> v) {
    Vec p(static_cast<int>(v.size()));
    int i = 0;
    for (double x : v) p[i++] = x;
    return p;
}

} // namespace

TEST_CASE("point normalization reduces angles mod 1 and keeps linear coords") {
    auto chart = make_chart("c", {{"x", CoordKind::Linear, -4, 4},
                                  {"theta", CoordKind::Angle, 0, 1}});
    CHECK(chart->normalize(pt({3.0, 1.25}))[1] == doctest::Approx(0.25));
    CHECK(chart->normalize(pt({3.0, 1.25}))[0] == doctest::Approx(3.0));
    CHECK(chart->normalize(pt({0.0, -0.25}))[1] == doctest::Approx(0.75));
    CHECK_THROWS_AS(chart->normalize(pt({1.0, 2.0, 3.0})), DimensionError);
}

TEST_CASE("chart invariants") {
    CHECK_THROWS_AS(make_chart("odd", {{"x", CoordKind::Linear, -1, 1}}), DimensionError);
    // 0 must lie in the z interval
    CHECK_THROWS_AS(make_chart("bad_z",
                               {{"t", CoordKind::Linear, 0.5, 1.0},
                                {"q", CoordKind::Linear, -1, 1}},
                               "t"),
                    ConfigError);
    CHECK_THROWS_AS(make_chart("dup", {{"x", CoordKind::Linear, -1, 1},
                                       {"x", CoordKind::Linear, -1, 1}}),
                    ConfigError);
}

TEST_CASE("differential: polynomial, product field, exact-grad passthrough") {
    auto chart = make_chart("c2", {{"t", CoordKind::Linear, -4, 4},
                                   {"q", CoordKind::Linear, -4, 4}});
    ScalarField f;
    f.value = [](const Vec& p) { return 0.5 * p[0] * p[0]; };
    const Vec d = differential(*chart, f, pt({3.0, 0.0}));
    CHECK(d[0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(d[1] == doctest::Approx(0.0));

    // f = cos(theta) h^2 on the sphere chart at (h=1, theta=0): df = 2 dh,
    // against a symbolic-derivative oracle.
    auto sphere = make_chart("s", {{"h", CoordKind::Linear, -1.5, 1.5},
                                   {"theta", CoordKind::Angle, 0, 1}});
    ScalarField g;
    g.value = [](const Vec& p) { return std::cos(2 * M_PI * p[1]) * p[0] * p[0]; };
    auto oracle = [](const Vec& p) {
        return pt({2 * p[0] * std::cos(2 * M_PI * p[1]),
                   -2 * M_PI * p[0] * p[0] * std::sin(2 * M_PI * p[1])});
    };
    const Vec dg = differential(*sphere, g, pt({1.0, 0.0}));
    CHECK(dg[0] == doctest::Approx(oracle(pt({1.0, 0.0}))[0]).epsilon(1e-8));
    CHECK(dg[1] == doctest::Approx(0.0).epsilon(1e-8));

    ScalarField withgrad;
    withgrad.value = [](const Vec&) { return 0.0; };
    withgrad.grad = [](const Vec& p) {
        Vec v(p.size());
        v << 7.0, -1.0;
        return v;
    };
    CHECK(differential(*chart, withgrad, pt({0.1, 0.2}))[0] == 7.0);
}

TEST_CASE("two-form storage is exactly antisymmetric") {
    TwoFormField w;
    w.add(1, 0, [](const Vec& p) { return p[0] + 2.0; }); // flipped indices
    const Mat m = w.matrix(pt({0.3, 0.0}), 2);
    CHECK(m(0, 1) == -m(1, 0));
    CHECK(m(0, 1) == doctest::Approx(-2.3)); // dx1 ^ dx0 = -(x0+2) dx0 ^ dx1
    CHECK(m(0, 0) == 0.0);
}

TEST_CASE("pfaffian of small antisymmetric matrices") {
    Mat a = Mat::Zero(4, 4);
    a(0, 1) = 2.0;
    a(1, 0) = -2.0;
    a(2, 3) = 3.0;
    a(3, 2) = -3.0;
    CHECK(pfaffian(a) == doctest::Approx(6.0));
    a(0, 2) = 0.5;
    a(2, 0) = -0.5;
    // pf = a01 a23 - a02 a13 + a03 a12
    CHECK(pfaffian(a) == doctest::Approx(6.0));
    CHECK(std::abs(pfaffian(a) * pfaffian(a) - a.determinant()) < 1e-12);
}

TEST_CASE("validate_form: Martinet form passes with rank 2 on Z") {
    auto chart = martinet_chart();
    auto form = martinet_form(chart);
    SamplePlan plan;
    plan.n_interior = 256;
    plan.n_z = 64;
    const auto rep = validate_form(form, plan);
    CHECK(rep.pass);
    CHECK(rep.find("fold_rank")->pass);
    CHECK(rep.find("closedness")->value <= 1e-6);
}

TEST_CASE("validate_form: order-2 degeneracy fails transversality") {
    auto chart = martinet_chart();
    TwoFormField w;
    w.add(0, 1, [](const Vec& p) { return p[0] * p[0]; }); // t^2 dt ^ dq
    w.add(2, 3, 1.0);
    const auto form = SingularForm::folded(chart, std::move(w));
    SamplePlan plan;
    plan.n_interior = 128;
    plan.n_z = 32;
    const auto rep = validate_form(form, plan);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.find("fold_transversality")->pass);
}

TEST_CASE("validate_form: b-Darboux form passes") {
    auto chart = martinet_chart();
    OneFormField alpha;
    alpha.add(1, 1.0); // (dt/t) ^ dq
    TwoFormField beta;
    beta.add(2, 3, 1.0);
    const auto form = SingularForm::b_symplectic(chart, std::move(alpha), std::move(beta));
    SamplePlan plan;
    plan.n_interior = 128;
    plan.n_z = 64;
    const auto rep = validate_form(form, plan);
    CHECK(rep.pass);
    CHECK(rep.find("b_nondegeneracy")->value > 1e-8);
}

TEST_CASE("validate_form: kind/z mismatch is a configuration error") {
    auto chart = make_chart("nz", {{"a", CoordKind::Linear, -1, 1},
                                   {"b", CoordKind::Linear, -1, 1}});
    TwoFormField w;
    w.add(0, 1, 1.0);
    CHECK_THROWS_AS(SingularForm::folded(chart, std::move(w)), ConfigError);
}

TEST_CASE("frame coefficients in the folded frame") {
    auto chart = martinet_chart();
    auto form = martinet_form(chart);

    // f = t^2/2 on Z: (t dt) coefficient is 1 (the continuous limit), others 0.
    ScalarField f;
    f.value = [](const Vec& p) { return 0.5 * p[0] * p[0]; };
    const Vec on_z = frame_coefficients(Observable::smooth(f), form, pt({0, 0.3, 0.1, -0.2}));
    CHECK(on_z[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(on_z[1] == doctest::Approx(0.0).epsilon(1e-9));

    // Continuity across Z: off-Z value (1/t) df/dt agrees with the on-Z limit.
    const Vec off_z = frame_coefficients(Observable::smooth(f), form, pt({1e-3, 0.3, 0.1, -0.2}));
    CHECK(off_z[0] == doctest::Approx(on_z[0]).epsilon(1e-5));

    // f = x2: plain partials, nothing in the (t dt) slot.
    const Vec dx2 = frame_coefficients(Observable::smooth(ScalarField::coordinate(2)), form,
                                       pt({0, 0, 0.5, 0.5}));
    CHECK(dx2[0] == doctest::Approx(0.0));
    CHECK(dx2[2] == doctest::Approx(1.0));

    // Non-admissible f = t has no finite (t dt) coefficient on Z.
    CHECK_THROWS_AS(frame_coefficients(Observable::smooth(ScalarField::coordinate(0)), form,
                                       pt({0, 0, 0, 0})),
                    AdmissibilityError);
}

TEST_CASE("frame coefficients in the b frame") {
    auto chart = martinet_chart();
    OneFormField alpha;
    alpha.add(1, 1.0);
    TwoFormField beta;
    beta.add(2, 3, 1.0);
    const auto form = SingularForm::b_symplectic(chart, std::move(alpha), std::move(beta));

    // b-function (c=2, g=0): (dt/t) coefficient 2 everywhere.
    const auto f = Observable::bfun(2.0, ScalarField::constant(0.0));
    CHECK(frame_coefficients(f, form, pt({0, 0, 0, 0}))[0] == doctest::Approx(2.0));
    CHECK(frame_coefficients(f, form, pt({0.5, 0, 0, 0}))[0] == doctest::Approx(2.0));

    // c + t dg/dt for g = t.
    const auto g = Observable::bfun(2.0, ScalarField::coordinate(0));
    CHECK(frame_coefficients(g, form, pt({0.25, 0, 0, 0}))[0] ==
          doctest::Approx(2.25).epsilon(1e-9));
}

TEST_CASE("kernel of a folded form on Z is 2-dimensional, null line is its TZ part") {
    auto chart = martinet_chart();
    auto form = martinet_form(chart);
    const Mat kernel = form.kernel_of_form(pt({0, 0.3, 0.2, 0.1}));
    CHECK(kernel.cols() == 2);
    // Kernel spans (d/dt, d/dq).
    for (int c = 0; c < 2; ++c) {
        CHECK(std::abs(kernel(2, c)) < 1e-12);
        CHECK(std::abs(kernel(3, c)) < 1e-12);
    }
    const Vec l = form.null_line(pt({0, 0.3, 0.2, 0.1}));
    CHECK(std::abs(l[1]) == doctest::Approx(1.0)); // d/dq direction
    CHECK(std::abs(l[0]) < 1e-12);
}

TEST_CASE("expression parser") {
    auto chart = make_chart("e", {{"t", CoordKind::Linear, -2, 2},
                                  {"theta", CoordKind::Angle, 0, 1}});
    auto f = Expression::parse("t^2/2 + cos(2*pi*theta) - 1").bind(*chart);
    CHECK(f.value(pt({2.0, 0.0})) == doctest::Approx(2.0));
    CHECK(f.value(pt({0.0, 0.5})) == doctest::Approx(-2.0));
    CHECK(Expression::parse("log(abs(-2.718281828459045))").eval({}) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(Expression::parse("-t^2").bind(*chart).value(pt({2.0, 0})) == doctest::Approx(-4.0));
    CHECK_THROWS_AS(Expression::parse("t +"), ConfigError);
    CHECK_THROWS_AS(Expression::parse("nope(t)").bind(*chart).value(pt({1.0, 0})), ConfigError);
}

TEST_CASE("closedness residual catches a non-closed form") {
    auto chart = martinet_chart();
    TwoFormField w;
    w.add(0, 1, [](const Vec& p) { return p[0]; });
    w.add(2, 3, [](const Vec& p) { return 1.0 + 0.3 * p[0]; }); // d omega != 0
    const double dmax = exterior_derivative_norm(*chart, w, pt({0.2, 0.1, 0.0, 0.0}));
    CHECK(dmax > 0.2);
}

TEST_CASE("sphere chart distance degenerates at the poles") {
    auto s2 = sphere_chart("s2");
    const double near_pole = s2->distance(pt({1.0 - 1e-6, 0.0}), pt({1.0 - 1e-6, 0.5}));
    const double equator = s2->distance(pt({0.0, 0.0}), pt({0.0, 0.5}));
    CHECK(near_pole < 5e-3);
    CHECK(equator > 1.5);
}
