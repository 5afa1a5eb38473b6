#include "foldsym/desingularize.hpp"

#include <cmath>

namespace foldsym {

DesingularizationProfile::DesingularizationProfile(double eps) : eps_(eps) {
    if (!(eps > 0)) throw ConfigError("desingularization: eps must be positive");
    // G(t) = integral of the quintic derivative; continuity at eps fixes the
    // constant: f(eps) = log(eps).
    const double g_eps = 3.0 / 2.0 - 3.0 / 4.0 + 1.0 / 6.0; // G(eps) in units of 1
    offset_ = std::log(eps_) - g_eps;
}

double DesingularizationProfile::derivative(double t) const {
    const double a = std::abs(t);
    if (a >= eps_) return 1.0 / t;
    const double u = t / eps_;
    return (3.0 * u - 3.0 * u * u * u + u * u * u * u * u) / eps_;
}

double DesingularizationProfile::h(double t) const {
    const double a = std::abs(t);
    if (a >= eps_) return 1.0 / (t * t);
    const double y = (t * t) / (eps_ * eps_);
    return (3.0 - 3.0 * y + y * y) / (eps_ * eps_);
}

double DesingularizationProfile::value(double t) const {
    const double a = std::abs(t);
    if (a >= eps_) return std::log(a);
    const double u = a / eps_;
    const double u2 = u * u;
    const double g = 1.5 * u2 - 0.75 * u2 * u2 + (1.0 / 6.0) * u2 * u2 * u2;
    return offset_ + g;
}

SingularForm desingularize(const SingularForm& b_form, double eps) {
    if (b_form.kind() != FormKind::BSymplectic)
        throw ConfigError("desingularize expects a b-symplectic form");
    const Chart& chart = b_form.chart();
    const int it = chart.z_index();
    const Coord& zc = chart.coord(it);
    if (eps >= std::min(-zc.lo, zc.hi))
        throw GeometryError("desingularize: eps collar leaves the chart");

    DesingularizationProfile prof(eps);
    const OneFormField alpha = b_form.alpha();
    const int d = chart.dim();

    // omega_eps = f_eps'(t) dt ^ alpha + beta. For |t| >= eps the coefficient
    // is 1/t, the exact off-Z evaluation of the b-form.
    TwoFormField omega = b_form.beta();
    for (int j = 0; j < d; ++j) {
        if (j == it) continue;
        omega.add(it, j, [alpha, prof, it, j, d](const Vec& p) {
            return prof.derivative(p[it]) * alpha.covector(p, d)[j];
        });
    }
    return SingularForm::folded(b_form.chart_ptr(), std::move(omega));
}

Observable desingularize_observable(const Observable& f, const Chart& chart, double eps) {
    if (!f.is_bfun()) return f;
    DesingularizationProfile prof(eps);
    const double c = f.c();
    const ScalarField g = f.g();
    const int it = chart.z_index();
    ScalarField out;
    out.value = [c, g, prof, it](const Vec& p) { return c * prof.value(p[it]) + g.value(p); };
    if (g.has_grad()) {
        out.grad = [c, g, prof, it](const Vec& p) {
            Vec gr = g.grad(p);
            gr[it] += c * prof.derivative(p[it]);
            return gr;
        };
    }
    return Observable::smooth(std::move(out), f.name() + "_eps");
}

IntegrableSystem desingularize_system(const IntegrableSystem& sys, double eps) {
    auto form = std::make_shared<SingularForm>(desingularize(sys.form(), eps));
    std::vector<Observable> obs;
    obs.reserve(static_cast<size_t>(sys.n()));
    for (int i = 0; i < sys.n(); ++i)
        obs.push_back(desingularize_observable(sys.observable(i), sys.chart(), eps));
    return IntegrableSystem(form, std::move(obs), sys.solve_options());
}

} // namespace foldsym
