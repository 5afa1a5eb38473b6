#include "foldsym/observable.hpp"

#include <cmath>

namespace foldsym {

Observable Observable::smooth(ScalarField f, std::string name) {
    Observable o;
    o.is_bfun_ = false;
    o.g_ = std::move(f);
    o.name_ = std::move(name);
    return o;
}

Observable Observable::bfun(double c, ScalarField g, std::string name) {
    Observable o;
    o.is_bfun_ = true;
    o.c_ = c;
    o.g_ = std::move(g);
    o.name_ = std::move(name);
    return o;
}

double Observable::value(const Chart& chart, const Vec& p) const {
    if (!is_bfun_) return g_.value(p);
    const double t = chart.z_value(p);
    if (t == 0.0) throw NumericsError("b-function evaluated on Z");
    return c_ * std::log(std::abs(t)) + g_.value(p);
}

Vec Observable::differential_at(const Chart& chart, const Vec& p, double h) const {
    Vec d = differential(chart, g_, p, h);
    if (is_bfun_) {
        const double t = chart.z_value(p);
        if (t == 0.0) throw NumericsError("b-function differential evaluated on Z");
        d[chart.z_index()] += c_ / t;
    }
    return d;
}

Observable Observable::scaled(double s, std::string new_name) const {
    Observable o = *this;
    o.c_ *= s;
    const ScalarField base = g_;
    o.g_.value = [base, s](const Vec& p) { return s * base.value(p); };
    if (base.has_grad())
        o.g_.grad = [base, s](const Vec& p) { return Vec(s * base.grad(p)); };
    else
        o.g_.grad = nullptr;
    if (!new_name.empty()) o.name_ = std::move(new_name);
    return o;
}

Vec frame_coefficients(const Observable& f, const SingularForm& form, const Vec& p,
                       const Tolerances& tol) {
    const Chart& chart = form.chart();
    chart.check_point(p);

    if (form.kind() == FormKind::Symplectic) {
        if (f.is_bfun()) throw ConfigError("b-function on a symplectic chart");
        return differential(chart, f.g(), p, tol.fd_h);
    }

    const int it = chart.z_index();
    const double t = chart.z_value(p);

    if (form.kind() == FormKind::BSymplectic) {
        Vec coeff = differential(chart, f.g(), p, tol.fd_h);
        const double dgdt = coeff[it];
        coeff[it] = f.c() + t * dgdt;
        return coeff;
    }

    // Folded frame.
    if (f.is_bfun()) throw ConfigError("b-function observable on a folded form");
    Vec coeff = differential(chart, f.g(), p, tol.fd_h);
    const double band = tol.z_band_rel * chart.z_range();
    if (std::abs(t) > band) {
        coeff[it] = coeff[it] / t;
        return coeff;
    }
    // On Z the (t dt) coefficient is lim (1/t) df/dt = d^2 f/dt^2|_{t=0},
    // which exists only when df/dt vanishes on Z.
    const double scale = 1.0 + coeff.norm();
    if (std::abs(coeff[it]) > 1e-6 * scale)
        throw AdmissibilityError("folded frame on Z: df/dt does not vanish (f is not a folded function)");
    coeff[it] = second_partial(chart, f.g(), p, it, 1e-4);
    return coeff;
}

} // namespace foldsym
