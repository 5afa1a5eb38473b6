#include "foldsym/products.hpp"

#include <cmath>

namespace foldsym {

namespace {

ScalarField shift_field(const ScalarField& f, int offset, int full_dim) {
    ScalarField out;
    out.value = [f, offset](const Vec& p) { return f.value(p.segment(offset, p.size() - offset)); };
    if (f.has_grad()) {
        out.grad = [f, offset, full_dim](const Vec& p) {
            Vec g = Vec::Zero(full_dim);
            g.segment(offset, full_dim - offset) = f.grad(p.segment(offset, p.size() - offset));
            return g;
        };
    }
    return out;
}

std::function<double(const Vec&)> shift_coeff(std::function<double(const Vec&)> c, int offset) {
    return [c = std::move(c), offset](const Vec& p) {
        return c(p.segment(offset, p.size() - offset));
    };
}

std::function<double(const Vec&)> head_coeff(std::function<double(const Vec&)> c, int sub_dim) {
    return [c = std::move(c), sub_dim](const Vec& p) { return c(p.head(sub_dim)); };
}

} // namespace

IntegrableSystem product_with_folded_surface(const FoldedSurface& surface,
                                             const IntegrableSystem& symplectic_factor,
                                             const std::vector<double>& weights) {
    if (surface.chart->dim() != 2) throw ConfigError("product: the surface factor must be 2d");
    if (surface.t_coord < 0 || surface.t_coord > 1)
        throw ConfigError("product: the fold function must be aligned with a surface coordinate");
    if (symplectic_factor.form().kind() != FormKind::Symplectic)
        throw ConfigError("product: the second factor must be symplectic");

    // Transversality of t at sampled zeros of the fold.
    {
        const Chart& sc = *surface.chart;
        auto zeros = interior_samples(sc, 64, 7);
        for (auto& p : zeros) {
            p[surface.t_coord] = 0.0;
            const Vec dt = differential(sc, surface.t, p);
            if (dt.norm() < 1e-8)
                throw GeometryError("product: fold function not transverse to 0 at a sampled zero");
        }
    }

    const Chart& mc = symplectic_factor.chart();
    const int dM = mc.dim();
    const int n = symplectic_factor.n();

    if (!weights.empty()) {
        if (static_cast<int>(weights.size()) != n)
            throw ConfigError("product: weight vector must have n entries");
        double norm = 0.0;
        for (double w : weights) norm += std::abs(w);
        if (norm == 0.0)
            throw ConfigError("product: the weight vector must be nontrivial");
    }

    std::vector<Coord> coords = surface.chart->coords();
    for (const auto& c : mc.coords()) coords.push_back(c);
    auto chart = std::make_shared<Chart>("product_" + surface.chart->name() + "_" + mc.name(),
                                         std::move(coords), surface.t_coord);

    // omega = t * omega_Sigma + omega_1.
    TwoFormField omega;
    const ScalarField t_field = surface.t;
    for (const auto& term : surface.area.terms()) {
        auto c = head_coeff(term.c, 2);
        omega.add(term.i, term.j, [c, t_field](const Vec& p) {
            return t_field.value(p.head(2)) * c(p);
        });
    }
    for (const auto& term : symplectic_factor.form().omega().terms())
        omega.add(term.i + 2, term.j + 2, shift_coeff(term.c, 2));

    auto form = std::make_shared<SingularForm>(SingularForm::folded(chart, std::move(omega)));

    // Observables (t^2, f_1, ..., f_n) or (t^2 sum_i w_i f_i, f_1, ..., f_n);
    // the product chart keeps n+1 = dim/2 observables.
    std::vector<Observable> obs;
    std::vector<ScalarField> lifted;
    lifted.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        lifted.push_back(shift_field(symplectic_factor.observable(i).g(), 2, 2 + dM));

    ScalarField t2;
    if (weights.empty()) {
        t2.value = [t_field](const Vec& p) {
            const double t = t_field.value(p.head(2));
            return t * t;
        };
    } else {
        t2.value = [t_field, lifted, weights](const Vec& p) {
            const double t = t_field.value(p.head(2));
            double s = 0.0;
            for (size_t i = 0; i < lifted.size(); ++i) s += weights[i] * lifted[i].value(p);
            return t * t * s;
        };
    }
    obs.push_back(Observable::smooth(std::move(t2), "t^2"));
    for (int i = 0; i < n; ++i)
        obs.push_back(Observable::smooth(lifted[static_cast<size_t>(i)],
                                         symplectic_factor.observable(i).name()));
    return IntegrableSystem(form, std::move(obs));
}

IntegrableSystem folded_surface_system(const FoldedSurface& surface) {
    if (surface.chart->dim() != 2) throw ConfigError("surface system: chart must be 2d");
    if (surface.t_coord < 0) throw ConfigError("surface system: fold coordinate required");

    std::vector<Coord> coords = surface.chart->coords();
    auto chart = std::make_shared<Chart>(surface.chart->name(), std::move(coords),
                                         surface.t_coord);
    TwoFormField omega;
    const ScalarField t_field = surface.t;
    for (const auto& term : surface.area.terms()) {
        auto c = term.c;
        omega.add(term.i, term.j,
                  [c, t_field](const Vec& p) { return t_field.value(p) * c(p); });
    }
    auto form = std::make_shared<SingularForm>(SingularForm::folded(chart, std::move(omega)));
    ScalarField t2;
    t2.value = [t_field](const Vec& p) {
        const double t = t_field.value(p);
        return t * t;
    };
    std::vector<Observable> obs;
    obs.push_back(Observable::smooth(std::move(t2), "t^2"));
    return IntegrableSystem(form, std::move(obs));
}

} // namespace foldsym
