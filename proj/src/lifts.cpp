#include "foldsym/lifts.hpp"

#include <cmath>

namespace foldsym {

namespace {

ChartPtr torus_cotangent_chart(const std::string& name, int n, double extent,
                               bool with_z, const std::string& fiber) {
    if (n < 1 || n > 4) throw ConfigError(name + ": n must be in [1,4]");
    std::vector<Coord> coords;
    for (int i = 1; i <= n; ++i)
        coords.push_back({"theta" + std::to_string(i), CoordKind::Angle, 0, 1});
    for (int i = 1; i <= n; ++i)
        coords.push_back({fiber + std::to_string(i), CoordKind::Linear, -extent, extent});
    return make_chart(name, std::move(coords),
                      with_z ? std::optional<std::string>(fiber + "1") : std::nullopt);
}

} // namespace

IntegrableSystem twisted_b_cotangent_lift(int n, double c, double a_extent) {
    if (c == 0.0) throw ConfigError("twisted b-cotangent lift: c = 0 is degenerate");
    ChartPtr chart = torus_cotangent_chart("twisted_b_lift", n, a_extent, true, "a");

    OneFormField alpha;
    alpha.add(0, -c); // (da_1/a_1) ^ (-c dtheta_1) = (c/a_1) dtheta_1 ^ da_1
    TwoFormField beta;
    for (int i = 1; i < n; ++i) beta.add(i, n + i, 1.0);

    auto form = std::make_shared<SingularForm>(
        SingularForm::b_symplectic(chart, std::move(alpha), std::move(beta)));

    std::vector<Observable> obs;
    obs.push_back(Observable::bfun(1.0, ScalarField::constant(0.0), "log|a1|"));
    for (int i = 1; i < n; ++i)
        obs.push_back(Observable::smooth(ScalarField::coordinate(n + i),
                                         "a" + std::to_string(i + 1)));
    return IntegrableSystem(form, std::move(obs));
}

IntegrableSystem folded_cotangent_lift(int n, double p_extent) {
    ChartPtr chart = torus_cotangent_chart("folded_lift", n, p_extent, true, "p");

    TwoFormField omega;
    omega.add(0, n, [n](const Vec& p) { return p[n]; }); // p_1 dtheta_1 ^ dp_1
    for (int i = 1; i < n; ++i) omega.add(i, n + i, 1.0);

    auto form = std::make_shared<SingularForm>(SingularForm::folded(chart, std::move(omega)));

    std::vector<Observable> obs;
    obs.push_back(Observable::smooth(
        ScalarField{[n](const Vec& p) { return p[n] * p[n]; },
                    [n](const Vec& p) {
                        Vec g = Vec::Zero(p.size());
                        g[n] = 2 * p[n];
                        return g;
                    }},
        "p1^2"));
    for (int i = 1; i < n; ++i)
        obs.push_back(Observable::smooth(ScalarField::coordinate(n + i),
                                         "p" + std::to_string(i + 1)));
    return IntegrableSystem(form, std::move(obs));
}

IntegrableSystem folded_cotangent_lift_halved(int n, double p_extent) {
    IntegrableSystem lift = folded_cotangent_lift(n, p_extent);
    return lift.with_scaled_observable(0, 0.5);
}

IntegrableSystem standard_cotangent_torus(int n, double p_extent) {
    ChartPtr chart = torus_cotangent_chart("standard_t_star_torus", n, p_extent, false, "p");
    TwoFormField omega;
    for (int i = 0; i < n; ++i) omega.add(i, n + i, 1.0);
    auto form = std::make_shared<SingularForm>(
        SingularForm::symplectic(chart, std::move(omega)));
    std::vector<Observable> obs;
    for (int i = 0; i < n; ++i)
        obs.push_back(Observable::smooth(ScalarField::coordinate(n + i),
                                         "p" + std::to_string(i + 1)));
    return IntegrableSystem(form, std::move(obs));
}

} // namespace foldsym
