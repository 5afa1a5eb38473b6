#ifndef FOLDSYM_BUILD4D_HPP
#define FOLDSYM_BUILD4D_HPP

#include "foldsym/mapping_torus.hpp"
#include "foldsym/system.hpp"

namespace foldsym {

// Bump plateau: identically 1 on (-delta, delta), identically 0 for
// |t| > delta_prime, exp(-1/x)-based in between.
struct BumpParams {
    double delta = 0.4;
    double delta_prime = 0.8;
};

double plateau_bump(double t, const BumpParams& bump);
// Flat ramp: 0 for x <= 0 (all derivatives), exp(-1/x) for x > 0.
double flat_ramp(double x);

enum class Build4dVariant {
    BIntegrable,      // (phi(t) c log|t|, phi(t) F~) on the b-form
    DesingularizedFolded // (phi(t) t^2, phi(t) F~) on omega_eps
};

struct Build4dOptions {
    double modular_period = 1.0; // c
    double t_extent = 0.95;      // chart box (-t_extent, t_extent); keep < 1
    double cap = 1e-4;           // pole-flat cap width of the leaf function, in h
    Build4dVariant variant = Build4dVariant::BIntegrable;
    double desing_eps = 0.5;     // only for the folded variant
};

struct Built4d {
    IntegrableSystem system;
    ChartPtr chart;              // (h, u, s, t)
    double modular_period = 1.0;
    BumpParams bump;
    // Leaf points of the exceptional orbits of the transverse circle action.
    std::vector<Vec> exceptional_leaf_points;
};

// Integrable system on the collar Z x (-eps, eps) of a mapping torus with
// finite-order rotation monodromy, glued to exterior Darboux-chart systems
// whose derivatives vanish where the collar functions die. Coordinates:
// (h, u, s, t) with u = psi + s/k untwisting the monodromy, so the invariant
// leaf function extends along the circle action as F~(h, u - s/k).
Built4d build_b_integrable_4d(const MappingTorus& mt, double eps, const BumpParams& bump,
                              const Build4dOptions& opts = {});

} // namespace foldsym

#endif
