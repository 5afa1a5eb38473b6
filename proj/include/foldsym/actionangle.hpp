#ifndef FOLDSYM_ACTIONANGLE_HPP
#define FOLDSYM_ACTIONANGLE_HPP

#include <optional>

#include "foldsym/lattice.hpp"

namespace foldsym {

struct UniformizeOptions {
    LatticeOptions lattice{};
    double period_tol = 1e-6; // post-hoc unit-period verification of Y_i
    double jump_tol = 0.5;    // relative basis jump => monodromy in the region
};

// Lattice basis continued over a grid of base points (nearest-neighbor warm
// start). The uniformized fields Y_i = sum_j lambda_i^j X_j have period one
// at every grid node.
struct UniformizedRegion {
    std::vector<Vec> grid;
    std::vector<PeriodLattice> lattices;

    const PeriodLattice& nearest(const Chart& chart, const Vec& p) const;
};

UniformizedRegion uniformize(const IntegrableSystem& sys, const std::vector<Vec>& grid,
                             const UniformizeOptions& opts = {});

struct ActionAngleOptions {
    UniformizeOptions uniformize{};
    int loop_nodes = 256;  // trapezoid nodes for action loop integrals
    int gauss_nodes = 24;  // homotopy-operator quadrature
    std::optional<Vec> primitive_center; // non-angle scaling center; box center by default
    std::optional<Vec> section_point;    // transversal section through the region
    std::vector<int> section_coords;     // coordinates pinned by the section
    IntegratorOptions integrator{};
};

// Primitive lambda of the form via the radial-scaling homotopy operator in
// chart coordinates (angles frozen); for b-forms the singular part enters
// analytically as log|t| alpha.
Vec primitive_covector(const SingularForm& form, const Vec& p, const Vec& center,
                       int gauss_nodes = 24);

// Numerical action-angle chart built from a uniformized region (Liouville
// tori with period lattices), with actions from loop integrals of the
// primitive and angles from flow times to the section.
class ActionAngleChart {
public:
    ActionAngleChart(IntegrableSystem sys, UniformizedRegion region, ActionAngleOptions opts);

    int n() const { return sys_.n(); }
    const IntegrableSystem& system() const { return sys_; }
    const ActionAngleOptions& options() const { return opts_; }
    const UniformizedRegion& region() const { return region_; }

    // Lattice on the torus through p, warm-started from the region.
    PeriodLattice lattice_at(const Vec& p) const;

    Vec actions(const Vec& p) const;  // sigma_1..sigma_n
    Vec angles(const Vec& p) const;   // theta_1..theta_n in [0,1)

    // Coefficient c of the singular action c log|t| (b-forms).
    double singular_action_coefficient() const;
    int singular_index() const { return singular_index_; }

private:
    IntegrableSystem sys_;
    UniformizedRegion region_;
    ActionAngleOptions opts_;
    Vec center_;
    int singular_index_ = -1;
    mutable std::vector<PeriodLattice> cache_;
};

ActionAngleChart action_angle_chart(const IntegrableSystem& sys, const std::vector<Vec>& grid,
                                    ActionAngleOptions opts = {});

// sup over samples of |omega - sum_i d theta_i ^ d sigma_i| with the
// differentials taken numerically from the constructed maps. An optional
// scale vector multiplies each sigma_i (detector-sensitivity tests corrupt
// one action).
double normal_form_residual(const IntegrableSystem& sys, const ActionAngleChart& chart,
                            const std::vector<Vec>& samples,
                            const std::optional<Vec>& sigma_scale = std::nullopt);

// First-return time of the modular vector field (Hamiltonian field of
// log|t|) on Z; equals the modular period of the component.
double modular_period(FormPtr form, const Vec& z_point, double budget = 12.0,
                      double return_tol = 1e-7);

} // namespace foldsym

#endif
