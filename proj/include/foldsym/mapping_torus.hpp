#ifndef FOLDSYM_MAPPING_TORUS_HPP
#define FOLDSYM_MAPPING_TORUS_HPP

#include <Eigen/Core>
#include <optional>

#include "foldsym/averaging.hpp"
#include "foldsym/forms.hpp"

namespace foldsym {

// Mapping torus data: Z = (L x [0,k]) / (x,0) ~ (phi(x), k) with phi a
// symplectomorphism of the leaf. The homology action, when known, is
// user-supplied (the induced map on a chosen basis of degree-2 homology).
struct MappingTorus {
    ChartPtr leaf;
    TwoFormField leaf_form;
    PointMap monodromy;
    double period_k = 1.0;
    std::optional<Eigen::MatrixXi> homology_action;
    std::optional<int> order; // finite order of phi, when known
};

// phi preserves omega_L (pullback check) and phi^order = id on samples.
ValidationReport validate_mapping_torus(const MappingTorus& mt, const SamplePlan& plan = {},
                                        double tol = 1e-8);

enum class Obstruction { Trivial, Nontrivial, Unknown };

struct ObstructionReport {
    Obstruction verdict = Obstruction::Unknown;
    std::string reason;
};

std::string to_string(Obstruction o);

// Trivial if the monodromy is the identity on samples; nontrivial if a
// homology action is supplied and differs from the identity (global
// action-angle coordinates obstructed); otherwise unknown.
ObstructionReport obstruction_report(const MappingTorus& mt, const SamplePlan& plan = {},
                                     double tol = 1e-9);

struct ExceptionalOrbitOptions {
    int grid_per_axis = 9;
    double fixed_tol = 5e-3;  // accepted |phi^j(p) - p| in the leaf metric
    double dedup_tol = 5e-2;
    int max_newton = 60;
    double boundary_pad = 1e-6; // clamp distance from linear bounds
};

// Fixed points of phi^j, 1 <= j < k, from a leaf seed grid (Gauss-Newton in
// the leaf embedding, clamped to the chart); these trace the exceptional
// orbits of the transverse circle action.
std::vector<Vec> exceptional_orbits(const MappingTorus& mt,
                                    const ExceptionalOrbitOptions& opts = {});

} // namespace foldsym

#endif
