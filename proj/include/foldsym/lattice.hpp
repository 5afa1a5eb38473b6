#ifndef FOLDSYM_LATTICE_HPP
#define FOLDSYM_LATTICE_HPP

#include "foldsym/integrator.hpp"
#include "foldsym/system.hpp"

namespace foldsym {

// Composition of the n Hamiltonian flows phi_1^{tau_1} o ... o phi_n^{tau_n}.
Vec joint_flow(const IntegrableSystem& sys, const Vec& p0, const Vec& tau,
               const IntegratorOptions& opts = {});

// Drift of each first integral along a trajectory of field i.
Vec integral_drift(const IntegrableSystem& sys, const Trajectory& traj);

struct LatticeOptions {
    double tol = 1e-9;           // Newton target for |Phi(lambda)(p0) - p0|
    double search_tmax = 10.0;   // near-return search box [0, tmax]^n
    double search_step = 0.05;
    double near_return = 0.35;   // candidate threshold for the coarse search
    int max_newton = 30;
    int max_candidates = 8;
    IntegratorOptions integrator{};
};

struct PeriodLattice {
    Vec base;
    std::vector<Vec> basis; // n flow-time vectors lambda_1..lambda_n
    std::vector<double> residuals;

    Mat basis_matrix() const; // columns lambda_i
};

// Coarse grid search for near-returns of the joint flow, Newton refinement
// of Phi(lambda)(p0) = p0, and reduction to a near-minimal basis.
PeriodLattice period_lattice(const IntegrableSystem& sys, const Vec& p0,
                             const LatticeOptions& opts = {});

// Newton-only refinement from a warm-start basis (continuation).
PeriodLattice refine_lattice(const IntegrableSystem& sys, const Vec& p0,
                             const std::vector<Vec>& warm_basis, const LatticeOptions& opts = {});

// Residual |Phi(tau)(x) - x| in the chart metric.
double lattice_residual(const IntegrableSystem& sys, const Vec& x, const Vec& tau,
                        const IntegratorOptions& opts = {});

} // namespace foldsym

#endif
