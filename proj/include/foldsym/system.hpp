#ifndef FOLDSYM_SYSTEM_HPP
#define FOLDSYM_SYSTEM_HPP

#include <memory>
#include <vector>

#include "foldsym/hamiltonian.hpp"

namespace foldsym {

// A singular form together with n = dim/2 observables and their cached
// Hamiltonian fields.
class IntegrableSystem {
public:
    IntegrableSystem(FormPtr form, std::vector<Observable> observables,
                     SolveOptions opts = {});

    int n() const { return static_cast<int>(obs_.size()); }
    const SingularForm& form() const { return *form_; }
    FormPtr form_ptr() const { return form_; }
    const Chart& chart() const { return form_->chart(); }
    const Observable& observable(int i) const { return obs_.at(static_cast<size_t>(i)); }
    const std::vector<Observable>& observables() const { return obs_; }
    const HamiltonianField& field(int i) const { return fields_.at(static_cast<size_t>(i)); }
    const SolveOptions& solve_options() const { return opts_; }

    // Same form, observable i scaled by s.
    IntegrableSystem with_scaled_observable(int i, double s) const;

private:
    FormPtr form_;
    std::vector<Observable> obs_;
    std::vector<HamiltonianField> fields_;
    SolveOptions opts_;
};

struct PairResult {
    int i = 0, j = 0;
    double max_abs = 0.0;
    Vec worst_point;
};

struct CommutationReport {
    bool pass = true;
    double tol = 0.0;
    double worst = 0.0;
    std::vector<PairResult> pairs;
    int skipped = 0; // solver failures, recorded and skipped
};

CommutationReport check_commutation(const IntegrableSystem& sys, const SamplePlan& plan,
                                    double tol = 1e-8);

struct IndependenceOptions {
    double rank_rel = 1e-8;
    double density_threshold = 0.95; // dense-set proxy
};

struct IndependenceReport {
    bool pass = false;
    double interior_fraction = 0.0;
    double z_fraction = 1.0; // 1 when the form is not singular
    int interior_total = 0, z_total = 0;
    double threshold = 0.95;
    std::string note = "density proxy for the paper's dense-set condition";
};

// Fraction of samples where the n x 2n array of singular-coframe
// coefficients has rank n.
IndependenceReport check_independence(const IntegrableSystem& sys, const SamplePlan& plan,
                                      const IndependenceOptions& opts = {});

enum class PointClass { Regular, Singular };

// Rank of the n smooth Hamiltonian vector fields at p (with Z extension).
PointClass classify_point(const IntegrableSystem& sys, const Vec& p,
                          double rank_rel = 1e-8);

} // namespace foldsym

#endif
