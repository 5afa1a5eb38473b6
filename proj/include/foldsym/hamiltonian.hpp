#ifndef FOLDSYM_HAMILTONIAN_HPP
#define FOLDSYM_HAMILTONIAN_HPP

#include <optional>

#include "foldsym/observable.hpp"

namespace foldsym {

struct SolveOptions {
    double rank_rel = 1e-8;        // kernel threshold for V on Z
    double richardson_h_rel = 1e-4; // extension steps h, 2h relative to t range
    double extension_tol = 1e-3;   // two-sided extrapolation disagreement
    double cond_warn = 1e12;       // near-singularity warning threshold
    double fd_h = kFdStepRel;
};

// Smooth Hamiltonian vector field of an observable: solves i_X omega = -df
// off Z; on Z (folded) a minimum-norm consistent solve plus a continuity
// extension of the kernel components; b-forms solve in the b-frame where the
// system is nonsingular for all t.
class HamiltonianField {
public:
    HamiltonianField(Observable source, FormPtr form, SolveOptions opts = {});

    Vec eval(const Vec& p) const;
    Vec operator()(const Vec& p) const { return eval(p); }

    const Observable& source() const { return source_; }
    const SingularForm& form() const { return *form_; }
    FormPtr form_ptr() const { return form_; }
    const SolveOptions& options() const { return opts_; }

    // True if a near-singularity warning was raised at the last evaluation.
    bool nearly_singular(const Vec& p) const;

private:
    Vec solve_off_z(const Vec& p) const;
    Vec solve_on_z(const Vec& p) const;

    Observable source_;
    FormPtr form_;
    SolveOptions opts_;
};

HamiltonianField hamiltonian_vf(Observable f, FormPtr form, SolveOptions opts = {});

struct AdmissibilitySample {
    Vec point;
    double margin = 0.0; // max |df(v)| over unit kernel vectors
    bool pass = false;
};

struct AdmissibilityReport {
    bool pass = true;
    double worst_margin = 0.0;
    Vec worst_point;
    std::vector<AdmissibilitySample> samples;
};

// Lemma-level test: f has a smooth Hamiltonian field iff df annihilates the
// 2-dimensional kernel V of omega at every Z sample.
AdmissibilityReport is_folded_function(const Observable& f, const SingularForm& form,
                                       const std::vector<Vec>& z_points, double tol = 1e-6,
                                       const SolveOptions& opts = {});

// Pointwise omega(X_f, X_g) as a scalar field (extended fields on Z).
ScalarField poisson_bracket(const Observable& f, const Observable& g, FormPtr form,
                            SolveOptions opts = {});

} // namespace foldsym

#endif
