#ifndef FOLDSYM_FORMS_HPP
#define FOLDSYM_FORMS_HPP

#include <memory>
#include <string>
#include <vector>

#include "foldsym/fields.hpp"
#include "foldsym/sampling.hpp"

namespace foldsym {

enum class FormKind { Symplectic, Folded, BSymplectic };

std::string to_string(FormKind k);

struct Tolerances {
    double closed = 1e-6;          // max |d omega| on samples
    double fold_vanish = 1e-6;     // |omega^n / vol| on Z
    double fold_margin = 1e-6;     // |d_t (omega^n / vol)| >= margin on Z
    double b_margin = 1e-8;        // nondegeneracy margin on Z
    double rank_rel = 1e-8;        // singular values below rank_rel * s_max count as zero
    double z_band_rel = 1e-9;      // |t| below this (times z range) is "on Z"
    double fd_h = kFdStepRel;
};

// A closed 2-form on a chart, tagged symplectic / folded / b-symplectic.
// b-forms are stored as the decomposition (dt/t) ^ alpha + beta and evaluate
// off Z to (1/t) dt ^ alpha + beta.
class SingularForm {
public:
    static SingularForm symplectic(ChartPtr chart, TwoFormField omega);
    static SingularForm folded(ChartPtr chart, TwoFormField omega);
    static SingularForm b_symplectic(ChartPtr chart, OneFormField alpha, TwoFormField beta);

    FormKind kind() const { return kind_; }
    const Chart& chart() const { return *chart_; }
    ChartPtr chart_ptr() const { return chart_; }
    int dim() const { return chart_->dim(); }

    bool singular() const { return kind_ != FormKind::Symplectic; }
    double z_band() const;

    // Smooth-coordinate matrix of the evaluated form. For b-forms this blows
    // up on Z; callers stay outside the z band.
    Mat matrix(const Vec& p) const;

    // b-form in the b-coframe (dt/t slot at the z index): finite for all t.
    Mat b_frame_matrix(const Vec& p) const;

    const TwoFormField& omega() const { return omega_; }
    const OneFormField& alpha() const { return alpha_; }
    const TwoFormField& beta() const { return beta_; }

    // Kernel V of omega(p) (2-dimensional on Z for validated folded forms).
    // Columns are an orthonormal kernel basis.
    Mat kernel_of_form(const Vec& p, double rank_rel = 1e-8) const;

    // Null line L = V with TZ at a Z point: kernel of the pullback i* omega,
    // returned as a unit chart vector with zero z component.
    Vec null_line(const Vec& p, double rank_rel = 1e-8) const;

private:
    SingularForm(ChartPtr chart, FormKind kind) : chart_(std::move(chart)), kind_(kind) {}

    ChartPtr chart_;
    FormKind kind_;
    TwoFormField omega_;
    OneFormField alpha_;
    TwoFormField beta_;
};

using FormPtr = std::shared_ptr<const SingularForm>;

struct CheckItem {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;
};

struct ValidationReport {
    std::vector<CheckItem> items;
    bool pass = true;

    void add(CheckItem item);
    const CheckItem* find(const std::string& name) const;
};

// Validate closedness and the per-kind nondegeneracy/transversality
// invariants on a sampling plan.
ValidationReport validate_form(const SingularForm& form, const SamplePlan& plan = {},
                               const Tolerances& tol = {});

} // namespace foldsym

#endif
