#include "foldsym/hamiltonian.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace foldsym {

namespace {

// Antisymmetrized pairing sum in a fixed term order, so that swapping the
// arguments negates the result exactly in floating point.
double pair_form(const Mat& omega, const Vec& x, const Vec& y) {
    double s = 0.0;
    const int d = static_cast<int>(omega.rows());
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) s += omega(i, j) * (x[i] * y[j] - x[j] * y[i]);
    return s;
}

} // namespace

HamiltonianField::HamiltonianField(Observable source, FormPtr form, SolveOptions opts)
    : source_(std::move(source)), form_(std::move(form)), opts_(opts) {
    if (source_.is_bfun() && form_->kind() != FormKind::BSymplectic)
        throw ConfigError("b-function observable requires a b-symplectic form");
}

Vec HamiltonianField::solve_off_z(const Vec& p) const {
    const Mat omega = form_->matrix(p);
    const Vec rhs = source_.differential_at(form_->chart(), p, opts_.fd_h);
    return omega.partialPivLu().solve(rhs);
}

Vec HamiltonianField::solve_on_z(const Vec& p) const {
    const Chart& chart = form_->chart();
    const int it = chart.z_index();
    const Mat omega = form_->matrix(p);
    const Vec rhs = source_.differential_at(chart, p, opts_.fd_h);

    Eigen::JacobiSVD<Mat> svd(omega, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const int d = form_->dim();
    const double cut = opts_.rank_rel * s[0];
    int kdim = 0;
    for (int i = 0; i < d; ++i)
        if (s[i] <= cut) ++kdim;
    if (kdim != 2)
        throw NumericsError("folded form kernel on Z has dimension " + std::to_string(kdim) +
                            ", expected 2");

    // Consistency (Lemma-level admissibility): the right-hand side must be
    // orthogonal to the kernel, else there is no smooth solution.
    const double scale = 1.0 + rhs.norm();
    for (int i = d - kdim; i < d; ++i) {
        const double overlap = std::abs(svd.matrixU().col(i).dot(rhs));
        if (overlap > 1e-6 * scale)
            throw AdmissibilityError("inconsistent Hamiltonian equation on Z for observable '" +
                                     source_.name() + "'");
    }

    // Minimum-norm solve on the regular block.
    Vec x = Vec::Zero(d);
    for (int i = 0; i < d - kdim; ++i)
        x += (svd.matrixU().col(i).dot(rhs) / s[i]) * svd.matrixV().col(i);

    // Continuity extension of the kernel-direction components from t = +-h,
    // +-2h (Richardson). Components of a non-admissible observable blow up
    // like 1/t, which the two-sided disagreement detects.
    const double h = opts_.richardson_h_rel * chart.z_range();
    auto kernel_coeff = [&](double t, int col) {
        Vec q = p;
        q[it] = t;
        return svd.matrixV().col(col).dot(solve_off_z(q));
    };
    for (int col = d - kdim; col < d; ++col) {
        const double gp = kernel_coeff(h, col), gp2 = kernel_coeff(2 * h, col);
        const double gm = kernel_coeff(-h, col), gm2 = kernel_coeff(-2 * h, col);
        const double ep = 2 * gp - gp2;
        const double em = 2 * gm - gm2;
        const double mag = 1.0 + std::max({std::abs(gp), std::abs(gm), x.norm()});
        if (std::abs(ep - em) > opts_.extension_tol * mag)
            throw AdmissibilityError("no continuous extension of X on Z for observable '" +
                                     source_.name() + "'");
        x += 0.5 * (ep + em) * svd.matrixV().col(col);
    }
    return x;
}

Vec HamiltonianField::eval(const Vec& p) const {
    const Chart& chart = form_->chart();
    chart.check_point(p);
    switch (form_->kind()) {
        case FormKind::Symplectic:
            return solve_off_z(p);
        case FormKind::Folded: {
            const double band = form_->z_band();
            if (std::abs(chart.z_value(p)) <= band) return solve_on_z(p);
            return solve_off_z(p);
        }
        case FormKind::BSymplectic: {
            const Vec xi = form_->b_frame_matrix(p).partialPivLu().solve(
                frame_coefficients(source_, *form_, p));
            Vec x = xi;
            x[chart.z_index()] = chart.z_value(p) * xi[chart.z_index()];
            return x;
        }
    }
    throw Error("unreachable");
}

bool HamiltonianField::nearly_singular(const Vec& p) const {
    const Mat omega = (form_->kind() == FormKind::BSymplectic) ? form_->b_frame_matrix(p)
                                                               : form_->matrix(p);
    Eigen::JacobiSVD<Mat> svd(omega);
    const auto& s = svd.singularValues();
    const double smin = s[s.size() - 1];
    return smin == 0.0 || s[0] / smin > opts_.cond_warn;
}

HamiltonianField hamiltonian_vf(Observable f, FormPtr form, SolveOptions opts) {
    return HamiltonianField(std::move(f), std::move(form), opts);
}

AdmissibilityReport is_folded_function(const Observable& f, const SingularForm& form,
                                       const std::vector<Vec>& z_points, double tol,
                                       const SolveOptions& opts) {
    if (form.kind() != FormKind::Folded)
        throw ConfigError("is_folded_function requires a folded form");
    AdmissibilityReport rep;
    const Chart& chart = form.chart();
    for (const Vec& p0 : z_points) {
        Vec p = p0;
        p[chart.z_index()] = 0.0;
        const Mat kernel = form.kernel_of_form(p, opts.rank_rel);
        if (kernel.cols() != 2)
            throw NumericsError("folded form kernel on Z has dimension " +
                                std::to_string(kernel.cols()) + ", expected 2");
        const Vec df = f.differential_at(chart, p, opts.fd_h);
        double margin = 0.0;
        for (int c = 0; c < kernel.cols(); ++c)
            margin = std::max(margin, std::abs(df.dot(kernel.col(c))));
        const bool ok = margin <= tol;
        rep.samples.push_back({p, margin, ok});
        if (margin >= rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_point = p;
        }
        rep.pass = rep.pass && ok;
    }
    return rep;
}

ScalarField poisson_bracket(const Observable& f, const Observable& g, FormPtr form,
                            SolveOptions opts) {
    auto xf = std::make_shared<HamiltonianField>(f, form, opts);
    auto xg = std::make_shared<HamiltonianField>(g, form, opts);
    ScalarField out;
    out.value = [xf, xg, form](const Vec& p) {
        if (form->kind() == FormKind::BSymplectic) {
            // Frame pairing stays finite on Z.
            const Mat omega = form->b_frame_matrix(p);
            const Vec a = omega.partialPivLu().solve(
                frame_coefficients(xf->source(), *form, p));
            const Vec b = omega.partialPivLu().solve(
                frame_coefficients(xg->source(), *form, p));
            return pair_form(omega, a, b);
        }
        return pair_form(form->matrix(p), xf->eval(p), xg->eval(p));
    };
    return out;
}

} // namespace foldsym
