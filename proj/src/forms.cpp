#include "foldsym/forms.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace foldsym {

std::string to_string(FormKind k) {
    switch (k) {
        case FormKind::Symplectic: return "symplectic";
        case FormKind::Folded: return "folded";
        case FormKind::BSymplectic: return "b-symplectic";
    }
    return "?";
}

SingularForm SingularForm::symplectic(ChartPtr chart, TwoFormField omega) {
    SingularForm f(std::move(chart), FormKind::Symplectic);
    f.omega_ = std::move(omega);
    return f;
}

SingularForm SingularForm::folded(ChartPtr chart, TwoFormField omega) {
    if (!chart->has_z())
        throw ConfigError("folded form requires a chart with a defining coordinate of Z");
    SingularForm f(std::move(chart), FormKind::Folded);
    f.omega_ = std::move(omega);
    return f;
}

SingularForm SingularForm::b_symplectic(ChartPtr chart, OneFormField alpha, TwoFormField beta) {
    if (!chart->has_z())
        throw ConfigError("b-symplectic form requires a chart with a defining coordinate of Z");
    SingularForm f(std::move(chart), FormKind::BSymplectic);
    f.alpha_ = std::move(alpha);
    f.beta_ = std::move(beta);
    return f;
}

double SingularForm::z_band() const {
    return 1e-9 * chart_->z_range();
}

Mat SingularForm::matrix(const Vec& p) const {
    const int d = dim();
    if (kind_ != FormKind::BSymplectic) return omega_.matrix(p, d);
    const int it = chart_->z_index();
    const double t = p[it];
    if (std::abs(t) <= z_band())
        throw NumericsError("b-form evaluated on the critical hypersurface");
    Mat m = beta_.matrix(p, d);
    const Vec a = alpha_.covector(p, d);
    for (int j = 0; j < d; ++j) {
        if (j == it) continue;
        m(it, j) += a[j] / t;
        m(j, it) -= a[j] / t;
    }
    return m;
}

Mat SingularForm::b_frame_matrix(const Vec& p) const {
    if (kind_ != FormKind::BSymplectic)
        throw ConfigError("b_frame_matrix is only defined for b-symplectic forms");
    const int d = dim();
    const int it = chart_->z_index();
    Mat m = beta_.matrix(p, d);
    const Vec a = alpha_.covector(p, d);
    for (int j = 0; j < d; ++j) {
        if (j == it) continue;
        m(it, j) += a[j];
        m(j, it) -= a[j];
    }
    return m;
}

Mat SingularForm::kernel_of_form(const Vec& p, double rank_rel) const {
    const Mat m = matrix(p);
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cut = rank_rel * s[0];
    int k = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s[i] <= cut) ++k;
    const int d = dim();
    Mat basis(d, k);
    for (int i = 0; i < k; ++i) basis.col(i) = svd.matrixV().col(d - k + i);
    return basis;
}

Vec SingularForm::null_line(const Vec& p, double rank_rel) const {
    if (kind_ != FormKind::Folded)
        throw ConfigError("null line is defined for folded forms");
    const int d = dim();
    const int it = chart_->z_index();
    Vec q = p;
    q[it] = 0.0;
    const Mat m = omega_.matrix(q, d);
    // Pullback to TZ: delete the z row and column.
    Mat sub(d - 1, d - 1);
    int r = 0;
    for (int i = 0; i < d; ++i) {
        if (i == it) continue;
        int c = 0;
        for (int j = 0; j < d; ++j) {
            if (j == it) continue;
            sub(r, c++) = m(i, j);
        }
        ++r;
    }
    Eigen::JacobiSVD<Mat> svd(sub, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (d >= 3 && s[d - 3] <= rank_rel * s[0])
        throw NumericsError("pullback of the folded form drops below rank 2n-2");
    Vec v = svd.matrixV().col(d - 2);
    Vec full = Vec::Zero(d);
    int c = 0;
    for (int j = 0; j < d; ++j) {
        if (j == it) continue;
        full[j] = v[c++];
    }
    return full / full.norm();
}

void ValidationReport::add(CheckItem item) {
    pass = pass && item.pass;
    items.push_back(std::move(item));
}

const CheckItem* ValidationReport::find(const std::string& name) const {
    for (const auto& it : items)
        if (it.name == name) return &it;
    return nullptr;
}

namespace {

// Signed ratio omega^n / vol as a function of the defining coordinate, for
// the transversality margin.
double pf_at(const SingularForm& form, Vec p, double t) {
    p[form.chart().z_index()] = t;
    return pfaffian(form.omega().matrix(p, form.dim()));
}

} // namespace

ValidationReport validate_form(const SingularForm& form, const SamplePlan& plan,
                               const Tolerances& tol) {
    ValidationReport rep;
    const Chart& chart = form.chart();
    const int d = form.dim();

    if (form.singular() && !chart.has_z())
        throw ConfigError("validate_form: singular kind declared on a chart without z_coord");

    const auto interior = interior_samples(chart, plan.n_interior, plan.seed, plan.margin);

    if (form.kind() != FormKind::BSymplectic) {
        double dmax = 0.0;
        for (const auto& p : interior)
            dmax = std::max(dmax, exterior_derivative_norm(chart, form.omega(), p, tol.fd_h));
        rep.add({"closedness", dmax, tol.closed, dmax <= tol.closed, "max |d omega|"});

        // Nondegeneracy away from Z (symplectic everywhere).
        double min_pf = std::numeric_limits<double>::infinity();
        for (const auto& p : interior) {
            if (form.singular() &&
                std::abs(chart.z_value(p)) < 0.05 * chart.z_range())
                continue;
            min_pf = std::min(min_pf, std::abs(pfaffian(form.omega().matrix(p, d))));
        }
        rep.add({"nondegenerate_off_z", min_pf, tol.fold_vanish,
                 min_pf > tol.fold_vanish, "min |omega^n / vol| off Z"});
    } else {
        // Closedness of the b decomposition near Z: d alpha and d beta.
        double damax = 0.0, dbmax = 0.0;
        std::vector<Vec> near_z = z_samples(chart, plan.n_z, plan.seed, plan.margin);
        {
            auto shifted = near_z;
            const double off = 0.1 * chart.z_range();
            for (auto& p : shifted) p[chart.z_index()] = off;
            near_z.insert(near_z.end(), shifted.begin(), shifted.end());
            for (auto& p : shifted) p[chart.z_index()] = -off;
            near_z.insert(near_z.end(), shifted.begin(), shifted.end());
        }
        for (const auto& p : near_z) {
            damax = std::max(damax, exterior_derivative_norm(chart, form.alpha(), p, tol.fd_h));
            dbmax = std::max(dbmax, exterior_derivative_norm(chart, form.beta(), p, tol.fd_h));
        }
        rep.add({"closedness_alpha", damax, tol.closed, damax <= tol.closed, "max |d alpha|"});
        rep.add({"closedness_beta", dbmax, tol.closed, dbmax <= tol.closed, "max |d beta|"});
    }

    if (form.kind() == FormKind::Folded) {
        const auto zs = z_samples(chart, plan.n_z, plan.seed, plan.margin);
        double vmax = 0.0, margin = std::numeric_limits<double>::infinity();
        int rank_bad = 0;
        const double h = 1e-4 * chart.z_range();
        for (const auto& p : zs) {
            vmax = std::max(vmax, std::abs(pf_at(form, p, 0.0)));
            const double der = (pf_at(form, p, h) - pf_at(form, p, -h)) / (2.0 * h);
            margin = std::min(margin, std::abs(der));
            // rank of i* omega on Z
            Mat m = form.omega().matrix(p, d);
            Mat sub(d - 1, d - 1);
            int r = 0;
            for (int i = 0; i < d; ++i) {
                if (i == chart.z_index()) continue;
                int c = 0;
                for (int j = 0; j < d; ++j) {
                    if (j == chart.z_index()) continue;
                    sub(r, c++) = m(i, j);
                }
                ++r;
            }
            Eigen::JacobiSVD<Mat> svd(sub);
            const auto& s = svd.singularValues();
            int rank = 0;
            for (int i = 0; i < s.size(); ++i)
                if (s[i] > tol.rank_rel * s[0]) ++rank;
            if (rank != d - 2) ++rank_bad;
        }
        rep.add({"fold_vanishing", vmax, tol.fold_vanish, vmax <= tol.fold_vanish,
                 "max |omega^n / vol| on Z"});
        rep.add({"fold_transversality", margin, tol.fold_margin, margin >= tol.fold_margin,
                 "min |d_t(omega^n / vol)| on Z"});
        rep.add({"fold_rank", static_cast<double>(rank_bad), 0.0, rank_bad == 0,
                 "Z samples where rank i*omega != 2n-2"});
    }

    if (form.kind() == FormKind::BSymplectic) {
        const auto zs = z_samples(chart, plan.n_z, plan.seed, plan.margin);
        double margin = std::numeric_limits<double>::infinity();
        for (const auto& p : zs) {
            // Nondegeneracy of (dt/t)^alpha + beta as a b-form is equivalent
            // to the b-frame matrix having full rank; its pfaffian equals
            // alpha ^ beta^{n-1} / vol up to a combinatorial constant.
            margin = std::min(margin, std::abs(pfaffian(form.b_frame_matrix(p))));
        }
        rep.add({"b_nondegeneracy", margin, tol.b_margin, margin > tol.b_margin,
                 "min |alpha ^ beta^{n-1}| on Z"});
    }

    return rep;
}

} // namespace foldsym
