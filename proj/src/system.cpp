#include "foldsym/system.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace foldsym {

IntegrableSystem::IntegrableSystem(FormPtr form, std::vector<Observable> observables,
                                   SolveOptions opts)
    : form_(std::move(form)), obs_(std::move(observables)), opts_(opts) {
    const int n = form_->dim() / 2;
    if (static_cast<int>(obs_.size()) != n)
        throw ConfigError("integrable system needs n = dim/2 = " + std::to_string(n) +
                          " observables, got " + std::to_string(obs_.size()));
    int n_bfun = 0;
    for (const auto& o : obs_)
        if (o.is_bfun()) ++n_bfun;
    if (n_bfun > 1)
        throw ConfigError("at most one b-function observable per system");
    fields_.reserve(obs_.size());
    for (const auto& o : obs_) fields_.emplace_back(o, form_, opts_);
}

IntegrableSystem IntegrableSystem::with_scaled_observable(int i, double s) const {
    std::vector<Observable> obs = obs_;
    obs.at(static_cast<size_t>(i)) = obs_[static_cast<size_t>(i)].scaled(s);
    return IntegrableSystem(form_, std::move(obs), opts_);
}

CommutationReport check_commutation(const IntegrableSystem& sys, const SamplePlan& plan,
                                    double tol) {
    CommutationReport rep;
    rep.tol = tol;
    const int n = sys.n();
    auto points = interior_samples(sys.chart(), plan.n_interior, plan.seed, plan.margin);
    if (sys.form().singular()) {
        auto zs = z_samples(sys.chart(), plan.n_z, plan.seed, plan.margin);
        points.insert(points.end(), zs.begin(), zs.end());
    }
    std::vector<ScalarField> brackets;
    std::vector<std::pair<int, int>> index;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            brackets.push_back(poisson_bracket(sys.observable(i), sys.observable(j),
                                               sys.form_ptr(), sys.solve_options()));
            index.emplace_back(i, j);
        }
    for (size_t k = 0; k < brackets.size(); ++k) {
        PairResult pr;
        pr.i = index[k].first;
        pr.j = index[k].second;
        for (const auto& p : points) {
            try {
                const double v = std::abs(brackets[k].value(p));
                if (v >= pr.max_abs) {
                    pr.max_abs = v;
                    pr.worst_point = p;
                }
            } catch (const Error&) {
                ++rep.skipped;
            }
        }
        rep.worst = std::max(rep.worst, pr.max_abs);
        rep.pass = rep.pass && pr.max_abs <= tol;
        rep.pairs.push_back(std::move(pr));
    }
    return rep;
}

namespace {

int coeff_rank(const IntegrableSystem& sys, const Vec& p, double rank_rel) {
    const int n = sys.n();
    Mat rows(n, sys.form().dim());
    for (int i = 0; i < n; ++i)
        rows.row(i) = frame_coefficients(sys.observable(i), sys.form(), p).transpose();
    Eigen::JacobiSVD<Mat> svd(rows);
    const auto& s = svd.singularValues();
    if (s[0] == 0.0) return 0;
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s[i] > rank_rel * s[0]) ++rank;
    return rank;
}

} // namespace

IndependenceReport check_independence(const IntegrableSystem& sys, const SamplePlan& plan,
                                      const IndependenceOptions& opts) {
    IndependenceReport rep;
    rep.threshold = opts.density_threshold;
    const int n = sys.n();

    const auto interior = interior_samples(sys.chart(), plan.n_interior, plan.seed, plan.margin);
    int good = 0, total = 0;
    for (const auto& p : interior) {
        try {
            if (coeff_rank(sys, p, opts.rank_rel) == n) ++good;
            ++total;
        } catch (const Error&) {
        }
    }
    rep.interior_total = total;
    rep.interior_fraction = total ? static_cast<double>(good) / total : 0.0;

    if (sys.form().singular()) {
        const auto zs = z_samples(sys.chart(), plan.n_z, plan.seed, plan.margin);
        int zgood = 0, ztotal = 0;
        for (const auto& p : zs) {
            try {
                if (coeff_rank(sys, p, opts.rank_rel) == n) ++zgood;
                ++ztotal;
            } catch (const Error&) {
            }
        }
        rep.z_total = ztotal;
        rep.z_fraction = ztotal ? static_cast<double>(zgood) / ztotal : 0.0;
    }

    rep.pass = rep.interior_fraction >= opts.density_threshold &&
               rep.z_fraction >= opts.density_threshold;
    return rep;
}

PointClass classify_point(const IntegrableSystem& sys, const Vec& p, double rank_rel) {
    const int n = sys.n();
    Mat rows(n, sys.form().dim());
    for (int i = 0; i < n; ++i) rows.row(i) = sys.field(i).eval(p).transpose();
    Eigen::JacobiSVD<Mat> svd(rows);
    const auto& s = svd.singularValues();
    if (s[0] == 0.0) return PointClass::Singular;
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s[i] > rank_rel * s[0]) ++rank;
    return rank == n ? PointClass::Regular : PointClass::Singular;
}

} // namespace foldsym
