#include "foldsym/fields.hpp"

#include <cmath>

namespace foldsym {

ScalarField ScalarField::coordinate(int i) {
    return ScalarField{[i](const Vec& p) { return p[i]; }, [i](const Vec& p) {
                           Vec g = Vec::Zero(p.size());
                           g[i] = 1.0;
                           return g;
                       }};
}

namespace {
double fd_step(const Chart& chart, int i, double h) {
    const Coord& c = chart.coord(i);
    double range = (c.kind == CoordKind::Angle) ? 1.0 : (c.hi - c.lo);
    return h * range;
}
} // namespace

double partial(const Chart& chart, const ScalarField& f, const Vec& p, int i, double h) {
    if (f.has_grad()) return f.grad(p)[i];
    const double s = fd_step(chart, i, h);
    Vec a = p, b = p;
    a[i] += s;
    b[i] -= s;
    return (f.value(a) - f.value(b)) / (2.0 * s);
}

Vec differential(const Chart& chart, const ScalarField& f, const Vec& p, double h) {
    chart.check_point(p);
    if (f.has_grad()) {
        Vec g = f.grad(p);
        if (g.size() != chart.dim())
            throw DimensionError("exact gradient has wrong length on chart '" + chart.name() + "'");
        return g;
    }
    Vec g(chart.dim());
    for (int i = 0; i < chart.dim(); ++i) g[i] = partial(chart, f, p, i, h);
    return g;
}

double second_partial(const Chart& chart, const ScalarField& f, const Vec& p, int i, double h) {
    const double s = fd_step(chart, i, h);
    if (f.has_grad()) {
        Vec a = p, b = p;
        a[i] += s;
        b[i] -= s;
        return (f.grad(a)[i] - f.grad(b)[i]) / (2.0 * s);
    }
    Vec a = p, b = p;
    a[i] += s;
    b[i] -= s;
    return (f.value(a) - 2.0 * f.value(p) + f.value(b)) / (s * s);
}

OneFormField& OneFormField::add(int i, std::function<double(const Vec&)> c) {
    terms_.push_back(Term{i, std::move(c)});
    return *this;
}

OneFormField& OneFormField::add(int i, double constant) {
    return add(i, [constant](const Vec&) { return constant; });
}

Vec OneFormField::covector(const Vec& p, int dim) const {
    Vec a = Vec::Zero(dim);
    for (const auto& t : terms_) a[t.i] += t.c(p);
    return a;
}

TwoFormField& TwoFormField::add(int i, int j, std::function<double(const Vec&)> c) {
    if (i == j) throw ConfigError("two-form term dx_i ^ dx_i is zero");
    if (i < j) {
        terms_.push_back(Term{i, j, std::move(c)});
    } else {
        auto f = std::move(c);
        terms_.push_back(Term{j, i, [f](const Vec& p) { return -f(p); }});
    }
    return *this;
}

TwoFormField& TwoFormField::add(int i, int j, double constant) {
    return add(i, j, [constant](const Vec&) { return constant; });
}

Mat TwoFormField::matrix(const Vec& p, int dim) const {
    Mat m = Mat::Zero(dim, dim);
    for (const auto& t : terms_) {
        const double v = t.c(p);
        m(t.i, t.j) += v;
        m(t.j, t.i) -= v;
    }
    return m;
}

TwoFormField TwoFormField::operator+(const TwoFormField& other) const {
    TwoFormField sum = *this;
    for (const auto& t : other.terms_) sum.terms_.push_back(t);
    return sum;
}

double exterior_derivative_norm(const Chart& chart, const TwoFormField& w, const Vec& p,
                                double h) {
    const int d = chart.dim();
    // Partial derivatives of the full matrix in every direction.
    std::vector<Mat> dw(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        const double s = h * (chart.coord(k).kind == CoordKind::Angle
                                  ? 1.0
                                  : (chart.coord(k).hi - chart.coord(k).lo));
        Vec a = p, b = p;
        a[k] += s;
        b[k] -= s;
        dw[static_cast<size_t>(k)] = (w.matrix(a, d) - w.matrix(b, d)) / (2.0 * s);
    }
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                const double v = dw[static_cast<size_t>(i)](j, k) -
                                 dw[static_cast<size_t>(j)](i, k) +
                                 dw[static_cast<size_t>(k)](i, j);
                worst = std::max(worst, std::abs(v));
            }
    return worst;
}

double exterior_derivative_norm(const Chart& chart, const OneFormField& a, const Vec& p,
                                double h) {
    const int d = chart.dim();
    std::vector<Vec> da(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        const double s = h * (chart.coord(k).kind == CoordKind::Angle
                                  ? 1.0
                                  : (chart.coord(k).hi - chart.coord(k).lo));
        Vec u = p, v = p;
        u[k] += s;
        v[k] -= s;
        da[static_cast<size_t>(k)] = (a.covector(u, d) - a.covector(v, d)) / (2.0 * s);
    }
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            worst = std::max(worst, std::abs(da[static_cast<size_t>(i)][j] -
                                             da[static_cast<size_t>(j)][i]));
    return worst;
}

double pfaffian(const Mat& a) {
    const int n = static_cast<int>(a.rows());
    if (n % 2 != 0) return 0.0;
    if (n == 0) return 1.0;
    if (n == 2) return a(0, 1);
    // Expansion along the first row; fine for the 2n <= 8 charts used here.
    double sum = 0.0;
    std::vector<int> rest;
    rest.reserve(static_cast<size_t>(n - 2));
    for (int j = 1; j < n; ++j) {
        rest.clear();
        for (int k = 1; k < n; ++k)
            if (k != j) rest.push_back(k);
        Mat sub(n - 2, n - 2);
        for (int r = 0; r < n - 2; ++r)
            for (int c = 0; c < n - 2; ++c)
                sub(r, c) = a(rest[static_cast<size_t>(r)], rest[static_cast<size_t>(c)]);
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        sum += sign * a(0, j) * pfaffian(sub);
    }
    return sum;
}

} // namespace foldsym
