#ifndef FOLDSYM_FIELDS_HPP
#define FOLDSYM_FIELDS_HPP

#include <functional>
#include <string>
#include <vector>

#include "foldsym/chart.hpp"

namespace foldsym {

// Default relative step for central differences.
inline constexpr double kFdStepRel = 1e-5;

// Scalar field on a chart. Evaluators must be 1-periodic in every angle
// coordinate; an exact gradient, when supplied, overrides finite differences.
struct ScalarField {
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> grad; // optional

    double operator()(const Vec& p) const { return value(p); }
    bool has_grad() const { return static_cast<bool>(grad); }

    static ScalarField constant(double c) {
        return ScalarField{[c](const Vec&) { return c; }, [c](const Vec& p) {
                               (void)c;
                               return Vec(Vec::Zero(p.size()));
                           }};
    }
    // Coordinate function x_i with exact gradient.
    static ScalarField coordinate(int i);
};

// df at p: exact gradient if present, else central differences with step h
// (relative to each coordinate's range, absolute floor h).
Vec differential(const Chart& chart, const ScalarField& f, const Vec& p,
                 double h = kFdStepRel);

// Partial derivative d f / d x_i by central differences (or exact grad).
double partial(const Chart& chart, const ScalarField& f, const Vec& p, int i,
               double h = kFdStepRel);

// Second partial d^2 f / d x_i^2; used for on-fold frame coefficients.
double second_partial(const Chart& chart, const ScalarField& f, const Vec& p, int i,
                      double h = 1e-4);

// One-form written as a sum of terms c(p) dx_i.
class OneFormField {
public:
    struct Term {
        int i;
        std::function<double(const Vec&)> c;
    };

    OneFormField() = default;
    OneFormField& add(int i, std::function<double(const Vec&)> c);
    OneFormField& add(int i, double constant);

    Vec covector(const Vec& p, int dim) const;
    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
};

// Two-form stored as a sum of terms c(p) dx_i ^ dx_j with i<j, so evaluated
// arrays are antisymmetric exactly by storage.
class TwoFormField {
public:
    struct Term {
        int i, j; // i < j
        std::function<double(const Vec&)> c;
    };

    TwoFormField() = default;
    TwoFormField& add(int i, int j, std::function<double(const Vec&)> c);
    TwoFormField& add(int i, int j, double constant);

    Mat matrix(const Vec& p, int dim) const;
    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    TwoFormField operator+(const TwoFormField& other) const;

private:
    std::vector<Term> terms_;
};

// Max |(d omega)(e_i, e_j, e_k)| over coordinate triples at p, by central
// differences of the evaluated matrix.
double exterior_derivative_norm(const Chart& chart, const TwoFormField& w,
                                const Vec& p, double h = kFdStepRel);

// Same for a one-form: max |(d alpha)(e_i, e_j)|.
double exterior_derivative_norm(const Chart& chart, const OneFormField& a,
                                const Vec& p, double h = kFdStepRel);

// Pfaffian of a (small) antisymmetric matrix; omega^n / (n! vol) in the
// coordinate coframe.
double pfaffian(const Mat& a);

} // namespace foldsym

#endif
