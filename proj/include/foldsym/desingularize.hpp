#ifndef FOLDSYM_DESINGULARIZE_HPP
#define FOLDSYM_DESINGULARIZE_HPP

#include "foldsym/system.hpp"

namespace foldsym {

// Smoothing profile f_eps: equal to log|t| for |t| >= eps, even, with
// f_eps'(t) = t h(t), h > 0 on (-eps, eps), matching 1/t to second order at
// |t| = eps. The derivative is the quintic odd polynomial
//   f_eps'(t) = 3t/eps^2 - 3t^3/eps^4 + t^5/eps^6.
class DesingularizationProfile {
public:
    explicit DesingularizationProfile(double eps);

    double eps() const { return eps_; }
    double value(double t) const;      // f_eps(t)
    double derivative(double t) const; // f_eps'(t); equals 1/t for |t| >= eps
    double h(double t) const;          // f_eps'(t) / t, positive

private:
    double eps_;
    double offset_; // log(eps) - G(eps), continuity constant
};

// Family of folded forms omega_eps = d(f_eps(t)) ^ alpha + beta agreeing
// with the b-form outside the eps-collar of Z.
SingularForm desingularize(const SingularForm& b_form, double eps);

// Replace the b-function c log|t| + g by c f_eps(t) + g.
Observable desingularize_observable(const Observable& f, const Chart& chart, double eps);

// Desingularized system: the form and every observable through the profile.
IntegrableSystem desingularize_system(const IntegrableSystem& sys, double eps);

} // namespace foldsym

#endif
