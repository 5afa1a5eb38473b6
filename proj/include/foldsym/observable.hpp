#ifndef FOLDSYM_OBSERVABLE_HPP
#define FOLDSYM_OBSERVABLE_HPP

#include <string>

#include "foldsym/forms.hpp"

namespace foldsym {

// Either a smooth scalar field or a b-function c log|t| + g with g smooth
// across Z.
class Observable {
public:
    static Observable smooth(ScalarField f, std::string name = "");
    static Observable bfun(double c, ScalarField g, std::string name = "");

    bool is_bfun() const { return is_bfun_; }
    double c() const { return c_; }
    const ScalarField& g() const { return g_; }
    const std::string& name() const { return name_; }

    // Value of the observable; b-functions blow up on Z.
    double value(const Chart& chart, const Vec& p) const;

    // Smooth-coordinate differential; b-functions only off Z.
    Vec differential_at(const Chart& chart, const Vec& p, double h = kFdStepRel) const;

    Observable scaled(double s, std::string new_name = "") const;

private:
    bool is_bfun_ = false;
    double c_ = 0.0;
    ScalarField g_; // the smooth field (entire function when !is_bfun_)
    std::string name_;
};

// Coefficients of df in the singular coframe at p:
//  - folded frame (t dt slot): (1/t) df/dt off Z, the continuous limit
//    d^2 f/dt^2 on Z (admissible f only); other slots are plain partials.
//  - b frame (dt/t slot): c + t dg/dt; other slots are partials of g.
//  - symplectic: the plain differential.
Vec frame_coefficients(const Observable& f, const SingularForm& form, const Vec& p,
                       const Tolerances& tol = {});

} // namespace foldsym

#endif
