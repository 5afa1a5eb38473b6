#ifndef FOLDSYM_PRODUCTS_HPP
#define FOLDSYM_PRODUCTS_HPP

#include "foldsym/system.hpp"

namespace foldsym {

// Folded surface factor: a 2d chart, a function t transverse to 0, and a
// non-vanishing area form, giving the folded structure t * area on Sigma.
struct FoldedSurface {
    ChartPtr chart;                  // 2d
    ScalarField t;                   // defining function of the fold
    TwoFormField area;               // non-vanishing 2-form
    int t_coord = -1;                // coordinate equal to t, when t is one
};

// Product of a folded surface with a symplectic integrable system:
// chart Sigma x M, form t * omega_Sigma + omega_1, observables
// (t^2, f_1, ..., f_n). A nontrivial weight vector switches the first
// observable to t^2 * sum_i lambda_i f_i.
IntegrableSystem product_with_folded_surface(const FoldedSurface& surface,
                                             const IntegrableSystem& symplectic_factor,
                                             const std::vector<double>& weights = {});

// The 2d case: the surface alone with observable t^2.
IntegrableSystem folded_surface_system(const FoldedSurface& surface);

} // namespace foldsym

#endif
