#ifndef FOLDSYM_AVERAGING_HPP
#define FOLDSYM_AVERAGING_HPP

#include "foldsym/sampling.hpp"
#include "foldsym/fields.hpp"

namespace foldsym {

using PointMap = std::function<Vec(const Vec&)>;

struct AveragingOptions {
    double order_tol = 1e-9;        // |phi^k - id| on samples
    double invariance_tol = 1e-12;  // |F(phi x) - F(x)| on samples
    double constancy_floor = 1e-6;  // max |dF| below this counts as constant
    double perturbation = 0.1;      // retry scale for degenerate inputs
    int n_samples = 512;
    uint64_t seed = 11;
};

struct AveragingResult {
    ScalarField averaged;
    double invariance_residual = 0.0;
    double non_constancy = 0.0; // max |dF| over samples
    bool perturbed = false;     // retry with a perturbed input was needed
};

// Averaging trick F(x) = sum_{j=0}^{k-1} f(phi^j(x)) for an order-k action;
// verifies the order, checks invariance, and measures non-constancy. A
// constant result is retried once with a deterministic perturbation of f.
AveragingResult average_invariant_function(const Chart& chart, const ScalarField& f,
                                           const PointMap& action, int k,
                                           const AveragingOptions& opts = {});

} // namespace foldsym

#endif
