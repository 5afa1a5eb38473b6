#ifndef FOLDSYM_NULLLINE_HPP
#define FOLDSYM_NULLLINE_HPP

#include "foldsym/forms.hpp"
#include "foldsym/integrator.hpp"

namespace foldsym {

struct NullLineOptions {
    double max_arc = 80.0;    // arc-length budget per seed
    double min_arc = 0.25;    // ignore returns before this
    double close_tol = 2e-3;  // return-map distance for a closed orbit
    double dedup_tol = 5e-2;  // orbits closer than this coincide
    double step = 0.02;       // sampling step along the orbit
    IntegratorOptions integrator{};
};

struct ClosedOrbit {
    Vec seed;
    double period = 0.0; // arc length at closure
    std::vector<Vec> points;
};

struct NullLineResult {
    std::vector<ClosedOrbit> closed;
    int n_seeds = 0;
    int n_closed_seeds = 0; // seeds whose orbit closed (before dedup)
    bool budget_exhausted = false;
};

// Integrate the null line field L = ker i*omega on Z from grid seeds and
// detect closure via return-map fixed points; orbits are deduplicated.
NullLineResult null_line_closed_orbits(const SingularForm& form, const std::vector<Vec>& seeds,
                                       const NullLineOptions& opts = {});

} // namespace foldsym

#endif
