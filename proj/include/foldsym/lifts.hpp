#ifndef FOLDSYM_LIFTS_HPP
#define FOLDSYM_LIFTS_HPP

#include "foldsym/system.hpp"

namespace foldsym {

// Twisted b-cotangent lift on T*T^n, coordinates (theta_1..theta_n,
// a_1..a_n): omega = (c/a_1) dtheta_1 ^ da_1 + sum_{i>=2} dtheta_i ^ da_i,
// stored as alpha = -c dtheta_1, beta = sum_{i>=2} dtheta_i ^ da_i.
// Observables (log|a_1|, a_2, ..., a_n); the flow of X_{log|a_1|} has period
// c, the modular period.
IntegrableSystem twisted_b_cotangent_lift(int n, double c, double a_extent = 2.0);

// Folded cotangent lift on T*T^n: omega = p_1 dtheta_1 ^ dp_1 +
// sum_{i>=2} dtheta_i ^ dp_i with Z = {p_1 = 0}; moment map
// (p_1^2, p_2, ..., p_n).
IntegrableSystem folded_cotangent_lift(int n, double p_extent = 2.0);

// The same folded lift with first observable p_1^2/2 (unit period lattice);
// used by the action-angle pipeline.
IntegrableSystem folded_cotangent_lift_halved(int n, double p_extent = 2.0);

// Standard T*T^n with omega = sum dtheta_i ^ dp_i and moment map (p_1..p_n).
IntegrableSystem standard_cotangent_torus(int n, double p_extent = 2.0);

} // namespace foldsym

#endif
