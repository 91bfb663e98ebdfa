#pragma once

#include "convshock/gas.hpp"

namespace convshock {

// Geometric source of the symmetric Euler system,
//   G(U) = -(alpha / r) * (rho u, rho u^2, u (rho E + p)).
// Identically zero for alpha = 0 or u = 0.
SourceTerm geometric_source(const ConservedState& cons, double r, Geometry geom,
                            GasModel gas);

// One Heun (explicit trapezoidal) step of dU/dt = G(U) at fixed radius:
//   k1 = G(U), k2 = G(U + dt k1), U' = U + dt/2 (k1 + k2).
// Throws NonPhysicalState if the update leaves the physical region (dt too
// large for the source stiffness near the axis).
ConservedState rk2_source_step(const ConservedState& cons, double r, Geometry geom,
                               GasModel gas, double dt);

// Non-throwing variant for the parallel kernels; false on a non-physical result.
bool try_rk2_source_step(ConservedState& cons, double r, Geometry geom, GasModel gas,
                         double dt);

}  // namespace convshock
