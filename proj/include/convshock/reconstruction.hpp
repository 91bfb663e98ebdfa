#pragma once

#include "convshock/gas.hpp"

namespace convshock {

// superbee and minmod are TVD; none applies the raw downwind slope with no
// clipping (useful to demonstrate what the limiter buys).
enum class LimiterKind { superbee, minmod, none };

// Reconstructed states at a cell's two faces.
struct FacePair {
    PrimitiveState minus;  // inner face
    PrimitiveState plus;   // outer face
};

// phi(r) = max(0, min(2r, 1), min(r, 2))
double limiter_superbee(double r);

// phi(r) = max(0, min(r, 1))
double limiter_minmod(double r);

// Componentwise piecewise-linear reconstruction of cell i from the stencil
// (W_{i-1}, W_i, W_{i+1}). Slope ratio r = (W_i - W_{i-1}) / (W_{i+1} - W_i),
// limited slope d = phi(r) * (W_{i+1} - W_i), faces W_i -/+ d/2. Jumps below
// 1e-12 * max(1, |W_i|) are treated as flat. If either face loses positivity
// of rho or p the whole cell falls back to zero slope.
FacePair muscl_reconstruct(const PrimitiveState& left, const PrimitiveState& center,
                           const PrimitiveState& right, LimiterKind limiter);

}  // namespace convshock
