#pragma once

#include "convshock/gas.hpp"

namespace convshock {

// sqrt(rho)-weighted averages of Roe's linearization.
struct RoeAverages {
    double rho_hat = 0.0;
    double u_hat = 0.0;
    double h_hat = 0.0;  // specific total enthalpy
    double c_hat = 0.0;
};

RoeAverages roe_average(const PrimitiveState& left, const PrimitiveState& right,
                        GasModel gas);

// Interface flux of Roe's approximate Riemann solver,
//   F = 1/2 (F_L + F_R) - 1/2 sum_k |lam_k| a_k r_k,
// with a Harten entropy fix on the acoustic waves (|lam| replaced by
// lam^2/(2 delta) + delta/2 when |lam| < delta, delta = 0.1 c_hat).
FluxVector roe_flux(const PrimitiveState& left, const PrimitiveState& right,
                    GasModel gas);

enum class WaveKind { shock, rarefaction };

struct RiemannFanSample {
    PrimitiveState state;
    WaveKind left_wave = WaveKind::shock;
    WaveKind right_wave = WaveKind::shock;
};

// Star-region solution of the planar Riemann problem (pressure and velocity
// between the two nonlinear waves), found by damped Newton iteration on the
// two-wave pressure function to |dp|/p < 1e-12.
struct StarRegion {
    double p = 0.0;
    double u = 0.0;
    WaveKind left_wave = WaveKind::shock;
    WaveKind right_wave = WaveKind::shock;
    int iterations = 0;
};

StarRegion solve_star_region(const PrimitiveState& left, const PrimitiveState& right,
                             GasModel gas);

// Exact self-similar solution sampled on the ray xi = x/t. Verification
// oracle only; the production time loop never calls it.
RiemannFanSample exact_riemann_solve(const PrimitiveState& left,
                                     const PrimitiveState& right, GasModel gas,
                                     double xi);

}  // namespace convshock
