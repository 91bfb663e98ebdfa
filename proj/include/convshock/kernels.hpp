#pragma once

#include <span>

#include "convshock/gas.hpp"
#include "convshock/geometry_source.hpp"
#include "convshock/reconstruction.hpp"

namespace convshock {

enum class ExecPolicy { serial, openmp };

// Per-phase kernels of one time step. Every kernel comes in a serial
// reference flavor and an OpenMP flavor; the two must produce bitwise
// identical output (iterations write disjoint slots, and the only reductions
// are min/max, which are order-independent). tools/bench.cpp compares their
// throughput; tests/test_kernel_parity.cpp holds them to the bit.
namespace kernels {

// max over cells of |u| + c; returns -1 through `bad` on success, else the
// smallest offending cell index.
double max_signal_speed_serial(std::span<const ConservedState> cells, GasModel gas,
                               long& bad);
double max_signal_speed_omp(std::span<const ConservedState> cells, GasModel gas,
                            long& bad);

// Decode cells[i] into prims[i]; `bad` as above.
void to_primitives_serial(std::span<const ConservedState> cells, GasModel gas,
                          std::span<PrimitiveState> prims, long& bad);
void to_primitives_omp(std::span<const ConservedState> cells, GasModel gas,
                       std::span<PrimitiveState> prims, long& bad);

// MUSCL faces for ghost-extended cell slots 1 .. n-2 (slot 0 and n-1 lack a
// stencil and are left untouched).
void reconstruct_faces_serial(std::span<const PrimitiveState> ghost, LimiterKind limiter,
                              std::span<FacePair> faces);
void reconstruct_faces_omp(std::span<const PrimitiveState> ghost, LimiterKind limiter,
                           std::span<FacePair> faces);

// Hancock predictor: evolve both faces of each cell by dt/2 with the cell's
// own flux difference, in place, slots 1 .. n-2. A cell whose evolved faces
// leave the physical region falls back to its unreconstructed value.
void hancock_evolve_serial(std::span<const PrimitiveState> ghost, GasModel gas,
                           double half_dt_over_dr, std::span<FacePair> faces);
void hancock_evolve_omp(std::span<const PrimitiveState> ghost, GasModel gas,
                        double half_dt_over_dr, std::span<FacePair> faces);

// Roe flux at every interface; interface i sits between interior cells i-1
// and i, fed by the evolved plus face of the left cell and minus face of the
// right cell. `bad` as above.
void interface_fluxes_serial(std::span<const FacePair> faces, GasModel gas,
                             std::span<FluxVector> fluxes, long& bad);
void interface_fluxes_omp(std::span<const FacePair> faces, GasModel gas,
                          std::span<FluxVector> fluxes, long& bad);

// Conservative update U_i -= dt/dr (F_{i+1} - F_i), validating every result.
void conservative_update_serial(std::span<ConservedState> cells,
                                std::span<const FluxVector> fluxes, GasModel gas,
                                double dt_over_dr, long& bad);
void conservative_update_omp(std::span<ConservedState> cells,
                             std::span<const FluxVector> fluxes, GasModel gas,
                             double dt_over_dr, long& bad);

// Heun source step per cell at its own radius. With subcycle_axis set, the
// innermost five cells take two half steps instead of one.
void source_update_serial(std::span<ConservedState> cells, const RadialGrid& grid,
                          Geometry geom, GasModel gas, double dt, bool subcycle_axis,
                          long& bad);
void source_update_omp(std::span<ConservedState> cells, const RadialGrid& grid,
                       Geometry geom, GasModel gas, double dt, bool subcycle_axis,
                       long& bad);

}  // namespace kernels
}  // namespace convshock
