#include "convshock/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convshock/riemann.hpp"

namespace convshock::kernels {

namespace {

constexpr long kNoBad = -1;
constexpr long kBadSentinel = std::numeric_limits<long>::max();

// Per-item bodies shared by both loop flavors, so the serial and OpenMP
// kernels can only diverge through loop structure, never arithmetic.

inline double signal_speed_at(std::span<const ConservedState> cells, GasModel gas,
                              long i, long& bad_local) {
    PrimitiveState w;
    if (!try_conserved_to_primitive(cells[i], gas, w)) {
        bad_local = i;
        return 0.0;
    }
    return std::fabs(w.u) + sound_speed(w, gas);
}

inline void hancock_at(std::span<const PrimitiveState> ghost, GasModel gas,
                       double half_dt_over_dr, std::span<FacePair> faces, long j) {
    const FacePair& f = faces[j];
    const FluxVector f_minus = physical_flux(f.minus, gas);
    const FluxVector f_plus = physical_flux(f.plus, gas);
    const StateVector delta = half_dt_over_dr * (f_minus - f_plus);

    const ConservedState u_minus = primitive_to_conserved(f.minus, gas) + delta;
    const ConservedState u_plus = primitive_to_conserved(f.plus, gas) + delta;

    PrimitiveState w_minus, w_plus;
    if (try_conserved_to_primitive(u_minus, gas, w_minus) &&
        try_conserved_to_primitive(u_plus, gas, w_plus)) {
        faces[j] = {w_minus, w_plus};
    } else {
        faces[j] = {ghost[j], ghost[j]};  // zero-slope fallback
    }
}

inline void flux_at(std::span<const FacePair> faces, GasModel gas,
                    std::span<FluxVector> fluxes, long i, long& bad_local) {
    const PrimitiveState& left = faces[i + 1].plus;
    const PrimitiveState& right = faces[i + 2].minus;
    try {
        fluxes[i] = roe_flux(left, right, gas);
    } catch (const NonPhysicalState&) {
        bad_local = i;
    }
}

inline void update_at(std::span<ConservedState> cells, std::span<const FluxVector> fluxes,
                      GasModel gas, double dt_over_dr, long i, long& bad_local) {
    cells[i] -= dt_over_dr * (fluxes[i + 1] - fluxes[i]);
    PrimitiveState w;
    if (!try_conserved_to_primitive(cells[i], gas, w)) bad_local = i;
}

inline void source_at(std::span<ConservedState> cells, const RadialGrid& grid,
                      Geometry geom, GasModel gas, double dt, bool subcycle_axis,
                      long i, long& bad_local) {
    const double r = grid.center(static_cast<int>(i));
    if (subcycle_axis && geom.alpha > 0 && i < 5) {
        if (!try_rk2_source_step(cells[i], r, geom, gas, 0.5 * dt) ||
            !try_rk2_source_step(cells[i], r, geom, gas, 0.5 * dt)) {
            bad_local = i;
        }
        return;
    }
    if (!try_rk2_source_step(cells[i], r, geom, gas, dt)) bad_local = i;
}

}  // namespace

// ---------------------------------------------------------------------------
// serial reference implementations
// ---------------------------------------------------------------------------

double max_signal_speed_serial(std::span<const ConservedState> cells, GasModel gas,
                               long& bad) {
    double s_max = 0.0;
    long worst = kBadSentinel;
    for (long i = 0; i < std::ssize(cells); ++i) {
        long b = kNoBad;
        s_max = std::max(s_max, signal_speed_at(cells, gas, i, b));
        if (b != kNoBad) worst = std::min(worst, b);
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
    return s_max;
}

void to_primitives_serial(std::span<const ConservedState> cells, GasModel gas,
                          std::span<PrimitiveState> prims, long& bad) {
    long worst = kBadSentinel;
    for (long i = 0; i < std::ssize(cells); ++i) {
        if (!try_conserved_to_primitive(cells[i], gas, prims[i])) {
            worst = std::min(worst, i);
        }
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
}

void reconstruct_faces_serial(std::span<const PrimitiveState> ghost, LimiterKind limiter,
                              std::span<FacePair> faces) {
    for (long j = 1; j + 1 < std::ssize(ghost); ++j) {
        faces[j] = muscl_reconstruct(ghost[j - 1], ghost[j], ghost[j + 1], limiter);
    }
}

void hancock_evolve_serial(std::span<const PrimitiveState> ghost, GasModel gas,
                           double half_dt_over_dr, std::span<FacePair> faces) {
    for (long j = 1; j + 1 < std::ssize(ghost); ++j) {
        hancock_at(ghost, gas, half_dt_over_dr, faces, j);
    }
}

void interface_fluxes_serial(std::span<const FacePair> faces, GasModel gas,
                             std::span<FluxVector> fluxes, long& bad) {
    long worst = kBadSentinel;
    for (long i = 0; i < std::ssize(fluxes); ++i) {
        long b = kNoBad;
        flux_at(faces, gas, fluxes, i, b);
        if (b != kNoBad) worst = std::min(worst, b);
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
}

void conservative_update_serial(std::span<ConservedState> cells,
                                std::span<const FluxVector> fluxes, GasModel gas,
                                double dt_over_dr, long& bad) {
    long worst = kBadSentinel;
    for (long i = 0; i < std::ssize(cells); ++i) {
        long b = kNoBad;
        update_at(cells, fluxes, gas, dt_over_dr, i, b);
        if (b != kNoBad) worst = std::min(worst, b);
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
}

void source_update_serial(std::span<ConservedState> cells, const RadialGrid& grid,
                          Geometry geom, GasModel gas, double dt, bool subcycle_axis,
                          long& bad) {
    long worst = kBadSentinel;
    for (long i = 0; i < std::ssize(cells); ++i) {
        long b = kNoBad;
        source_at(cells, grid, geom, gas, dt, subcycle_axis, i, b);
        if (b != kNoBad) worst = std::min(worst, b);
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
}

// ---------------------------------------------------------------------------
// OpenMP implementations
// ---------------------------------------------------------------------------

double max_signal_speed_omp(std::span<const ConservedState> cells, GasModel gas,
                            long& bad) {
    const long n = std::ssize(cells);
    double s_max = 0.0;
    long worst = kBadSentinel;
#pragma omp parallel for schedule(static) reduction(max : s_max) reduction(min : worst)
    for (long i = 0; i < n; ++i) {
        long b = kNoBad;
        const double s = signal_speed_at(cells, gas, i, b);
        s_max = std::max(s_max, s);
        if (b != kNoBad) worst = std::min(worst, b);
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
    return s_max;
}

void to_primitives_omp(std::span<const ConservedState> cells, GasModel gas,
                       std::span<PrimitiveState> prims, long& bad) {
    const long n = std::ssize(cells);
    long worst = kBadSentinel;
#pragma omp parallel for schedule(static) reduction(min : worst)
    for (long i = 0; i < n; ++i) {
        if (!try_conserved_to_primitive(cells[i], gas, prims[i])) {
            worst = std::min(worst, i);
        }
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
}

void reconstruct_faces_omp(std::span<const PrimitiveState> ghost, LimiterKind limiter,
                           std::span<FacePair> faces) {
    const long n = std::ssize(ghost);
#pragma omp parallel for schedule(static)
    for (long j = 1; j < n - 1; ++j) {
        faces[j] = muscl_reconstruct(ghost[j - 1], ghost[j], ghost[j + 1], limiter);
    }
}

void hancock_evolve_omp(std::span<const PrimitiveState> ghost, GasModel gas,
                        double half_dt_over_dr, std::span<FacePair> faces) {
    const long n = std::ssize(ghost);
#pragma omp parallel for schedule(static)
    for (long j = 1; j < n - 1; ++j) {
        hancock_at(ghost, gas, half_dt_over_dr, faces, j);
    }
}

void interface_fluxes_omp(std::span<const FacePair> faces, GasModel gas,
                          std::span<FluxVector> fluxes, long& bad) {
    const long n = std::ssize(fluxes);
    long worst = kBadSentinel;
#pragma omp parallel for schedule(static) reduction(min : worst)
    for (long i = 0; i < n; ++i) {
        long b = kNoBad;
        flux_at(faces, gas, fluxes, i, b);
        if (b != kNoBad) worst = std::min(worst, b);
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
}

void conservative_update_omp(std::span<ConservedState> cells,
                             std::span<const FluxVector> fluxes, GasModel gas,
                             double dt_over_dr, long& bad) {
    const long n = std::ssize(cells);
    long worst = kBadSentinel;
#pragma omp parallel for schedule(static) reduction(min : worst)
    for (long i = 0; i < n; ++i) {
        long b = kNoBad;
        update_at(cells, fluxes, gas, dt_over_dr, i, b);
        if (b != kNoBad) worst = std::min(worst, b);
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
}

void source_update_omp(std::span<ConservedState> cells, const RadialGrid& grid,
                       Geometry geom, GasModel gas, double dt, bool subcycle_axis,
                       long& bad) {
    const long n = std::ssize(cells);
    long worst = kBadSentinel;
#pragma omp parallel for schedule(static) reduction(min : worst)
    for (long i = 0; i < n; ++i) {
        long b = kNoBad;
        source_at(cells, grid, geom, gas, dt, subcycle_axis, i, b);
        if (b != kNoBad) worst = std::min(worst, b);
    }
    bad = worst == kBadSentinel ? kNoBad : worst;
}

}  // namespace convshock::kernels
