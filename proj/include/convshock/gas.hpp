#pragma once

#include <cmath>
#include <string>

#include "convshock/errors.hpp"

namespace convshock {

// Ideal gas, single constant ratio of specific heats (> 1).
struct GasModel {
    double gamma = 1.4;
    bool valid() const { return std::isfinite(gamma) && gamma > 1.0; }
};

// (rho, u, p) at a point or cell. Dimensionless: rho by the undisturbed
// density, u by the undisturbed sound speed, p by gamma times the undisturbed
// pressure, so the quiescent reference state is (1, 0, 1/gamma).
struct PrimitiveState {
    double rho = 0.0;
    double u = 0.0;
    double p = 0.0;
    bool valid() const {
        return std::isfinite(rho) && std::isfinite(u) && std::isfinite(p) &&
               rho > 0.0 && p > 0.0;
    }
};

// Three-component vector with the conserved layout (rho, rho*u, rho*E).
// Fluxes and source terms share it.
struct StateVector {
    double mass = 0.0;
    double momentum = 0.0;
    double energy = 0.0;

    StateVector& operator+=(const StateVector& o) {
        mass += o.mass;
        momentum += o.momentum;
        energy += o.energy;
        return *this;
    }
    StateVector& operator-=(const StateVector& o) {
        mass -= o.mass;
        momentum -= o.momentum;
        energy -= o.energy;
        return *this;
    }
    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    friend StateVector operator*(double s, const StateVector& v) {
        return {s * v.mass, s * v.momentum, s * v.energy};
    }
};

using ConservedState = StateVector;
using FluxVector = StateVector;
using SourceTerm = StateVector;

// Symmetry exponent: 0 planar, 1 cylindrical, 2 spherical. The flow cross
// section is A(r) = r^alpha.
struct Geometry {
    int alpha = 1;
    bool valid() const { return alpha == 0 || alpha == 1 || alpha == 2; }
};

// Uniform cell-centered mesh on [r_min, r_min + n_cells*dr]. Centers sit at
// r_min + (i + 1/2)*dr, so no state is ever stored at the axis r = 0.
struct RadialGrid {
    int n_cells = 0;
    double dr = 0.0;
    double r_min = 0.0;

    double center(int i) const { return r_min + (i + 0.5) * dr; }
    double inner_edge() const { return r_min; }
    double outer_edge() const { return r_min + n_cells * dr; }
    bool valid() const { return n_cells >= 4 && dr > 0.0 && r_min >= 0.0; }
};

// Specific total energy E = p/(rho (gamma-1)) + u^2/2.
inline double total_energy(const PrimitiveState& w, GasModel gas) {
    return w.p / (w.rho * (gas.gamma - 1.0)) + 0.5 * w.u * w.u;
}

inline ConservedState primitive_to_conserved(const PrimitiveState& w, GasModel gas) {
    return {w.rho, w.rho * w.u, w.rho * total_energy(w, gas)};
}

// Non-throwing decode; returns false when the state is unphysical (used by the
// OpenMP kernels, which cannot let exceptions escape a parallel loop).
inline bool try_conserved_to_primitive(const ConservedState& c, GasModel gas,
                                       PrimitiveState& out) {
    if (!(c.mass > 0.0) || !std::isfinite(c.mass)) return false;
    const double u = c.momentum / c.mass;
    const double p = (gas.gamma - 1.0) * (c.energy - 0.5 * c.momentum * u);
    out = {c.mass, u, p};
    return out.valid();
}

inline PrimitiveState conserved_to_primitive(const ConservedState& c, GasModel gas) {
    PrimitiveState w;
    if (!try_conserved_to_primitive(c, gas, w)) {
        throw NonPhysicalState("conserved state decodes to non-physical primitives: mass=" +
                               std::to_string(c.mass) + " momentum=" + std::to_string(c.momentum) +
                               " energy=" + std::to_string(c.energy));
    }
    return w;
}

inline double sound_speed(const PrimitiveState& w, GasModel gas) {
    return std::sqrt(gas.gamma * w.p / w.rho);
}

// T = gamma p / rho: with the pressure scaled by gamma*P0 this makes the
// undisturbed state exactly T = 1 and keeps both initial regions isothermal.
inline double temperature(const PrimitiveState& w, GasModel gas) {
    return gas.gamma * w.p / w.rho;
}

inline FluxVector physical_flux(const PrimitiveState& w, GasModel gas) {
    const double rho_E = w.rho * total_energy(w, gas);
    return {w.rho * w.u, w.rho * w.u * w.u + w.p, w.u * (rho_E + w.p)};
}

inline FluxVector physical_flux(const ConservedState& c, GasModel gas) {
    return physical_flux(conserved_to_primitive(c, gas), gas);
}

}  // namespace convshock
