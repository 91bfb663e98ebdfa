#pragma once

#include <vector>

#include "convshock/gas.hpp"

namespace convshock {

// Diaphragm of radius r0 separating two regions of gas at rest with equal
// temperature T = 1 and pressure/density ratio N (outer over inner):
// inner (1, 0, 1/gamma), outer (N, 0, N/gamma).
struct DiaphragmSpec {
    double r0 = 1.0;
    double ratio = 4.0;

    PrimitiveState inner_state(GasModel gas) const { return {1.0, 0.0, 1.0 / gas.gamma}; }
    PrimitiveState outer_state(GasModel gas) const { return {ratio, 0.0, ratio / gas.gamma}; }
    bool valid() const { return ratio > 1.0 && r0 > 0.0; }
};

// Full primitive field plus derived temperature and Mach number at one
// recorded time.
struct Snapshot {
    struct Row {
        double r, rho, u, p, T, mach;
    };
    double time = 0.0;
    std::vector<Row> rows;
};

}  // namespace convshock
