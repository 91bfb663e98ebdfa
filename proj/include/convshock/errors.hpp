#pragma once

#include <stdexcept>
#include <string>

namespace convshock {

// Conserved state decoded to non-positive density or pressure. Signals solver
// blow-up; the time loop aborts with diagnostics instead of continuing.
struct NonPhysicalState : std::runtime_error {
    explicit NonPhysicalState(const std::string& msg, long cell_index = -1)
        : std::runtime_error(msg), cell(cell_index) {}
    long cell;
};

// Riemann data violates the positivity condition (u_R - u_L) < 2(c_L + c_R)/(gamma - 1).
struct VacuumFormation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Newton iteration in the exact Riemann solver ran out of iterations.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Source term evaluated at r <= 0 with alpha > 0; the grid must be cell-centered.
struct SingularRadius : std::logic_error {
    using std::logic_error::logic_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace convshock
