#include "convshock/geometry_source.hpp"

#include <string>

namespace convshock {

namespace {

inline bool try_source(const ConservedState& c, double r, int alpha, GasModel gas,
                       SourceTerm& out) {
    PrimitiveState w;
    if (!try_conserved_to_primitive(c, gas, w)) return false;
    const double f = -alpha / r;
    out = {f * c.momentum, f * c.momentum * w.u, f * w.u * (c.energy + w.p)};
    return true;
}

}  // namespace

SourceTerm geometric_source(const ConservedState& cons, double r, Geometry geom,
                            GasModel gas) {
    if (geom.alpha == 0) return {0.0, 0.0, 0.0};
    if (!(r > 0.0)) {
        throw SingularRadius("geometric_source at r=" + std::to_string(r) +
                             " with alpha=" + std::to_string(geom.alpha));
    }
    SourceTerm g;
    if (!try_source(cons, r, geom.alpha, gas, g)) {
        throw NonPhysicalState("geometric_source: non-physical input state");
    }
    return g;
}

bool try_rk2_source_step(ConservedState& cons, double r, Geometry geom, GasModel gas,
                         double dt) {
    if (geom.alpha == 0) return true;  // G == 0, exact identity
    SourceTerm k1, k2;
    if (!try_source(cons, r, geom.alpha, gas, k1)) return false;
    const ConservedState mid = cons + dt * k1;
    if (!try_source(mid, r, geom.alpha, gas, k2)) return false;
    const ConservedState next = cons + (0.5 * dt) * (k1 + k2);
    PrimitiveState check;
    if (!try_conserved_to_primitive(next, gas, check)) return false;
    cons = next;
    return true;
}

ConservedState rk2_source_step(const ConservedState& cons, double r, Geometry geom,
                               GasModel gas, double dt) {
    if (geom.alpha > 0 && !(r > 0.0)) {
        throw SingularRadius("rk2_source_step at r=" + std::to_string(r));
    }
    ConservedState next = cons;
    if (!try_rk2_source_step(next, r, geom, gas, dt)) {
        throw NonPhysicalState("rk2_source_step left the physical region at r=" +
                               std::to_string(r) + ", dt=" + std::to_string(dt));
    }
    return next;
}

}  // namespace convshock
