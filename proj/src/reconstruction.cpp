#include "convshock/reconstruction.hpp"

#include <algorithm>
#include <cmath>

namespace convshock {

double limiter_superbee(double r) {
    return std::max({0.0, std::min(2.0 * r, 1.0), std::min(r, 2.0)});
}

double limiter_minmod(double r) {
    return std::max(0.0, std::min(r, 1.0));
}

namespace {

double limited_slope(double wl, double w0, double wr, LimiterKind limiter) {
    const double d_up = wr - w0;
    if (std::fabs(d_up) < 1e-12 * std::max(1.0, std::fabs(w0))) return 0.0;
    if (limiter == LimiterKind::none) return 0.5 * (wr - wl);  // unclipped central slope
    const double r = (w0 - wl) / d_up;
    const double phi =
        limiter == LimiterKind::superbee ? limiter_superbee(r) : limiter_minmod(r);
    return phi * d_up;
}

}  // namespace

FacePair muscl_reconstruct(const PrimitiveState& left, const PrimitiveState& center,
                           const PrimitiveState& right, LimiterKind limiter) {
    const double d_rho = limited_slope(left.rho, center.rho, right.rho, limiter);
    const double d_u = limited_slope(left.u, center.u, right.u, limiter);
    const double d_p = limited_slope(left.p, center.p, right.p, limiter);

    FacePair faces;
    faces.minus = {center.rho - 0.5 * d_rho, center.u - 0.5 * d_u, center.p - 0.5 * d_p};
    faces.plus = {center.rho + 0.5 * d_rho, center.u + 0.5 * d_u, center.p + 0.5 * d_p};

    // Positivity fallback: zero slope for the whole cell, not per component.
    if (!(faces.minus.rho > 0.0 && faces.minus.p > 0.0 && faces.plus.rho > 0.0 &&
          faces.plus.p > 0.0)) {
        faces.minus = center;
        faces.plus = center;
    }
    return faces;
}

}  // namespace convshock
