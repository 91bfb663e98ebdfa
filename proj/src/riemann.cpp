#include "convshock/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace convshock {

// ============================================================================
// Roe's approximate solver
// ============================================================================

RoeAverages roe_average(const PrimitiveState& left, const PrimitiveState& right,
                        GasModel gas) {
    const double sl = std::sqrt(left.rho);
    const double sr = std::sqrt(right.rho);
    const double wsum = sl + sr;

    const double h_left = total_energy(left, gas) + left.p / left.rho;
    const double h_right = total_energy(right, gas) + right.p / right.rho;

    RoeAverages avg;
    avg.rho_hat = std::sqrt(left.rho * right.rho);
    avg.u_hat = (sl * left.u + sr * right.u) / wsum;
    avg.h_hat = (sl * h_left + sr * h_right) / wsum;

    const double c2 = (gas.gamma - 1.0) * (avg.h_hat - 0.5 * avg.u_hat * avg.u_hat);
    if (!(c2 > 0.0)) {
        throw NonPhysicalState("roe_average: non-positive averaged sound speed squared c2=" +
                               std::to_string(c2));
    }
    avg.c_hat = std::sqrt(c2);
    return avg;
}

namespace {

// Harten fix: keep |lam| away from zero on the acoustic waves so expansion
// shocks cannot survive at sonic points.
inline double entropy_fixed_abs(double lambda, double delta) {
    const double a = std::fabs(lambda);
    if (a < delta) return lambda * lambda / (2.0 * delta) + 0.5 * delta;
    return a;
}

}  // namespace

FluxVector roe_flux(const PrimitiveState& left, const PrimitiveState& right,
                    GasModel gas) {
    const RoeAverages avg = roe_average(left, right, gas);
    const double c2 = avg.c_hat * avg.c_hat;

    const double d_rho = right.rho - left.rho;
    const double d_u = right.u - left.u;
    const double d_p = right.p - left.p;

    // Wave strengths of the characteristic projection (acoustic-, contact,
    // acoustic+):
    //   a1 = (dp - rho_hat c_hat du) / (2 c_hat^2)
    //   a2 = drho - dp / c_hat^2
    //   a3 = (dp + rho_hat c_hat du) / (2 c_hat^2)
    const double a1 = (d_p - avg.rho_hat * avg.c_hat * d_u) / (2.0 * c2);
    const double a2 = d_rho - d_p / c2;
    const double a3 = (d_p + avg.rho_hat * avg.c_hat * d_u) / (2.0 * c2);

    const double lam1 = avg.u_hat - avg.c_hat;
    const double lam2 = avg.u_hat;
    const double lam3 = avg.u_hat + avg.c_hat;

    const double delta = 0.1 * avg.c_hat;
    const double q1 = entropy_fixed_abs(lam1, delta);
    const double q2 = std::fabs(lam2);  // contact wave: no fix
    const double q3 = entropy_fixed_abs(lam3, delta);

    // Right eigenvectors:
    //   r1 = (1, u-c, h - u c), r2 = (1, u, u^2/2), r3 = (1, u+c, h + u c)
    const FluxVector fl = physical_flux(left, gas);
    const FluxVector fr = physical_flux(right, gas);

    FluxVector f;
    f.mass = 0.5 * (fl.mass + fr.mass) - 0.5 * (q1 * a1 + q2 * a2 + q3 * a3);
    f.momentum = 0.5 * (fl.momentum + fr.momentum) -
                 0.5 * (q1 * a1 * (avg.u_hat - avg.c_hat) + q2 * a2 * avg.u_hat +
                        q3 * a3 * (avg.u_hat + avg.c_hat));
    f.energy = 0.5 * (fl.energy + fr.energy) -
               0.5 * (q1 * a1 * (avg.h_hat - avg.u_hat * avg.c_hat) +
                      q2 * a2 * (0.5 * avg.u_hat * avg.u_hat) +
                      q3 * a3 * (avg.h_hat + avg.u_hat * avg.c_hat));
    return f;
}

// ============================================================================
// Exact planar solver (verification oracle)
// ============================================================================

namespace {

// Two-wave pressure function f_K and its derivative, shock branch for
// p > p_K, rarefaction branch otherwise.
double pressure_fn(double p, const PrimitiveState& s, double c, GasModel gas) {
    const double g = gas.gamma;
    if (p > s.p) {
        const double A = 2.0 / ((g + 1.0) * s.rho);
        const double B = (g - 1.0) / (g + 1.0) * s.p;
        return (p - s.p) * std::sqrt(A / (p + B));
    }
    return 2.0 * c / (g - 1.0) * (std::pow(p / s.p, (g - 1.0) / (2.0 * g)) - 1.0);
}

double pressure_fn_deriv(double p, const PrimitiveState& s, double c, GasModel gas) {
    const double g = gas.gamma;
    if (p > s.p) {
        const double A = 2.0 / ((g + 1.0) * s.rho);
        const double B = (g - 1.0) / (g + 1.0) * s.p;
        return std::sqrt(A / (B + p)) * (1.0 - (p - s.p) / (2.0 * (B + p)));
    }
    return 1.0 / (s.rho * c) * std::pow(p / s.p, -(g + 1.0) / (2.0 * g));
}

}  // namespace

StarRegion solve_star_region(const PrimitiveState& left, const PrimitiveState& right,
                             GasModel gas) {
    const double g = gas.gamma;
    const double cl = sound_speed(left, gas);
    const double cr = sound_speed(right, gas);

    if (!(right.u - left.u < 2.0 * (cl + cr) / (g - 1.0))) {
        throw VacuumFormation("receding states form vacuum: u_R - u_L = " +
                              std::to_string(right.u - left.u) + " >= 2(c_L + c_R)/(gamma-1) = " +
                              std::to_string(2.0 * (cl + cr) / (g - 1.0)));
    }

    // PVRS (linearized) guess. When it collapses to the positivity floor the
    // solution has two strong rarefactions and Newton would creep up the
    // power-law tail from 1e-8; the two-rarefaction pressure is exact there,
    // so start from it instead.
    const double p_pvrs = 0.5 * (left.p + right.p) -
                          0.125 * (right.u - left.u) * (left.rho + right.rho) * (cl + cr);
    double p = p_pvrs;
    if (!(p > 1e-8)) {
        const double z = (g - 1.0) / (2.0 * g);
        const double num = cl + cr - 0.5 * (g - 1.0) * (right.u - left.u);
        const double den = cl / std::pow(left.p, z) + cr / std::pow(right.p, z);
        p = std::max(1e-8, std::pow(num / den, 1.0 / z));
    }

    constexpr int max_iter = 100;
    bool converged = false;
    int used = 0;
    for (int it = 1; it <= max_iter; ++it) {
        used = it;
        const double f_left = pressure_fn(p, left, cl, gas);
        const double f_right = pressure_fn(p, right, cr, gas);
        const double f = f_left + f_right + (right.u - left.u);

        // Near-vacuum roots sit where f is pure cancellation of O(1) terms;
        // once |f| reaches that rounding floor the root is as sharp as
        // doubles allow and the relative criterion below can never trigger.
        const double noise = 1e-13 * (std::fabs(f_left) + std::fabs(f_right) +
                                      std::fabs(right.u - left.u));
        if (std::fabs(f) <= noise) {
            converged = true;
            break;
        }

        const double df = pressure_fn_deriv(p, left, cl, gas) +
                          pressure_fn_deriv(p, right, cr, gas);
        double dp = f / df;
        double p_next = p - dp;
        while (p_next <= 0.0) {  // damped step: halve until positive
            dp *= 0.5;
            p_next = p - dp;
        }
        if (std::fabs(p_next - p) / p_next < 1e-12) {
            p = p_next;
            converged = true;
            break;
        }
        p = p_next;
    }
    if (!converged) {
        throw NoConvergence("star-region Newton iteration exceeded " +
                            std::to_string(max_iter) + " iterations");
    }

    StarRegion star;
    star.p = p;
    star.u = 0.5 * (left.u + right.u) +
             0.5 * (pressure_fn(p, right, cr, gas) - pressure_fn(p, left, cl, gas));
    star.left_wave = p > left.p ? WaveKind::shock : WaveKind::rarefaction;
    star.right_wave = p > right.p ? WaveKind::shock : WaveKind::rarefaction;
    star.iterations = used;
    return star;
}

RiemannFanSample exact_riemann_solve(const PrimitiveState& left,
                                     const PrimitiveState& right, GasModel gas,
                                     double xi) {
    const StarRegion star = solve_star_region(left, right, gas);
    const double g = gas.gamma;
    const double mu = (g - 1.0) / (g + 1.0);

    RiemannFanSample out;
    out.left_wave = star.left_wave;
    out.right_wave = star.right_wave;

    if (xi <= star.u) {
        // Left of the contact.
        const double cl = sound_speed(left, gas);
        if (star.left_wave == WaveKind::shock) {
            const double shock_speed =
                left.u - cl * std::sqrt((g + 1.0) / (2.0 * g) * star.p / left.p +
                                        (g - 1.0) / (2.0 * g));
            if (xi < shock_speed) {
                out.state = left;
            } else {
                const double rho_star =
                    left.rho * (star.p / left.p + mu) / (mu * star.p / left.p + 1.0);
                out.state = {rho_star, star.u, star.p};
            }
        } else {
            const double c_star = cl * std::pow(star.p / left.p, (g - 1.0) / (2.0 * g));
            const double head = left.u - cl;
            const double tail = star.u - c_star;
            if (xi < head) {
                out.state = left;
            } else if (xi > tail) {
                const double rho_star = left.rho * std::pow(star.p / left.p, 1.0 / g);
                out.state = {rho_star, star.u, star.p};
            } else {
                const double c = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * (left.u - xi));
                const double u = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * left.u + xi);
                const double rho = left.rho * std::pow(c / cl, 2.0 / (g - 1.0));
                const double p = left.p * std::pow(c / cl, 2.0 * g / (g - 1.0));
                out.state = {rho, u, p};
            }
        }
    } else {
        // Right of the contact (mirror of the branch above).
        const double cr = sound_speed(right, gas);
        if (star.right_wave == WaveKind::shock) {
            const double shock_speed =
                right.u + cr * std::sqrt((g + 1.0) / (2.0 * g) * star.p / right.p +
                                         (g - 1.0) / (2.0 * g));
            if (xi > shock_speed) {
                out.state = right;
            } else {
                const double rho_star =
                    right.rho * (star.p / right.p + mu) / (mu * star.p / right.p + 1.0);
                out.state = {rho_star, star.u, star.p};
            }
        } else {
            const double c_star = cr * std::pow(star.p / right.p, (g - 1.0) / (2.0 * g));
            const double head = right.u + cr;
            const double tail = star.u + c_star;
            if (xi > head) {
                out.state = right;
            } else if (xi < tail) {
                const double rho_star = right.rho * std::pow(star.p / right.p, 1.0 / g);
                out.state = {rho_star, star.u, star.p};
            } else {
                const double c = 2.0 / (g + 1.0) * (cr - 0.5 * (g - 1.0) * (right.u - xi));
                const double u = 2.0 / (g + 1.0) * (-cr + 0.5 * (g - 1.0) * right.u + xi);
                const double rho = right.rho * std::pow(c / cr, 2.0 / (g - 1.0));
                const double p = right.p * std::pow(c / cr, 2.0 * g / (g - 1.0));
                out.state = {rho, u, p};
            }
        }
    }
    return out;
}

}  // namespace convshock
