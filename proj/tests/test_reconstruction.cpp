#include "convshock/reconstruction.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "support/random_states.hpp"

using namespace convshock;
using convshock::testing::close_rel;
using convshock::testing::StateGen;

TEST_CASE("limiter_superbee on the tabulated points") {
    CHECK(limiter_superbee(-1.0) == 0.0);
    CHECK(limiter_superbee(1.0) == 1.0);
    CHECK(limiter_superbee(0.5) == 1.0);
    CHECK(limiter_superbee(3.0) == 2.0);
}

TEST_CASE("limiter_minmod on the tabulated points") {
    CHECK(limiter_minmod(-2.0) == 0.0);
    CHECK(limiter_minmod(0.5) == 0.5);
    CHECK(limiter_minmod(4.0) == 1.0);
}

TEST_CASE("limiters stay inside the second-order Sweby region") {
    StateGen gen(301);
    for (int i = 0; i < 2000; ++i) {
        const double r = gen.uniform(-10.0, 10.0);
        for (double phi : {limiter_superbee(r), limiter_minmod(r)}) {
            if (r <= 0.0) {
                CHECK(phi == 0.0);
            } else {
                CHECK(phi >= 0.0);
                CHECK(phi <= std::min(2.0 * r, 2.0) + 1e-15);
            }
        }
    }
}

namespace {
PrimitiveState with_rho(double rho) { return {rho, 0.2, 1.0}; }
}  // namespace

TEST_CASE("muscl_reconstruct: uniform stencil reproduces the cell value") {
    const PrimitiveState s{1.3, -0.4, 2.1};
    for (auto limiter : {LimiterKind::superbee, LimiterKind::minmod, LimiterKind::none}) {
        const FacePair f = muscl_reconstruct(s, s, s, limiter);
        CHECK(f.minus.rho == s.rho);
        CHECK(f.minus.u == s.u);
        CHECK(f.minus.p == s.p);
        CHECK(f.plus.rho == s.rho);
        CHECK(f.plus.u == s.u);
        CHECK(f.plus.p == s.p);
    }
}

TEST_CASE("muscl_reconstruct: linear ramp is reconstructed exactly") {
    const FacePair f = muscl_reconstruct(with_rho(1.0), with_rho(2.0), with_rho(3.0),
                                         LimiterKind::superbee);
    CHECK(f.minus.rho == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(f.plus.rho == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("muscl_reconstruct: local extremum is clipped flat") {
    const FacePair f = muscl_reconstruct(with_rho(1.0), with_rho(3.0), with_rho(1.0),
                                         LimiterKind::superbee);
    CHECK(f.minus.rho == 3.0);
    CHECK(f.plus.rho == 3.0);
}

TEST_CASE("TVD boundedness: faces stay within the stencil range") {
    StateGen gen(302);
    for (int i = 0; i < 2000; ++i) {
        const PrimitiveState a = gen.primitive();
        const PrimitiveState b = gen.primitive();
        const PrimitiveState c = gen.primitive();
        for (auto limiter : {LimiterKind::superbee, LimiterKind::minmod}) {
            const FacePair f = muscl_reconstruct(a, b, c, limiter);
            const auto check_comp = [&](double lo_a, double lo_b, double lo_c, double minus,
                                        double plus) {
                const double lo = std::min({lo_a, lo_b, lo_c});
                const double hi = std::max({lo_a, lo_b, lo_c});
                const double slack = 1e-13 * std::max(1.0, std::fabs(hi));
                CHECK(minus >= lo - slack);
                CHECK(minus <= hi + slack);
                CHECK(plus >= lo - slack);
                CHECK(plus <= hi + slack);
            };
            check_comp(a.rho, b.rho, c.rho, f.minus.rho, f.plus.rho);
            check_comp(a.u, b.u, c.u, f.minus.u, f.plus.u);
            check_comp(a.p, b.p, c.p, f.minus.p, f.plus.p);
        }
    }
}

TEST_CASE("limiter = none reproduces globally linear data at the faces") {
    StateGen gen(303);
    for (int i = 0; i < 1000; ++i) {
        const double rho0 = gen.log_uniform(0.5, 5.0);
        const double slope = gen.uniform(-0.2, 0.2) * rho0;
        const PrimitiveState a{rho0 - slope, 0.1, 1.0};
        const PrimitiveState b{rho0, 0.1, 1.0};
        const PrimitiveState c{rho0 + slope, 0.1, 1.0};
        const FacePair f = muscl_reconstruct(a, b, c, LimiterKind::none);
        CHECK(close_rel(f.minus.rho, rho0 - 0.5 * slope, 1e-13));
        CHECK(close_rel(f.plus.rho, rho0 + 0.5 * slope, 1e-13));
    }
}

TEST_CASE("reversing the stencil swaps the faces") {
    StateGen gen(304);
    for (int i = 0; i < 2000; ++i) {
        const PrimitiveState a = gen.primitive();
        const PrimitiveState b = gen.primitive();
        const PrimitiveState c = gen.primitive();
        for (auto limiter :
             {LimiterKind::superbee, LimiterKind::minmod, LimiterKind::none}) {
            const FacePair fwd = muscl_reconstruct(a, b, c, limiter);
            const FacePair rev = muscl_reconstruct(c, b, a, limiter);
            CHECK(close_rel(fwd.minus.rho, rev.plus.rho, 1e-12));
            CHECK(close_rel(fwd.plus.rho, rev.minus.rho, 1e-12));
            CHECK(close_rel(fwd.minus.p, rev.plus.p, 1e-12));
            CHECK(close_rel(fwd.plus.p, rev.minus.p, 1e-12));
        }
    }
}

TEST_CASE("positivity fallback zeroes the slope when a face would go negative") {
    // Unlimited slope pushes the plus-face pressure negative; the whole cell
    // must fall back to first order.
    const PrimitiveState a{1.0, 0.0, 5.0};
    const PrimitiveState b{1.0, 0.0, 1.0};
    const PrimitiveState c{1.0, 0.0, 0.1};
    const FacePair f = muscl_reconstruct(a, b, c, LimiterKind::none);
    CHECK(f.minus.p == b.p);
    CHECK(f.plus.p == b.p);
}

TEST_CASE("reconstructed faces are always valid states") {
    StateGen gen(305);
    for (int i = 0; i < 2000; ++i) {
        const PrimitiveState a = gen.primitive();
        const PrimitiveState b = gen.primitive();
        const PrimitiveState c = gen.primitive();
        for (auto limiter :
             {LimiterKind::superbee, LimiterKind::minmod, LimiterKind::none}) {
            const FacePair f = muscl_reconstruct(a, b, c, limiter);
            CHECK(f.minus.valid());
            CHECK(f.plus.valid());
        }
    }
}
