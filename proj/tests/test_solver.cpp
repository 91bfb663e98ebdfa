#include "convshock/solver.hpp"

#include <cmath>
#include <cstring>
#include <vector>

#include "convshock/scenarios_io.hpp"
#include "doctest.h"
#include "support/random_states.hpp"

using namespace convshock;
using convshock::testing::close_rel;

namespace {

const GasModel kAir{1.4};

SimulationConfig planar_config(int n_cells, double r_max) {
    SimulationConfig config = make_config(Geometry{0}, 4.0);
    config.n_cells = n_cells;
    config.r_max = r_max;
    config.initial.r0 = 0.5 * r_max;  // unused by custom-state runs, must validate
    config.exec = ExecPolicy::serial;
    return config;
}

SimulationState uniform_state(const SimulationConfig& config, const PrimitiveState& w) {
    SimulationState state;
    state.cells.assign(config.n_cells, primitive_to_conserved(w, config.gas));
    return state;
}

SimulationState sod_state(const SimulationConfig& config) {
    const RadialGrid grid = config.grid();
    SimulationState state;
    const ConservedState left = primitive_to_conserved({1.0, 0.0, 1.0}, config.gas);
    const ConservedState right = primitive_to_conserved({0.125, 0.0, 0.1}, config.gas);
    for (int i = 0; i < grid.n_cells; ++i) {
        state.cells.push_back(grid.center(i) < 0.5 ? left : right);
    }
    return state;
}

// Gaussian density pulse advected at uniform velocity and pressure; an exact
// solution of the Euler equations (pure entropy wave).
SimulationState gaussian_pulse(const SimulationConfig& config, double x0, double width,
                               double amplitude) {
    const RadialGrid grid = config.grid();
    SimulationState state;
    for (int i = 0; i < grid.n_cells; ++i) {
        const double x = grid.center(i);
        const double rho = 1.0 + amplitude * std::exp(-((x - x0) / width) * ((x - x0) / width));
        state.cells.push_back(primitive_to_conserved({rho, 1.0, 1.0}, config.gas));
    }
    return state;
}

bool cells_equal(const SimulationState& a, const SimulationState& b) {
    return a.cells.size() == b.cells.size() &&
           std::memcmp(a.cells.data(), b.cells.data(),
                       a.cells.size() * sizeof(ConservedState)) == 0;
}

}  // namespace

TEST_CASE("compute_dt: quiescent reference state gives cfl * dr") {
    SimulationConfig config = planar_config(400, 2.0);  // dr = 0.005
    const SimulationState state = uniform_state(config, {1.0, 0.0, 1.0 / 1.4});
    const double dt = compute_dt(state, config.grid(), kAir, 0.5);
    CHECK(dt == doctest::Approx(0.0025).epsilon(1e-12));

    const double dt2 = compute_dt(state, config.grid(), kAir, 1.0);
    CHECK(dt2 == doctest::Approx(2.0 * dt).epsilon(1e-14));
}

TEST_CASE("compute_dt: a single fast cell controls the step") {
    SimulationConfig config = planar_config(100, 1.0);
    SimulationState state = uniform_state(config, {1.0, 0.0, 1.0 / 1.4});
    // u = 3, c = 2  ->  |u| + c = 5
    state.cells[42] = primitive_to_conserved({1.4, 3.0, 4.0}, kAir);
    const double dt = compute_dt(state, config.grid(), kAir, 0.5);
    CHECK(dt == doctest::Approx(0.5 * 0.01 / 5.0).epsilon(1e-12));
}

TEST_CASE("compute_dt clips to the next stop") {
    SimulationConfig config = planar_config(100, 1.0);
    const SimulationState state = uniform_state(config, {1.0, 0.0, 1.0 / 1.4});
    const double dt = compute_dt(state, config.grid(), kAir, 0.5, 0.001);
    CHECK(dt == 0.001);
}

TEST_CASE("apply_boundaries: reflective axis ghosts mirror with u negated") {
    SimulationConfig config = make_config(Geometry{1}, 4.0);
    config.n_cells = 4;
    config.r_max = 4.0;
    config.exec = ExecPolicy::serial;

    SimulationState state;
    state.cells.push_back(primitive_to_conserved({1.0, -2.0, 1.0}, kAir));
    state.cells.push_back(primitive_to_conserved({1.0, -1.5, 1.0}, kAir));
    state.cells.push_back(primitive_to_conserved({1.0, -1.0, 1.0}, kAir));
    state.cells.push_back(primitive_to_conserved({1.0, -0.5, 1.0}, kAir));

    const std::vector<PrimitiveState> ghost = apply_boundaries(state, config);
    REQUIRE(ghost.size() == 8);
    CHECK(close_rel(ghost[0].u, 1.5, 1e-14));
    CHECK(close_rel(ghost[1].u, 2.0, 1e-14));
    CHECK(close_rel(ghost[0].rho, 1.0, 1e-14));
    CHECK(close_rel(ghost[1].p, 1.0, 1e-14));

    // outer ghosts hold the initial outer state at all times
    const PrimitiveState outer = config.initial.outer_state(kAir);
    CHECK(ghost[6].rho == outer.rho);
    CHECK(ghost[7].p == outer.p);
    CHECK(ghost[6].u == 0.0);
}

TEST_CASE("apply_boundaries: transmissive ghosts copy the edge cells") {
    SimulationConfig config = planar_config(4, 1.0);
    SimulationState state;
    state.cells.push_back(primitive_to_conserved({1.0, 0.3, 1.0}, kAir));
    state.cells.push_back(primitive_to_conserved({2.0, 0.3, 1.0}, kAir));
    state.cells.push_back(primitive_to_conserved({3.0, 0.3, 1.0}, kAir));
    state.cells.push_back(primitive_to_conserved({4.0, 0.3, 1.0}, kAir));
    const std::vector<PrimitiveState> ghost = apply_boundaries(state, config);
    CHECK(ghost[0].rho == ghost[2].rho);
    CHECK(ghost[1].rho == ghost[2].rho);
    CHECK(ghost[6].rho == ghost[5].rho);
    CHECK(ghost[7].rho == ghost[5].rho);
}

TEST_CASE("hyperbolic_step: uniform state is an exact fixed point") {
    SimulationConfig config = planar_config(64, 1.0);
    const SimulationState state = uniform_state(config, {1.3, 0.4, 0.9});
    const SimulationState next = hyperbolic_step(state, config, 1e-3);
    CHECK(cells_equal(state, next));
}

TEST_CASE("hyperbolic_step: stationary contact is preserved") {
    SimulationConfig config = planar_config(64, 1.0);
    SimulationState state;
    for (int i = 0; i < 64; ++i) {
        const double rho = i < 32 ? 1.0 : 0.125;
        state.cells.push_back(primitive_to_conserved({rho, 0.0, 1.0}, kAir));
    }
    SimulationState next = hyperbolic_step(state, config, 2e-3);
    for (int i = 0; i < 64; ++i) {
        CHECK(close_rel(next.cells[i].mass, state.cells[i].mass, 1e-13));
        CHECK(std::fabs(next.cells[i].momentum) < 1e-13);
        CHECK(close_rel(next.cells[i].energy, state.cells[i].energy, 1e-13));
    }
}

TEST_CASE("hyperbolic_step: one Sod step matches the scripted reference") {
    SimulationConfig config = planar_config(100, 1.0);
    const SimulationState state = sod_state(config);

    const double dt = compute_dt(state, config.grid(), kAir, 0.5);
    CHECK(close_rel(dt, 0.004225771273642583, 1e-14));

    const SimulationState next = hyperbolic_step(state, config, dt);

    // Frozen from the independent straight-line scripted implementation.
    const double expected[5][3] = {
        {1.0, 0.0, 2.5000000000000004},
        {0.8349158141418421, 0.1901597073139162, 1.9523897898254174},
        {0.2900841858581579, 0.19015970731391627, 0.797610210174583},
        {0.125, 0.0, 0.25000000000000006},
        {0.125, 0.0, 0.25000000000000006},
    };
    for (int k = 0; k < 5; ++k) {
        const ConservedState& u = next.cells[48 + k];
        CHECK(close_rel(u.mass, expected[k][0], 1e-11));
        CHECK(close_rel(u.momentum, expected[k][1], 1e-11));
        CHECK(close_rel(u.energy, expected[k][2], 1e-11));
    }

    StateVector total{};
    for (const ConservedState& u : next.cells) total += u;
    CHECK(close_rel(total.mass, 56.25, 1e-12));
    CHECK(close_rel(total.momentum, 0.3803194146278325, 1e-11));
    CHECK(close_rel(total.energy, 137.50000000000003, 1e-12));
}

TEST_CASE("split_step: planar geometry reduces exactly to the hyperbolic step") {
    SimulationConfig config = planar_config(100, 1.0);
    const SimulationState state = sod_state(config);
    const double dt = compute_dt(state, config.grid(), kAir, 0.5);
    for (auto splitting : {Splitting::strang, Splitting::godunov}) {
        config.splitting = splitting;
        const SimulationState a = split_step(state, config, dt);
        const SimulationState b = hyperbolic_step(state, config, dt);
        CHECK(cells_equal(a, b));
    }
}

TEST_CASE("split_step: uniform fluid at rest is invariant for all geometries") {
    for (int alpha : {0, 1, 2}) {
        SimulationConfig config = make_config(Geometry{alpha}, 4.0);
        config.n_cells = 64;
        config.exec = ExecPolicy::serial;
        // Matches the fixed outer ghost state, so the field is globally uniform.
        const SimulationState state =
            uniform_state(config, config.initial.outer_state(kAir));
        const SimulationState next = split_step(state, config, 1e-3);
        for (int i = 0; i < config.n_cells; ++i) {
            CHECK(close_rel(next.cells[i].mass, state.cells[i].mass, 1e-13));
            CHECK(std::fabs(next.cells[i].momentum) < 1e-13);
            CHECK(close_rel(next.cells[i].energy, state.cells[i].energy, 1e-13));
        }
    }
}

TEST_CASE("split_step aborts on a corrupted cell") {
    SimulationConfig config = planar_config(64, 1.0);
    SimulationState state = uniform_state(config, {1.0, 0.0, 1.0});
    state.cells[10].energy = -1.0;
    CHECK_THROWS_AS(split_step(state, config, 1e-3), NonPhysicalState);
}

TEST_CASE("strang and godunov converge to each other under refinement") {
    std::vector<double> l1_diffs;
    for (int n : {100, 200, 400}) {
        SimulationConfig config = make_config(Geometry{1}, 4.0);
        config.n_cells = n;
        config.t_end = 0.3;
        config.snapshot_times = {};
        config.exec = ExecPolicy::serial;

        config.splitting = Splitting::strang;
        const RunResult strang = run_simulation(config);
        config.splitting = Splitting::godunov;
        const RunResult godunov = run_simulation(config);

        double l1 = 0.0;
        for (int i = 0; i < n; ++i) {
            l1 += std::fabs(strang.final_state.cells[i].mass -
                            godunov.final_state.cells[i].mass);
        }
        l1 /= n;
        l1_diffs.push_back(l1);
    }
    CHECK(l1_diffs[1] < l1_diffs[0]);
    CHECK(l1_diffs[2] < l1_diffs[1]);
    const double order = std::log2(l1_diffs[0] / l1_diffs[2]) / 2.0;
    CHECK(order >= 0.9);
}

TEST_CASE("detect_convergence: linear interpolation of the first crossing") {
    const std::vector<AxisSample> history = {{0.1, -0.5}, {0.2, -0.2}, {0.3, 0.4}};
    const ConvergenceEvent event = detect_convergence(history);
    CHECK(event.detected);
    CHECK(close_rel(event.t_c, 0.2 + 0.1 * (0.2 / 0.6), 1e-14));
}

TEST_CASE("detect_convergence: all-negative history never fires") {
    const std::vector<AxisSample> history = {{0.1, -0.5}, {0.2, -0.2}, {0.3, -0.1}};
    CHECK_FALSE(detect_convergence(history).detected);
}

TEST_CASE("detect_convergence: quiescent start and sub-threshold dips are guarded") {
    // never exceeds |u| = 0.01, so the crossing is not armed
    const std::vector<AxisSample> quiet = {{0.0, 0.0}, {0.1, -0.005}, {0.2, 0.005}};
    CHECK_FALSE(detect_convergence(quiet).detected);

    // arms only once |u| > 0.01; the initial u = 0 samples are not crossings
    const std::vector<AxisSample> run = {
        {0.0, 0.0}, {0.1, 0.0}, {0.2, -0.5}, {0.3, 0.1}};
    const ConvergenceEvent event = detect_convergence(run);
    CHECK(event.detected);
    CHECK(close_rel(event.t_c, 0.2 + 0.1 * (0.5 / 0.6), 1e-14));
}

TEST_CASE("planar advection conserves the totals through the ledger") {
    SimulationConfig config = planar_config(400, 4.0);
    SimulationState state = gaussian_pulse(config, 1.0, 0.15, 0.5);
    const RadialGrid grid = config.grid();

    const StateVector before = weighted_totals(state, grid, config.geometry);
    BoundaryFluxRecord record;
    for (int s = 0; s < 300; ++s) {
        const double dt = compute_dt(state, grid, kAir, config.cfl);
        state = split_step(state, config, dt, &record);
    }
    const StateVector after = weighted_totals(state, grid, config.geometry);

    ConservationLedger ledger{before, after, record.net_in};
    const StateVector drift = ledger.relative_drift();
    CHECK(std::fabs(drift.mass) < 1e-10);
    CHECK(std::fabs(drift.momentum) < 1e-10);
    CHECK(std::fabs(drift.energy) < 1e-10);
}

TEST_CASE("mirror-symmetric planar data stays symmetric for 100 steps") {
    SimulationConfig config = planar_config(100, 1.0);
    const RadialGrid grid = config.grid();
    const int n = config.n_cells;

    SimulationState state;
    state.cells.resize(n);
    for (int i = 0; i < n / 2; ++i) {
        const double x = grid.center(i);
        const double bump = std::exp(-((x - 0.5) / 0.1) * ((x - 0.5) / 0.1));
        const PrimitiveState w{1.0 + 0.3 * bump, 0.0, 1.0 / 1.4 + 0.2 * bump};
        state.cells[i] = primitive_to_conserved(w, kAir);
        state.cells[n - 1 - i] = state.cells[i];  // exact mirror by construction
    }

    for (int s = 0; s < 100; ++s) {
        const double dt = compute_dt(state, grid, kAir, config.cfl);
        state = split_step(state, config, dt);
    }
    for (int i = 0; i < n / 2; ++i) {
        const ConservedState& a = state.cells[i];
        const ConservedState& b = state.cells[n - 1 - i];
        CHECK(close_rel(a.mass, b.mass, 1e-11));
        CHECK(close_rel(a.energy, b.energy, 1e-11));
        CHECK(std::fabs(a.momentum + b.momentum) <
              1e-11 * std::max(1.0, std::fabs(a.momentum)));
    }
}

TEST_CASE("run_simulation: t_end = 0 yields a single snapshot of the initial condition") {
    SimulationConfig config = make_config(Geometry{1}, 4.0);
    config.t_end = 0.0;
    config.snapshot_times = {};
    config.exec = ExecPolicy::serial;
    const RunResult result = run_simulation(config);
    REQUIRE(result.snapshots.size() == 1);
    CHECK(result.snapshots[0].time == 0.0);
    CHECK(result.steps == 0);
    CHECK(result.snapshots[0].rows[0].rho == 1.0);
    CHECK(result.snapshots[0].rows.back().rho == 4.0);
}

TEST_CASE("run_simulation hits snapshot times exactly") {
    SimulationConfig config = planar_config(100, 2.0);
    config.t_end = 0.1;
    config.snapshot_times = {0.013, 0.029, 0.1};
    const RunResult result =
        run_simulation(config, gaussian_pulse(config, 0.7, 0.2, 0.3));
    REQUIRE(result.snapshots.size() == 3);
    CHECK(result.snapshots[0].time == 0.013);
    CHECK(result.snapshots[1].time == 0.029);
    CHECK(result.snapshots[2].time == 0.1);
    CHECK(result.final_state.time == 0.1);
}

TEST_CASE("run_simulation fills the abort report on blow-up") {
    SimulationConfig config = planar_config(64, 1.0);
    config.t_end = 1.0;
    SimulationState state = uniform_state(config, {1.0, 0.0, 1.0});
    state.cells[32].energy = 1e-9;  // kinetic energy exceeds the total
    state.cells[32].momentum = 1.0;

    AbortReport report;
    RunHooks hooks;
    hooks.abort_report = &report;
    CHECK_THROWS_AS(run_simulation(config, state, hooks), NonPhysicalState);
    CHECK(report.aborted);
    CHECK(report.last_state.cells.size() == 64);
}
