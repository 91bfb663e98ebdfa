// Benchmark comparing the serial reference kernels against the OpenMP ones
// on a large cylindrical ratio-10 field, and verifying they agree bitwise.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "convshock/scenarios_io.hpp"
#include "convshock/solver.hpp"

using namespace convshock;

namespace {

double run_steps(SimulationConfig config, ExecPolicy exec, int steps,
                 SimulationState& out) {
    config.exec = exec;
    const RadialGrid grid = config.grid();
    SimulationState state = build_initial_condition(config.initial, grid, config.gas);
    const auto t0 = std::chrono::steady_clock::now();
    for (int s = 0; s < steps; ++s) {
        const double dt = compute_dt(state, grid, config.gas, config.cfl,
                                     std::numeric_limits<double>::infinity(), exec);
        state = split_step(state, config, dt);
    }
    const auto t1 = std::chrono::steady_clock::now();
    out = std::move(state);
    return std::chrono::duration<double>(t1 - t0).count();
}

bool bitwise_equal(const SimulationState& a, const SimulationState& b) {
    if (a.cells.size() != b.cells.size()) return false;
    return std::memcmp(a.cells.data(), b.cells.data(),
                       a.cells.size() * sizeof(ConservedState)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
    int n_cells = 200000;
    int steps = 50;
    if (argc > 1) n_cells = std::stoi(argv[1]);
    if (argc > 2) steps = std::stoi(argv[2]);

    SimulationConfig config = make_config(Geometry{1}, 10.0);
    config.n_cells = n_cells;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "cells: " << n_cells << "  steps: " << steps << "\n";

    SimulationState serial_state, omp_state;
    const double t_serial = run_steps(config, ExecPolicy::serial, steps, serial_state);
    const double t_omp = run_steps(config, ExecPolicy::openmp, steps, omp_state);

    std::cout << "serial reference: " << t_serial * 1e3 / steps << " ms/step\n";
    std::cout << "openmp kernels:   " << t_omp * 1e3 / steps << " ms/step\n";
    std::cout << "speedup:          " << t_serial / t_omp << "x\n";
    std::cout << "bitwise match:    " << (bitwise_equal(serial_state, omp_state) ? "yes" : "NO")
              << "\n";
    return bitwise_equal(serial_state, omp_state) ? 0 : 1;
}
