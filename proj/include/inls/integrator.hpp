// Strang split-step time evolution and convergence-order measurement.
#pragma once

#include <functional>

#include "inls/observables.hpp"

namespace inls {

struct Schedule {
    double dt = 1e-3;
    double t_max = 1.0;
    int output_every = 1;      // observable sampling stride (steps)
    int checkpoint_every = 0;  // 0 = never
};

struct Trajectory {
    std::vector<ObservableSample> samples;
    std::vector<State> states;  // full states, if requested
    GridPtr grid;
    PhysParams params{};
    Schedule schedule{};
    bool linear_only = false;
    bool wall_alarm = false;      // mass near x = L exceeded 1e-8 of total
    bool origin_limited = false;  // phase-increment cap was hit
};

struct EvolveOptions {
    bool linear_only = false;          // test hook: nonlinearity forced off
    int store_state_every = 0;         // store full states every k samples (0 = none)
    std::vector<double> store_at_times;  // additionally store at these times
    double local_a1 = -1.0;            // interval for the local-decay norms
    double local_a2 = 1.0;
    std::function<void(const State&, int step)> on_checkpoint;
};

// phase_step(dt/2) then free_propagate(dt) then phase_step(dt/2).
State strang_step(const State& state, double dt, const PhysParams& params,
                  const PotentialWeights& weights, StepFlags* flags = nullptr);
State strang_step(const State& state, double dt, const PhysParams& params);

// Runs ceil(t_max/dt) steps, sampling observables per schedule. Negative dt
// evolves backwards. Throws NumericFault on NaN (message carries the last
// good time); sets wall_alarm when mass within 5 nodes of the wall exceeds
// 1e-8 of the total.
Trajectory evolve(const State& initial, const Schedule& schedule,
                  const PhysParams& params, const EvolveOptions& opts = {});

struct NumericFault : std::runtime_error {
    double last_good_time;
    NumericFault(const std::string& msg, double t)
        : std::runtime_error(msg), last_good_time(t) {}
};

struct ConvergenceResult {
    double order = 0.0;
    bool exact = false;  // all errors at roundoff (single-generator flow)
    std::vector<double> errors;
};

// Self-convergence slope of log(error) vs log(dt), errors measured in L2
// against a refined reference run at dt_min/4.
ConvergenceResult convergence_order(const State& initial, const PhysParams& params,
                                    double t_final,
                                    const std::vector<double>& dt_list,
                                    bool linear_only = false);

ObservableSample observe(const State& state, const PhysParams& params,
                         const PotentialWeights& weights, double local_a1,
                         double local_a2);

}  // namespace inls
