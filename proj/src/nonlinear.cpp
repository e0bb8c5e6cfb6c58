#include "inls/nonlinear.hpp"

#include <cmath>

namespace inls {

PotentialWeights potential_weight(const GridPtr& grid, double b) {
    require(grid != nullptr, "potential_weight: null grid");
    require(b > 0.0 && b < 1.0, "potential_weight: b must lie in (0,1)");
    PotentialWeights w;
    w.grid = grid;
    w.b = b;
    w.weights.resize(grid->interior_count());
    for (int j = 0; j < grid->interior_count(); ++j)
        w.weights[j] = std::pow(grid->nodes[j], -b);
    return w;
}

State phase_step(const State& state, double dt, const PhysParams& params,
                 const PotentialWeights& weights, StepFlags* flags) {
    require(state.finite(), "phase_step: non-finite state");
    State out = state;
    const int n = state.grid->interior_count();
    for (int j = 0; j < n; ++j) {
        double amp = std::abs(state.values[j]);
        if (amp == 0.0) continue;
        double phase = dt * weights.weights[j] * std::pow(amp, params.alpha);
        if (std::abs(phase) > kPhaseCap) {
            phase = std::copysign(kPhaseCap, phase);
            if (flags) flags->origin_limited = true;
        }
        out.values[j] *= Complex(std::cos(phase), -std::sin(phase));
    }
    return out;
}

State phase_step(const State& state, double dt, const PhysParams& params) {
    return phase_step(state, dt, params, potential_weight(state.grid, params.b));
}

double potential_energy(const State& state, const PhysParams& params,
                        const PotentialWeights& weights) {
    require(state.finite(), "potential_energy: non-finite state");
    double sum = 0.0;
    const int n = state.grid->interior_count();
    for (int j = 0; j < n; ++j)
        sum += weights.weights[j] *
               std::pow(std::abs(state.values[j]), params.alpha + 2.0);
    return 2.0 * sum * state.grid->dx / (params.alpha + 2.0);
}

double potential_energy(const State& state, const PhysParams& params) {
    return potential_energy(state, params, potential_weight(state.grid, params.b));
}

}  // namespace inls
