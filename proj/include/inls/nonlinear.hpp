// Singular weight |x|^{-b}, exact nonlinear phase flow, potential energy.
#pragma once

#include "inls/domain.hpp"

namespace inls {

// w_j = x_j^{-b} at interior nodes. x = 0 is never stored; the multiplier
// |x|^{-b}|u|^alpha vanishes there for odd data with alpha > b.
struct PotentialWeights {
    GridPtr grid;
    double b;
    std::vector<double> weights;  // size N-1, strictly decreasing
};

PotentialWeights potential_weight(const GridPtr& grid, double b);

// Per-node phase increments larger than this cap are clamped and the run is
// flagged origin-resolution-limited (possible for user-supplied alpha <= b).
inline constexpr double kPhaseCap = 100.0;

struct StepFlags {
    bool origin_limited = false;
};

// Exact solution of the potential subflow u_t = -i |x|^{-b} |u|^alpha u:
//   u_j <- exp(-i dt w_j |u_j|^alpha) u_j.
// Pointwise modulus is unchanged exactly.
State phase_step(const State& state, double dt, const PhysParams& params,
                 const PotentialWeights& weights, StepFlags* flags = nullptr);
State phase_step(const State& state, double dt, const PhysParams& params);

// (1/(alpha+2)) * integral over the odd extension of |x|^{-b} |u|^{alpha+2},
// by trapezoid quadrature (origin contribution 0).
double potential_energy(const State& state, const PhysParams& params,
                        const PotentialWeights& weights);
double potential_energy(const State& state, const PhysParams& params);

}  // namespace inls
