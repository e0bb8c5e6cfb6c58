// Scalar diagnostics: conserved quantities, norms, local decay norms,
// Morawetz functional, discrete Strichartz norms.
#pragma once

#include "inls/nonlinear.hpp"
#include "inls/transform.hpp"

namespace inls {

struct ObservableSample {
    double t = 0.0;
    double mass = 0.0;
    double e_kin = 0.0;
    double e_pot = 0.0;
    double e_total = 0.0;
    double h1 = 0.0;
    double hsc = 0.0;       // homogeneous H^{s_c} norm
    double l2_local = 0.0;
    double linf_local = 0.0;
    double morawetz = 0.0;
};

// 2 * sum_j |u_j|^2 * dx (odd extension).
double mass(const State& state);

struct EnergyParts {
    double kinetic;
    double potential;
    double total;
};

EnergyParts energy(const State& state, const PhysParams& params,
                   const PotentialWeights& weights);
EnergyParts energy(const State& state, const PhysParams& params);

// Quadrature L2 norm and max modulus of the odd extension over [a1, a2].
struct LocalNorms {
    double l2;
    double linf;
};
LocalNorms local_norms(const State& state, double a1, double a2);

// I(u) = Im of the integral of phi(x) u conj(u_x) over the odd extension,
// phi(x) = x/(1+|x|), with u_x computed spectrally.
double morawetz(const State& state);

// q = infinity is represented by the actual infinity.
struct AdmissiblePair {
    double s;
    double q;
    double r;
};

// Solves 2/q = 1/2 - 1/r - s for each r. Requires s in (-1/2, 1/2) and
// r >= 2/(1-2s).
std::vector<AdmissiblePair> admissible_pairs(double s,
                                             const std::vector<double>& r_values);

// L^r norm of the odd extension (node quadrature; r = infinity gives the max).
double lr_norm(const State& state, double r);

struct Trajectory;  // defined in integrator.hpp

// Discrete surrogate of the mixed L^q_t L^r_x norm over the trajectory's
// stored full states (left-endpoint Riemann sum in time; max for q = inf).
// With derivative = true, uses the W^{1,r} spatial norm instead of L^r.
double strichartz_norm(const Trajectory& traj, const AdmissiblePair& pair,
                       bool derivative = false);

}  // namespace inls
