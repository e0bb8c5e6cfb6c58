// Sine-I transform, exact free Schrodinger propagator, spectral Sobolev norms.
#pragma once

#include "inls/domain.hpp"

namespace inls {

// Sine-I coefficients c_m of the interior-node field:
//   u(x_j) = sum_m c_m sin(k_m x_j).
struct SpectralState {
    GridPtr grid;
    double t = 0.0;
    std::vector<Complex> coeffs;  // size N-1
};

SpectralState to_spectral(const State& state);
State from_spectral(const SpectralState& sp);

// c_m <- exp(-i k_m^2 dt) c_m; unitary, so the L2 norm is preserved exactly.
State free_propagate(const State& state, double dt);
SpectralState free_propagate(const SpectralState& sp, double dt);

enum class NormKind { homogeneous, inhomogeneous };

// Norms of the odd extension on [-L, L], continuum-normalized:
//   homogeneous:   sqrt( L * sum_m k_m^{2s} |c_m|^2 )
//   inhomogeneous: sqrt( L2^2 + Hdot_s^2 )
// s = 0 returns the L2 norm for both kinds.
double sobolev_norm(const State& state, double s, NormKind kind);
double sobolev_norm(const SpectralState& sp, double s, NormKind kind);

// Spatial derivative of the field, evaluated at nodes j = 0..N (size N+1);
// sine coefficients differentiate into a cosine series, so the endpoints are
// available too.
std::vector<Complex> derivative_at_nodes(const State& state);

}  // namespace inls
