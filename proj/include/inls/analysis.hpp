// Certificates: Hardy inequality, scaling symmetry, interaction-picture
// scattering detection, wave-operator round trip, small-data bound.
#pragma once

#include <functional>

#include "inls/integrator.hpp"

namespace inls {

struct HardyReport {
    double p;
    double lhs;             // integral of |u(r)/r|^p over (0, inf)
    double rhs;             // integral of |u'(r)|^p
    double sharp_constant;  // (p/(p-1))^p
    double ratio;           // lhs/rhs, 0 when both vanish
};

// Grid-based quadrature; |u/r| is extended continuously at r = 0 by |u'(0)|.
HardyReport hardy_ratio(const State& state, double p);

// Analytic variant: u and u' given as callables, integrated adaptively on
// [0, upper].
HardyReport hardy_ratio(const std::function<double(double)>& u,
                        const std::function<double(double)>& du, double p,
                        double upper);

// u_lambda(x') = lambda^{(2-b)/alpha} u(lambda x') on the grid with
// L' = L/lambda and the same N (nodes map exactly); t' = t/lambda^2.
State scale_state(const State& state, double lambda, const PhysParams& params);

// v(t) = e^{-it Laplacian} u(t); time metadata retained.
State interaction_picture(const State& state);

struct ScatteringReport {
    std::vector<double> times;
    std::vector<double> residuals;  // ||v(t_{i+1}) - v(t_i)||_{H^1}
    State u_plus;                   // v at the final window time
    double final_mismatch;          // ||u(T) - e^{iT Laplacian} u_plus||_{H^1}
    bool scattered;
    double tol;
};

// Verdict "scattered" iff the last three residuals are each below tol and
// monotonically non-increasing. Requires full states stored at the window
// times.
ScatteringReport scattering_report(const Trajectory& traj,
                                   const std::vector<double>& window, double tol);

struct WaveOperatorReport {
    double mismatch;       // sup over the final window of ||u(t) - e^{it} phi||_{H^1}
    double mass_mismatch;  // |M[u0+] - M[phi]|
    State u0;              // reconstructed initial data
};

// Backward-forward surrogate of the wave operator: u(T_back) := free flow of
// phi, evolve back to t = 0, evolve forward again, compare to the free flow.
WaveOperatorReport wave_operator_roundtrip(const State& phi, double T_back,
                                           const Schedule& schedule,
                                           const PhysParams& params,
                                           bool linear_only = false);

struct SmallDataReport {
    std::vector<AdmissiblePair> pairs;
    std::vector<double> nonlinear_norms;
    std::vector<double> linear_norms;
    double max_ratio;  // 0 when both sides vanish
    bool passes;       // max_ratio <= 2
};

// Discrete surrogate of the small-data bound: each pair's Strichartz norm of
// the nonlinear run over that of a matched linear-only run.
SmallDataReport small_data_certificate(const State& u0, const Trajectory& traj,
                                       const std::vector<AdmissiblePair>& pairs);

}  // namespace inls
