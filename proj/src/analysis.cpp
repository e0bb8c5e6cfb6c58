#include "inls/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "inls/quadrature.hpp"

namespace inls {

namespace {

double h1_norm_of_diff(const State& a, const State& b) {
    State diff = a;
    for (size_t j = 0; j < diff.values.size(); ++j) diff.values[j] -= b.values[j];
    return sobolev_norm(diff, 1.0, NormKind::inhomogeneous);
}

}  // namespace

HardyReport hardy_ratio(const State& state, double p) {
    require(p > 1.0, "hardy_ratio: p must exceed 1");
    require(state.finite(), "hardy_ratio: non-finite state");
    const Grid& g = *state.grid;
    std::vector<Complex> du = derivative_at_nodes(state);

    // |u(r)/r|^p on [0, L], value at r = 0 taken as |u'(0)|^p.
    double lhs = 0.5 * std::pow(std::abs(du[0]), p);  // trapezoid endpoint
    for (int j = 0; j < g.interior_count(); ++j)
        lhs += std::pow(std::abs(state.values[j]) / g.nodes[j], p);
    lhs *= g.dx;  // endpoint at L contributes 0 (u(L) = 0)

    double rhs = 0.5 * std::pow(std::abs(du[0]), p) +
                 0.5 * std::pow(std::abs(du[g.N]), p);
    for (int j = 1; j < g.N; ++j) rhs += std::pow(std::abs(du[j]), p);
    rhs *= g.dx;

    HardyReport rep;
    rep.p = p;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.sharp_constant = std::pow(p / (p - 1.0), p);
    rep.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    return rep;
}

HardyReport hardy_ratio(const std::function<double(double)>& u,
                        const std::function<double(double)>& du, double p,
                        double upper) {
    require(p > 1.0, "hardy_ratio: p must exceed 1");
    auto lhs_f = [&](double r) {
        if (r == 0.0) return std::pow(std::abs(du(0.0)), p);
        return std::pow(std::abs(u(r) / r), p);
    };
    auto rhs_f = [&](double r) { return std::pow(std::abs(du(r)), p); };
    HardyReport rep;
    rep.p = p;
    rep.lhs = adaptive_simpson(lhs_f, 0.0, upper, 1e-13);
    rep.rhs = adaptive_simpson(rhs_f, 0.0, upper, 1e-13);
    rep.sharp_constant = std::pow(p / (p - 1.0), p);
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    return rep;
}

State scale_state(const State& state, double lambda, const PhysParams& params) {
    require(lambda > 0.0, "scale_state: lambda must be positive");
    // Nodes of the rescaled grid satisfy lambda * x'_j = x_j, so the samples
    // map exactly; no interpolation enters.
    State out;
    out.grid = make_grid(state.grid->L / lambda, state.grid->N);
    out.t = state.t / (lambda * lambda);
    out.values = state.values;
    const double amp = std::pow(lambda, (2.0 - params.b) / params.alpha);
    for (auto& v : out.values) v *= amp;
    return out;
}

State interaction_picture(const State& state) {
    State v = free_propagate(state, -state.t);
    v.t = state.t;
    return v;
}

namespace {

const State& state_at(const Trajectory& traj, double t) {
    double dt = std::abs(traj.schedule.dt);
    for (const auto& st : traj.states)
        if (std::abs(st.t - t) <= 0.5 * dt) return st;
    throw SpecError("scattering_report: no stored state near t=" + std::to_string(t));
}

}  // namespace

ScatteringReport scattering_report(const Trajectory& traj,
                                   const std::vector<double>& window, double tol) {
    require(window.size() >= 2, "scattering_report: window needs at least 2 times");
    ScatteringReport rep;
    rep.tol = tol;
    rep.times = window;

    std::vector<State> v;
    for (double t : window) {
        const State& u = state_at(traj, t);
        State vi = free_propagate(u, -u.t);
        vi.t = u.t;
        v.push_back(std::move(vi));
    }
    for (size_t i = 0; i + 1 < v.size(); ++i)
        rep.residuals.push_back(h1_norm_of_diff(v[i + 1], v[i]));

    rep.u_plus = v.back();
    // u_plus carries t = T as metadata but is the t = 0 free profile; push it
    // forward by T and compare against u(T).
    const State& uT = state_at(traj, window.back());
    State forward = rep.u_plus;
    forward.t = 0.0;
    forward = free_propagate(forward, uT.t);
    rep.final_mismatch = h1_norm_of_diff(uT, forward);

    bool ok = rep.residuals.size() >= 3;
    if (ok) {
        size_t n = rep.residuals.size();
        for (size_t i = n - 3; i < n; ++i) ok = ok && rep.residuals[i] < tol;
        // slack covers roundoff-level jitter only; genuine residual growth
        // (e.g. radiation reflected off the wall re-entering the weighted
        // region) must fail the monotonicity test
        for (size_t i = n - 2; i < n; ++i)
            ok = ok && rep.residuals[i] <= rep.residuals[i - 1] + 1e-12;
    } else {
        double last = rep.residuals.back();
        ok = last < tol;
    }
    rep.scattered = ok;
    return rep;
}

WaveOperatorReport wave_operator_roundtrip(const State& phi, double T_back,
                                           const Schedule& schedule,
                                           const PhysParams& params,
                                           bool linear_only) {
    require(T_back > 0.0, "wave_operator_roundtrip: T_back must be positive");
    const double dt = schedule.dt;
    const long steps = static_cast<long>(std::llround(T_back / dt));
    require(std::abs(steps * dt - T_back) < 1e-9,
            "wave_operator_roundtrip: dt must divide T_back");

    PotentialWeights weights = potential_weight(phi.grid, params.b);
    auto step = [&](State& u, double h) {
        u = linear_only ? free_propagate(u, h) : strang_step(u, h, params, weights);
    };

    State u = free_propagate(phi, T_back);
    for (long s = 0; s < steps; ++s) step(u, -dt);
    u.t = 0.0;
    WaveOperatorReport rep;
    rep.u0 = u;
    rep.mass_mismatch = std::abs(mass(u) - mass(phi));

    // Forward again, tracking the mismatch against the free flow over the
    // final 10% of the horizon.
    const long window_start = steps - std::max<long>(1, steps / 10);
    const int stride = std::max(1, schedule.output_every);
    double sup = 0.0;
    for (long s = 1; s <= steps; ++s) {
        step(u, dt);
        u.t = s * dt;
        if (s >= window_start && (s % stride == 0 || s == steps)) {
            State lin = free_propagate(phi, u.t);
            sup = std::max(sup, h1_norm_of_diff(u, lin));
        }
    }
    rep.mismatch = sup;
    return rep;
}

SmallDataReport small_data_certificate(const State& u0, const Trajectory& traj,
                                       const std::vector<AdmissiblePair>& pairs) {
    require(!traj.states.empty(),
            "small_data_certificate: trajectory stores no full states");
    for (const auto& p : pairs)
        require(std::abs(p.s - traj.params.s_c) < 1e-12,
                "small_data_certificate: pair regularity does not match s_c");

    EvolveOptions lin_opts;
    lin_opts.linear_only = true;
    for (const auto& st : traj.states) lin_opts.store_at_times.push_back(st.t);
    Trajectory lin = evolve(u0, traj.schedule, traj.params, lin_opts);

    SmallDataReport rep;
    rep.pairs = pairs;
    rep.max_ratio = 0.0;
    for (const auto& p : pairs) {
        double nl = strichartz_norm(traj, p);
        double li = strichartz_norm(lin, p);
        rep.nonlinear_norms.push_back(nl);
        rep.linear_norms.push_back(li);
        double ratio = (nl == 0.0 && li == 0.0) ? 0.0 : nl / li;
        rep.max_ratio = std::max(rep.max_ratio, ratio);
    }
    rep.passes = rep.max_ratio <= 2.0;
    return rep;
}

}  // namespace inls
