#include "inls/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace inls {

State strang_step(const State& state, double dt, const PhysParams& params,
                  const PotentialWeights& weights, StepFlags* flags) {
    State half = phase_step(state, 0.5 * dt, params, weights, flags);
    State drifted = free_propagate(half, dt);
    State out = phase_step(drifted, 0.5 * dt, params, weights, flags);
    out.t = state.t + dt;
    return out;
}

State strang_step(const State& state, double dt, const PhysParams& params) {
    return strang_step(state, dt, params, potential_weight(state.grid, params.b));
}

ObservableSample observe(const State& state, const PhysParams& params,
                         const PotentialWeights& weights, double local_a1,
                         double local_a2) {
    ObservableSample s;
    s.t = state.t;
    SpectralState sp = to_spectral(state);
    s.mass = mass(state);
    s.e_kin = 0.5 * std::pow(sobolev_norm(sp, 1.0, NormKind::homogeneous), 2);
    s.e_pot = potential_energy(state, params, weights);
    s.e_total = s.e_kin + s.e_pot;
    s.h1 = sobolev_norm(sp, 1.0, NormKind::inhomogeneous);
    s.hsc = sobolev_norm(sp, std::max(0.0, params.s_c), NormKind::homogeneous);
    LocalNorms ln = local_norms(state, local_a1, local_a2);
    s.l2_local = ln.l2;
    s.linf_local = ln.linf;
    s.morawetz = morawetz(state);
    return s;
}

namespace {

bool near_wall_alarm(const State& state, double total_mass) {
    const int n = state.grid->interior_count();
    double tail = 0.0;
    for (int j = std::max(0, n - 5); j < n; ++j)
        tail += std::norm(state.values[j]);
    tail *= 2.0 * state.grid->dx;
    return total_mass > 0.0 && tail > 1e-8 * total_mass;
}

bool wants_state_at(const EvolveOptions& opts, double t, double dt) {
    for (double tw : opts.store_at_times)
        if (std::abs(t - tw) <= 0.5 * std::abs(dt)) return true;
    return false;
}

}  // namespace

Trajectory evolve(const State& initial, const Schedule& schedule,
                  const PhysParams& params, const EvolveOptions& opts) {
    require(schedule.dt != 0.0, "evolve: dt must be nonzero");
    require(schedule.t_max >= 0.0, "evolve: t_max must be nonnegative");
    require(schedule.output_every >= 0 && schedule.checkpoint_every >= 0,
            "evolve: strides must be nonnegative");
    require(initial.finite(), "evolve: non-finite initial state");

    PotentialWeights weights = potential_weight(initial.grid, params.b);
    StepFlags flags;

    Trajectory traj;
    traj.grid = initial.grid;
    traj.params = params;
    traj.schedule = schedule;
    traj.linear_only = opts.linear_only;

    const double dt = schedule.dt;  // negative dt evolves backwards
    const long steps =
        static_cast<long>(std::ceil(schedule.t_max / std::abs(dt) - 1e-12));
    const int stride = std::max(1, schedule.output_every);

    State u = initial;
    double m0 = mass(u);

    auto sample = [&](const State& st, long sample_index) {
        traj.samples.push_back(
            observe(st, params, weights, opts.local_a1, opts.local_a2));
        bool store = opts.store_state_every > 0 &&
                     sample_index % opts.store_state_every == 0;
        if (store || wants_state_at(opts, st.t, dt)) traj.states.push_back(st);
        if (near_wall_alarm(st, m0)) traj.wall_alarm = true;
    };

    long sample_index = 0;
    sample(u, sample_index++);

    for (long step = 1; step <= steps; ++step) {
        if (opts.linear_only) {
            u = free_propagate(u, dt);
        } else {
            u = strang_step(u, dt, params, weights, &flags);
        }
        u.t = initial.t + step * dt;  // avoid accumulated time roundoff
        if (!u.finite())
            throw NumericFault("evolve: NaN detected, last good time t=" +
                                   std::to_string(initial.t + (step - 1) * dt),
                               initial.t + (step - 1) * dt);
        if (step % stride == 0 || step == steps) sample(u, sample_index++);
        if (schedule.checkpoint_every > 0 && opts.on_checkpoint &&
            step % schedule.checkpoint_every == 0)
            opts.on_checkpoint(u, static_cast<int>(step));
    }

    traj.origin_limited = flags.origin_limited;
    return traj;
}

ConvergenceResult convergence_order(const State& initial, const PhysParams& params,
                                    double t_final,
                                    const std::vector<double>& dt_list,
                                    bool linear_only) {
    require(dt_list.size() >= 3, "convergence_order: need at least 3 step sizes");
    for (size_t i = 0; i < dt_list.size(); ++i) {
        require(dt_list[i] > 0.0, "convergence_order: step sizes must be positive");
        double ratio = t_final / dt_list[i];
        require(std::abs(ratio - std::round(ratio)) < 1e-9,
                "convergence_order: each step size must divide t_final");
        if (i > 0)
            require(dt_list[i] < dt_list[i - 1],
                    "convergence_order: step sizes must be strictly decreasing");
    }

    auto final_state = [&](double dt) {
        State u = initial;
        PotentialWeights weights = potential_weight(initial.grid, params.b);
        long steps = static_cast<long>(std::llround(t_final / dt));
        for (long s = 0; s < steps; ++s)
            u = linear_only ? free_propagate(u, dt)
                            : strang_step(u, dt, params, weights);
        return u;
    };

    State ref = final_state(dt_list.back() / 4.0);
    double ref_norm = sobolev_norm(ref, 0.0, NormKind::homogeneous);

    ConvergenceResult res;
    std::vector<double> logs_dt, logs_err;
    for (double dt : dt_list) {
        State u = final_state(dt);
        double err = 0.0;
        State diff = u;
        for (size_t j = 0; j < diff.values.size(); ++j)
            diff.values[j] -= ref.values[j];
        err = sobolev_norm(diff, 0.0, NormKind::homogeneous);
        res.errors.push_back(err);
        logs_dt.push_back(std::log(dt));
        logs_err.push_back(std::log(std::max(err, 1e-300)));
    }

    double tiny = std::max(ref_norm, 1.0) * 1e-12;
    if (*std::max_element(res.errors.begin(), res.errors.end()) < tiny) {
        res.exact = true;
        res.order = 0.0;
        return res;
    }

    // least-squares slope
    double n = static_cast<double>(logs_dt.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < logs_dt.size(); ++i) {
        sx += logs_dt[i];
        sy += logs_err[i];
        sxx += logs_dt[i] * logs_dt[i];
        sxy += logs_dt[i] * logs_err[i];
    }
    res.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return res;
}

}  // namespace inls
