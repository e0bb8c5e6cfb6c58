// Configuration, persistence, and the packaged experiment drivers.
#pragma once

#include <cstdint>
#include <iosfwd>

#include "inls/analysis.hpp"

namespace inls {

struct RunConfig {
    double L = 40.0;
    int N = 4096;
    double alpha = 4.0;
    double b = 0.5;
    Schedule schedule;
    InitialSpec initial;
    double local_a1 = -1.0;
    double local_a2 = 1.0;

    // experiment-specific
    std::string experiment = "evolve";
    std::vector<double> dt_list;       // convergence
    double t_final = 1.0;              // convergence
    int hardy_samples = 200;           // hardy
    std::vector<double> p_values{1.5, 2.0, 3.0};
    std::vector<double> window;        // scatter
    double scatter_tol = 1e-2;
    std::vector<double> alpha_values;  // sweep
    std::vector<double> b_values;

    std::string out_dir = ".";
    std::uint64_t seed = 0;
    int workers = 1;
    bool linear_only = false;
};

// Strict JSON parsing: unknown keys or out-of-range values throw SpecError
// before any computation.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Checkpoint file: "INLS" magic, u32 LE version, u32 LE metadata length,
// metadata JSON (grid, params placeholderless: L, N, t), then raw little-
// endian f64 (re, im) pairs for the N-1 interior values.
void save_checkpoint(const State& state, const std::string& path);
State load_checkpoint(const std::string& path);

// CSV header, fixed: t,mass,e_kin,e_pot,e_total,h1,hsc,l2_local,linf_local,morawetz
void write_csv(const Trajectory& traj, std::ostream& os);
void write_csv(const Trajectory& traj, const std::string& path);

// Dispatches on config.experiment. Returns 0 on success, 2 on config errors,
// 3 on numeric faults; writes observables CSV / report JSON under out_dir.
int run_experiment(const RunConfig& config);

}  // namespace inls
