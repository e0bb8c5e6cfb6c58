#include "inls/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace inls {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw SpecError("config: unknown key '" + it.key() + "' in " + where);
    }
}

InitialKind parse_kind(const std::string& s) {
    if (s == "odd_gaussian") return InitialKind::odd_gaussian;
    if (s == "sine_packet") return InitialKind::sine_packet;
    if (s == "sine_mode") return InitialKind::sine_mode;
    if (s == "file") return InitialKind::file;
    throw SpecError("config: unknown initial kind '" + s + "'");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SpecError(std::string("config: parse failure: ") + e.what());
    }
    RunConfig c;
    check_keys(j, "top level",
               {"grid", "params", "time", "initial", "local_interval", "experiment",
                "experiment_options", "out_dir", "seed", "workers", "linear_only"});

    if (j.contains("grid")) {
        check_keys(j["grid"], "grid", {"L", "N"});
        c.L = j["grid"].value("L", c.L);
        c.N = j["grid"].value("N", c.N);
    }
    if (j.contains("params")) {
        check_keys(j["params"], "params", {"alpha", "b"});
        c.alpha = j["params"].value("alpha", c.alpha);
        c.b = j["params"].value("b", c.b);
    }
    if (j.contains("time")) {
        check_keys(j["time"], "time", {"dt", "t_max", "output_every", "checkpoint_every"});
        c.schedule.dt = j["time"].value("dt", c.schedule.dt);
        c.schedule.t_max = j["time"].value("t_max", c.schedule.t_max);
        c.schedule.output_every = j["time"].value("output_every", c.schedule.output_every);
        c.schedule.checkpoint_every =
            j["time"].value("checkpoint_every", c.schedule.checkpoint_every);
    }
    if (j.contains("initial")) {
        check_keys(j["initial"], "initial",
                   {"kind", "amplitude", "width", "center", "wavenumber", "mode", "path"});
        c.initial.kind = parse_kind(j["initial"].value("kind", "odd_gaussian"));
        c.initial.amplitude = j["initial"].value("amplitude", 1.0);
        c.initial.width = j["initial"].value("width", 1.0);
        c.initial.center = j["initial"].value("center", 0.0);
        c.initial.wavenumber = j["initial"].value("wavenumber", 1.0);
        c.initial.mode = j["initial"].value("mode", 1);
        c.initial.path = j["initial"].value("path", "");
    }
    if (j.contains("local_interval")) {
        auto iv = j["local_interval"];
        require(iv.is_array() && iv.size() == 2, "config: local_interval must be [a1, a2]");
        c.local_a1 = iv[0].get<double>();
        c.local_a2 = iv[1].get<double>();
    }
    c.experiment = j.value("experiment", "evolve");
    if (j.contains("experiment_options")) {
        const json& o = j["experiment_options"];
        if (c.experiment == "convergence") {
            check_keys(o, "experiment_options", {"dt_list", "t_final"});
            c.dt_list = o.value("dt_list", c.dt_list);
            c.t_final = o.value("t_final", c.t_final);
        } else if (c.experiment == "hardy") {
            check_keys(o, "experiment_options", {"samples", "p_values"});
            c.hardy_samples = o.value("samples", c.hardy_samples);
            c.p_values = o.value("p_values", c.p_values);
        } else if (c.experiment == "scatter") {
            check_keys(o, "experiment_options", {"window", "tol"});
            c.window = o.value("window", c.window);
            c.scatter_tol = o.value("tol", c.scatter_tol);
        } else if (c.experiment == "sweep") {
            check_keys(o, "experiment_options", {"alpha_values", "b_values"});
            c.alpha_values = o.value("alpha_values", c.alpha_values);
            c.b_values = o.value("b_values", c.b_values);
        } else if (c.experiment == "evolve") {
            check_keys(o, "experiment_options", {});
        } else {
            throw SpecError("config: unknown experiment '" + c.experiment + "'");
        }
    }
    c.out_dir = j.value("out_dir", c.out_dir);
    c.seed = j.value("seed", c.seed);
    c.workers = j.value("workers", c.workers);
    c.linear_only = j.value("linear_only", c.linear_only);

    // validate ranges before any computation
    (void)make_grid(c.L, c.N);
    (void)make_params(c.alpha, c.b);
    require(c.schedule.dt > 0.0, "config: time.dt must be positive");
    require(c.schedule.t_max >= 0.0, "config: time.t_max must be nonnegative");
    require(c.workers >= 1, "config: workers must be at least 1");
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// checkpoints

namespace {

constexpr char kMagic[4] = {'I', 'N', 'L', 'S'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

static_assert(sizeof(double) == 8);

void put_f64(std::ostream& os, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

}  // namespace

void save_checkpoint(const State& state, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    require(os.good(), "save_checkpoint: cannot open " + path);
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    json meta;
    meta["L"] = state.grid->L;
    meta["N"] = state.grid->N;
    meta["t"] = state.t;
    std::string m = meta.dump();
    put_u32(os, static_cast<std::uint32_t>(m.size()));
    os.write(m.data(), static_cast<std::streamsize>(m.size()));
    for (const auto& v : state.values) {
        put_f64(os, v.real());
        put_f64(os, v.imag());
    }
    require(os.good(), "save_checkpoint: write failure on " + path);
}

State load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    require(is.good(), "load_checkpoint: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    require(is.good() && std::memcmp(magic, kMagic, 4) == 0,
            "load_checkpoint: bad magic bytes in " + path);
    std::uint32_t version = get_u32(is);
    require(version == kVersion, "load_checkpoint: unsupported format version");
    std::uint32_t mlen = get_u32(is);
    std::string m(mlen, '\0');
    is.read(m.data(), mlen);
    require(is.good(), "load_checkpoint: truncated metadata");
    json meta;
    try {
        meta = json::parse(m);
    } catch (const json::exception&) {
        throw SpecError("load_checkpoint: corrupt metadata JSON");
    }
    require(meta.contains("L") && meta.contains("N") && meta.contains("t"),
            "load_checkpoint: incomplete metadata");
    State st;
    st.grid = make_grid(meta["L"].get<double>(), meta["N"].get<int>());
    st.t = meta["t"].get<double>();
    st.values.resize(st.grid->interior_count());
    for (auto& v : st.values) {
        double re = get_f64(is);
        double im = get_f64(is);
        v = Complex(re, im);
    }
    require(is.good(), "load_checkpoint: truncated value data");
    return st;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string f17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(const Trajectory& traj, std::ostream& os) {
    os << "t,mass,e_kin,e_pot,e_total,h1,hsc,l2_local,linf_local,morawetz\n";
    for (const auto& s : traj.samples) {
        os << f17(s.t) << ',' << f17(s.mass) << ',' << f17(s.e_kin) << ','
           << f17(s.e_pot) << ',' << f17(s.e_total) << ',' << f17(s.h1) << ','
           << f17(s.hsc) << ',' << f17(s.l2_local) << ',' << f17(s.linf_local)
           << ',' << f17(s.morawetz) << '\n';
    }
}

void write_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream os(path);
    require(os.good(), "write_csv: cannot open " + path);
    write_csv(traj, os);
}

// ---------------------------------------------------------------------------
// drivers

namespace {

json flags_json(const Trajectory& traj) {
    json f;
    f["wall_alarm"] = traj.wall_alarm;
    f["origin_resolution_limited"] = traj.origin_limited;
    f["linear_only"] = traj.linear_only;
    return f;
}

void write_json(const json& j, const fs::path& path) {
    std::ofstream os(path);
    require(os.good(), "cannot open " + path.string());
    os << j.dump(2) << '\n';
}

Trajectory run_evolve(const RunConfig& c, const fs::path& dir) {
    auto grid = make_grid(c.L, c.N);
    PhysParams params = make_params(c.alpha, c.b);
    State u0 = sample_initial(c.initial, grid);
    EvolveOptions opts;
    opts.linear_only = c.linear_only;
    opts.local_a1 = c.local_a1;
    opts.local_a2 = c.local_a2;
    if (c.schedule.checkpoint_every > 0)
        opts.on_checkpoint = [&dir](const State& st, int step) {
            save_checkpoint(st, (dir / ("checkpoint_" + std::to_string(step) + ".bin")).string());
        };
    return evolve(u0, c.schedule, params, opts);
}

int drive_evolve(const RunConfig& c, const fs::path& dir) {
    Trajectory traj = run_evolve(c, dir);
    write_csv(traj, (dir / "observables.csv").string());
    json rep;
    rep["experiment"] = "evolve";
    rep["flags"] = flags_json(traj);
    rep["samples"] = traj.samples.size();
    const auto& last = traj.samples.back();
    const auto& first = traj.samples.front();
    rep["final_time"] = last.t;
    rep["mass_drift"] =
        first.mass > 0.0 ? std::abs(last.mass - first.mass) / first.mass : 0.0;
    rep["energy_drift"] =
        first.e_total > 0.0 ? std::abs(last.e_total - first.e_total) / first.e_total : 0.0;
    write_json(rep, dir / "report.json");
    return 0;
}

int drive_convergence(const RunConfig& c, const fs::path& dir) {
    require(!c.dt_list.empty(), "config: convergence requires experiment_options.dt_list");
    auto grid = make_grid(c.L, c.N);
    PhysParams params = make_params(c.alpha, c.b);
    State u0 = sample_initial(c.initial, grid);
    ConvergenceResult res =
        convergence_order(u0, params, c.t_final, c.dt_list, c.linear_only);
    json rep;
    rep["experiment"] = "convergence";
    rep["dt_list"] = c.dt_list;
    rep["errors"] = res.errors;
    rep["exact"] = res.exact;
    rep["order"] = res.order;
    write_json(rep, dir / "report.json");
    return 0;
}

InitialSpec random_packet(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> amp(0.2, 2.0), width(0.5, 2.0),
        center(1.0, 5.0), k(0.5, 3.0);
    InitialSpec s;
    s.kind = InitialKind::sine_packet;
    s.amplitude = amp(rng);
    s.width = width(rng);
    s.center = center(rng);
    s.wavenumber = k(rng);
    return s;
}

int drive_hardy(const RunConfig& c, const fs::path& dir) {
    auto grid = make_grid(c.L, c.N);
    std::mt19937_64 rng(c.seed);
    json rows = json::array();
    bool all_ok = true;
    double worst = 0.0;
    for (int i = 0; i < c.hardy_samples; ++i) {
        InitialSpec spec = random_packet(rng);
        State u = sample_initial(spec, grid);
        for (double p : c.p_values) {
            HardyReport r = hardy_ratio(u, p);
            bool ok = r.ratio <= r.sharp_constant;
            all_ok = all_ok && ok;
            worst = std::max(worst, r.ratio / r.sharp_constant);
            rows.push_back({{"sample", i},
                            {"p", p},
                            {"lhs", r.lhs},
                            {"rhs", r.rhs},
                            {"ratio", r.ratio},
                            {"sharp_constant", r.sharp_constant},
                            {"within_sharp", ok}});
        }
    }
    json rep;
    rep["experiment"] = "hardy";
    rep["seed"] = c.seed;
    rep["samples"] = c.hardy_samples;
    rep["p_values"] = c.p_values;
    rep["all_within_sharp"] = all_ok;
    rep["worst_ratio_fraction"] = worst;
    rep["results"] = rows;
    write_json(rep, dir / "report.json");
    return 0;
}

int drive_scatter(const RunConfig& c, const fs::path& dir) {
    require(!c.window.empty(), "config: scatter requires experiment_options.window");
    RunConfig cc = c;
    cc.schedule.t_max = std::max(
        cc.schedule.t_max, *std::max_element(c.window.begin(), c.window.end()));
    auto grid = make_grid(cc.L, cc.N);
    PhysParams params = make_params(cc.alpha, cc.b);
    State u0 = sample_initial(cc.initial, grid);
    EvolveOptions opts;
    opts.linear_only = cc.linear_only;
    opts.local_a1 = cc.local_a1;
    opts.local_a2 = cc.local_a2;
    opts.store_at_times = cc.window;
    Trajectory traj = evolve(u0, cc.schedule, params, opts);
    write_csv(traj, (dir / "observables.csv").string());
    ScatteringReport rep = scattering_report(traj, cc.window, cc.scatter_tol);
    save_checkpoint(rep.u_plus, (dir / "u_plus.bin").string());
    json out;
    out["experiment"] = "scatter";
    out["window"] = rep.times;
    out["residuals_h1"] = rep.residuals;
    out["final_mismatch"] = rep.final_mismatch;
    out["tol"] = rep.tol;
    out["verdict"] = rep.scattered ? "scattered" : "undecided";
    out["flags"] = flags_json(traj);
    write_json(out, dir / "report.json");
    return 0;
}

int drive_sweep(const RunConfig& c, const fs::path& dir) {
    require(!c.alpha_values.empty() && !c.b_values.empty(),
            "config: sweep requires alpha_values and b_values");
    struct Job {
        RunConfig config;
        fs::path dir;
        int index;
    };
    std::vector<Job> jobs;
    int idx = 0;
    for (double a : c.alpha_values)
        for (double bb : c.b_values) {
            RunConfig rc = c;
            rc.experiment = "evolve";
            rc.alpha = a;
            rc.b = bb;
            char name[32];
            std::snprintf(name, sizeof name, "run_%03d", idx);
            jobs.push_back({rc, dir / name, idx});
            ++idx;
        }

    std::mutex mtx;
    json summary = json::array();
    summary.get_ref<json::array_t&>().resize(jobs.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int workers = std::min<int>(c.workers, static_cast<int>(jobs.size()));
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job& job = jobs[i];
            fs::create_directories(job.dir);
            Trajectory traj = run_evolve(job.config, job.dir);
            write_csv(traj, (job.dir / "observables.csv").string());
            const auto& first = traj.samples.front();
            const auto& last = traj.samples.back();
            json row;
            row["run"] = job.index;
            row["alpha"] = job.config.alpha;
            row["b"] = job.config.b;
            row["s_c"] = make_params(job.config.alpha, job.config.b).s_c;
            row["mass_drift"] =
                first.mass > 0.0 ? std::abs(last.mass - first.mass) / first.mass : 0.0;
            row["final_linf_local"] = last.linf_local;
            row["flags"] = flags_json(traj);
            std::lock_guard<std::mutex> lock(mtx);
            summary[job.index] = row;
        }
    };
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    json rep;
    rep["experiment"] = "sweep";
    rep["runs"] = summary;
    write_json(rep, dir / "summary.json");
    return 0;
}

}  // namespace

int run_experiment(const RunConfig& config) {
    fs::path dir(config.out_dir);
    try {
        fs::create_directories(dir);
        if (config.experiment == "evolve") return drive_evolve(config, dir);
        if (config.experiment == "convergence") return drive_convergence(config, dir);
        if (config.experiment == "hardy") return drive_hardy(config, dir);
        if (config.experiment == "scatter") return drive_scatter(config, dir);
        if (config.experiment == "sweep") return drive_sweep(config, dir);
        throw SpecError("config: unknown experiment '" + config.experiment + "'");
    } catch (const NumericFault& e) {
        json err{{"error", "numeric_fault"},
                 {"message", e.what()},
                 {"last_good_time", e.last_good_time}};
        write_json(err, dir / "error.json");
        std::cerr << err.dump() << '\n';
        return 3;
    } catch (const SpecError& e) {
        json err{{"error", "config"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return 2;
    }
}

}  // namespace inls
