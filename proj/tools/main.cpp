// inls command-line driver.
#include <CLI11.hpp>

#include <iostream>

#include "inls/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for the 1-D defocusing inhomogeneous NLS with odd data"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    int workers = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool linear_only = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", out_dir, "output directory (overrides config)");
        sub->add_option("--workers", workers, "worker threads for sweep");
        sub->add_option("--seed", seed, "RNG seed for randomized suites")
            ->each([&](const std::string&) { seed_set = true; });
        sub->add_flag("--linear-only", linear_only,
                      "test hook: disable the nonlinearity");
    };

    const char* subs[] = {"evolve", "convergence", "hardy", "scatter", "sweep"};
    for (const char* name : subs) add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);

    try {
        inls::RunConfig config = inls::load_config(config_path);
        config.experiment = app.get_subcommands().front()->get_name();
        if (!out_dir.empty()) config.out_dir = out_dir;
        if (workers > 0) config.workers = workers;
        if (seed_set) config.seed = seed;
        if (linear_only) config.linear_only = true;
        return inls::run_experiment(config);
    } catch (const inls::SpecError& e) {
        std::cerr << "{\"error\":\"config\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"runtime\",\"message\":\"" << e.what() << "\"}\n";
        return 3;
    }
}
