// gcsim: batch runner for the gene-culture co-evolution simulator.
//
//   gcsim simulate --config run.cfg [--seed N] [--runs K] [--days D]
//                  [--mode M] [--out DIR] [--dump-network] [--snapshot-every N]
//
// Command-line flags override config file values, which override defaults.

#include "gcsim/config.hpp"
#include "gcsim/errors.hpp"
#include "gcsim/experiment.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Gene-culture co-evolution simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> days;
    std::optional<std::string> mode;
    std::string out_dir = "out";
    bool dump_network = false;
    std::uint64_t snapshot_every = 0;
    std::size_t threads = 0;

    CLI::App* simulate = app.add_subcommand("simulate", "Run a batch of simulations and write CSV metrics");
    simulate->add_option("--config", config_path, "Config file (key = value lines)")->check(CLI::ExistingFile);
    simulate->add_option("--seed", seed, "Base seed; run i uses seed + i");
    simulate->add_option("--runs", runs, "Number of independent runs")->check(CLI::PositiveNumber);
    simulate->add_option("--days", days, "Maximum days per run");
    simulate->add_option("--mode", mode, "basic | breeders | lamarck | socializers");
    simulate->add_option("--out", out_dir, "Output directory")->capture_default_str();
    simulate->add_flag("--dump-network", dump_network, "Write network_<i>.txt per run");
    simulate->add_option("--snapshot-every", snapshot_every, "Write per-agent rows every N days");
    simulate->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    CLI11_PARSE(app, argc, argv);

    try {
        gcsim::Config cfg = config_path.empty() ? gcsim::Config{} : gcsim::load_config(config_path);
        if (seed) cfg.base_seed = *seed;
        if (runs) cfg.runs = *runs;
        if (days) cfg.max_days = *days;
        if (mode) {
            const auto m = gcsim::parse_mode(*mode);
            if (!m) throw gcsim::ConfigError("--mode: unknown mode '" + *mode + "'");
            cfg.world.mode = *m;
        }
        cfg.validate();

        gcsim::RunOptions options;
        options.dump_network = dump_network;
        options.snapshot_every = snapshot_every;
        options.threads = threads;

        const gcsim::BatchResult batch = gcsim::run_batch(cfg, options);
        gcsim::emit_csv(batch, out_dir);

        std::size_t collapsed = 0;
        for (const auto& r : batch.runs) collapsed += r.result.collapse_day.has_value();
        std::cout << "mode=" << gcsim::to_string(cfg.world.mode) << " runs=" << cfg.runs
                  << " collapsed=" << collapsed << " collapse_fraction=" << batch.collapse_fraction
                  << " out=" << out_dir << '\n';
    } catch (const std::exception& e) {
        std::cerr << "gcsim: error: " << e.what() << '\n';
        return EXIT_FAILURE;
    }
    return EXIT_SUCCESS;
}
