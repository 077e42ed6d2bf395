#pragma once

#include "gcsim/config.hpp"
#include "gcsim/metrics.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gcsim {

/// Optional per-run debugging output.
struct RunOptions {
    bool dump_network = false;
    /// Emit per-agent rows every N days (0 disables).
    std::uint64_t snapshot_every = 0;
    /// Worker threads for batches; 0 picks hardware concurrency.
    std::size_t threads = 0;
};

struct AgentSnapshot {
    std::uint64_t day = 0;
    std::uint64_t id = 0;
    std::uint64_t age = 0;
    double energy = 0.0;
    SiteId site = 0;
    std::size_t archive_size = 0;
    double best_fitness = 0.0;
};

struct RunArtifacts {
    RunResult result;
    std::string network_dump;
    std::vector<AgentSnapshot> snapshots;
};

/// Cross-run means for one day over the runs with a living population that day.
struct AggregateDay {
    std::uint64_t day = 0;
    std::size_t runs_alive = 0;
    DayMetrics mean;
};

struct BatchResult {
    std::vector<RunArtifacts> runs;
    double collapse_fraction = 0.0;
    std::vector<AggregateDay> aggregate;
    Mode mode = Mode::socializers;
    std::uint64_t base_seed = 0;
};

/// Builds the world, then steps days until max_days or collapse, recording
/// metrics for day 0 and after every day.
[[nodiscard]] RunArtifacts run_simulation(const Config& cfg, std::uint64_t seed, const RunOptions& options = {});

/// Runs cfg.runs independent simulations with seeds base_seed + i. Runs may
/// execute in parallel; results are ordered by run index.
[[nodiscard]] BatchResult run_batch(const Config& cfg, const RunOptions& options = {});

[[nodiscard]] std::vector<AggregateDay> aggregate_runs(const std::vector<RunArtifacts>& runs);

inline constexpr const char* kRunCsvHeader =
    "day,population,mean_energy,genetic_opt,memetic_opt,breed_time,learn_time,social_time,"
    "genome_breed,genome_learn,genome_social,young_activity,old_activity";
inline constexpr const char* kBatchCsvHeader =
    "day,runs_alive,population,mean_energy,genetic_opt,memetic_opt,breed_time,learn_time,social_time,"
    "genome_breed,genome_learn,genome_social,young_activity,old_activity";
inline constexpr const char* kSnapshotCsvHeader = "day,id,age,energy,site,archive_size,best_fitness";

void write_run_csv(const RunResult& result, std::ostream& out);
void write_batch_csv(const BatchResult& batch, std::ostream& out);
void write_summary(const BatchResult& batch, std::ostream& out);

/// Writes run_<i>.csv, batch.csv and summary.txt (plus network_<i>.txt and
/// snapshot_<i>.csv when captured) into `out_dir`, creating it if needed.
/// Failures raise std::runtime_error naming the path.
void emit_csv(const BatchResult& batch, const std::filesystem::path& out_dir);

/// Writes a single run as run_0.csv.
void emit_csv(const RunResult& result, const std::filesystem::path& out_dir);

}  // namespace gcsim
