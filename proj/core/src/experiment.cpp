#include "gcsim/experiment.hpp"

#include "gcsim/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gcsim {
namespace {

void put_number(std::ostream& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    out << buf;
}

void put_field(std::ostream& out, const std::optional<double>& v) {
    out << ',';
    if (v) put_number(out, *v);
}

void put_metric_fields(std::ostream& out, const DayMetrics& m) {
    put_field(out, m.mean_energy);
    put_field(out, m.genetic_opt);
    put_field(out, m.memetic_opt);
    put_field(out, m.breed_time);
    put_field(out, m.learn_time);
    put_field(out, m.social_time);
    put_field(out, m.genome_breed);
    put_field(out, m.genome_learn);
    put_field(out, m.genome_social);
    put_field(out, m.young_activity);
    put_field(out, m.old_activity);
}

// Member pointers for the averaged optional fields.
constexpr std::optional<double> DayMetrics::*kMeanFields[] = {
    &DayMetrics::mean_energy,  &DayMetrics::genetic_opt,  &DayMetrics::memetic_opt,   &DayMetrics::breed_time,
    &DayMetrics::learn_time,   &DayMetrics::social_time,  &DayMetrics::genome_breed,  &DayMetrics::genome_learn,
    &DayMetrics::genome_social, &DayMetrics::young_activity, &DayMetrics::old_activity,
};

void snapshot(const World& w, std::vector<AgentSnapshot>& out) {
    for (const Agent& a : w.agents()) {
        out.push_back(AgentSnapshot{w.day(), a.id, a.age, a.energy, a.site, a.memome.size(), a.memome.best_fitness()});
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void prepare_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());
}

}  // namespace

RunArtifacts run_simulation(const Config& cfg, std::uint64_t seed, const RunOptions& options) {
    cfg.validate();
    RunArtifacts art;
    art.result.seed = seed;
    art.result.mode = cfg.world.mode;

    World world(cfg.world, seed);
    if (options.dump_network) {
        std::ostringstream dump;
        world.network().write_dump(dump);
        art.network_dump = dump.str();
    }

    CollapseTracker collapse;
    auto record = [&] {
        art.result.series.push_back(collect_metrics(world, cfg.age_split));
        if (options.snapshot_every && world.day() % options.snapshot_every == 0) snapshot(world, art.snapshots);
        collapse.check(world);
    };

    record();
    while (!collapse.collapse_day() && world.day() < cfg.max_days) {
        world.live_day();
        record();
        if (collapse.collapse_day()) break;
        world.prepare_next_day();
    }
    art.result.collapse_day = collapse.collapse_day();
    return art;
}

std::vector<AggregateDay> aggregate_runs(const std::vector<RunArtifacts>& runs) {
    std::size_t days = 0;
    for (const auto& r : runs) days = std::max(days, r.result.series.size());
    std::vector<AggregateDay> out;
    out.reserve(days);
    for (std::size_t d = 0; d < days; ++d) {
        AggregateDay agg;
        agg.day = d;
        agg.mean.day = d;
        double population = 0.0;
        std::array<double, std::size(kMeanFields)> sums{};
        std::array<std::size_t, std::size(kMeanFields)> counts{};
        for (const auto& r : runs) {
            if (d >= r.result.series.size()) continue;
            const DayMetrics& m = r.result.series[d];
            if (m.population == 0) continue;
            ++agg.runs_alive;
            population += static_cast<double>(m.population);
            for (std::size_t f = 0; f < std::size(kMeanFields); ++f) {
                if (const auto& v = m.*kMeanFields[f]) {
                    sums[f] += *v;
                    ++counts[f];
                }
            }
        }
        if (agg.runs_alive > 0) {
            // Mean population over surviving runs, rounded to the nearest agent.
            agg.mean.population =
                static_cast<std::size_t>(population / static_cast<double>(agg.runs_alive) + 0.5);
        }
        for (std::size_t f = 0; f < std::size(kMeanFields); ++f) {
            if (counts[f] > 0) agg.mean.*kMeanFields[f] = sums[f] / static_cast<double>(counts[f]);
        }
        out.push_back(agg);
    }
    return out;
}

BatchResult run_batch(const Config& cfg, const RunOptions& options) {
    cfg.validate();
    BatchResult batch;
    batch.mode = cfg.world.mode;
    batch.base_seed = cfg.base_seed;
    batch.runs.resize(cfg.runs);

    std::size_t workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, cfg.runs);

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(cfg.runs);
    auto work = [&] {
        for (std::size_t i = next++; i < cfg.runs; i = next++) {
            try {
                batch.runs[i] = run_simulation(cfg, cfg.base_seed + i, options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::size_t collapsed = 0;
    for (const auto& r : batch.runs) collapsed += r.result.collapse_day.has_value();
    batch.collapse_fraction = static_cast<double>(collapsed) / static_cast<double>(cfg.runs);
    batch.aggregate = aggregate_runs(batch.runs);
    return batch;
}

void write_run_csv(const RunResult& result, std::ostream& out) {
    out << kRunCsvHeader << '\n';
    for (const DayMetrics& m : result.series) {
        out << m.day << ',' << m.population;
        put_metric_fields(out, m);
        out << '\n';
    }
}

void write_batch_csv(const BatchResult& batch, std::ostream& out) {
    out << kBatchCsvHeader << '\n';
    for (const AggregateDay& a : batch.aggregate) {
        out << a.day << ',' << a.runs_alive << ',';
        if (a.runs_alive > 0) out << a.mean.population;
        put_metric_fields(out, a.mean);
        out << '\n';
    }
}

void write_summary(const BatchResult& batch, std::ostream& out) {
    std::size_t collapsed = 0;
    for (const auto& r : batch.runs) collapsed += r.result.collapse_day.has_value();
    out << "mode=" << to_string(batch.mode) << '\n';
    out << "runs=" << batch.runs.size() << '\n';
    out << "base_seed=" << batch.base_seed << '\n';
    out << "collapsed_runs=" << collapsed << '\n';
    out << "collapse_fraction=";
    put_number(out, batch.collapse_fraction);
    out << '\n';
    for (std::size_t i = 0; i < batch.runs.size(); ++i) {
        const auto& r = batch.runs[i].result;
        out << "run_" << i << ": seed=" << r.seed << " days=" << (r.series.empty() ? 0 : r.series.back().day)
            << " collapse_day=";
        if (r.collapse_day) out << *r.collapse_day;
        else out << "none";
        out << '\n';
    }
}

void emit_csv(const BatchResult& batch, const std::filesystem::path& out_dir) {
    prepare_dir(out_dir);
    for (std::size_t i = 0; i < batch.runs.size(); ++i) {
        const RunArtifacts& art = batch.runs[i];
        const std::string suffix = std::to_string(i);
        std::ostringstream run;
        write_run_csv(art.result, run);
        write_file(out_dir / ("run_" + suffix + ".csv"), run.str());
        if (!art.network_dump.empty()) write_file(out_dir / ("network_" + suffix + ".txt"), art.network_dump);
        if (!art.snapshots.empty()) {
            std::ostringstream snap;
            snap << kSnapshotCsvHeader << '\n';
            for (const AgentSnapshot& s : art.snapshots) {
                snap << s.day << ',' << s.id << ',' << s.age << ',';
                put_number(snap, s.energy);
                snap << ',' << s.site << ',' << s.archive_size << ',';
                put_number(snap, s.best_fitness);
                snap << '\n';
            }
            write_file(out_dir / ("snapshot_" + suffix + ".csv"), snap.str());
        }
    }
    std::ostringstream agg;
    write_batch_csv(batch, agg);
    write_file(out_dir / "batch.csv", agg.str());
    std::ostringstream summary;
    write_summary(batch, summary);
    write_file(out_dir / "summary.txt", summary.str());
}

void emit_csv(const RunResult& result, const std::filesystem::path& out_dir) {
    prepare_dir(out_dir);
    std::ostringstream run;
    write_run_csv(result, run);
    write_file(out_dir / "run_0.csv", run.str());
}

}  // namespace gcsim
