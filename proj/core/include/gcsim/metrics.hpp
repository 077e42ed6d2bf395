#pragma once

#include "gcsim/engine.hpp"
#include "gcsim/genetics.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gcsim {

/// Population-level measurements taken once per day, after settlement and
/// before tomorrow's behaviors are chosen. Empty optionals mean "undefined"
/// (no agents, or an empty age stratum).
struct DayMetrics {
    std::uint64_t day = 0;
    std::size_t population = 0;
    std::optional<double> mean_energy;
    std::optional<double> genetic_opt;
    std::optional<double> memetic_opt;
    std::optional<double> breed_time;
    std::optional<double> learn_time;
    std::optional<double> social_time;
    std::optional<double> genome_breed;
    std::optional<double> genome_learn;
    std::optional<double> genome_social;
    std::optional<double> young_activity;
    std::optional<double> old_activity;

    bool operator==(const DayMetrics&) const = default;
};

struct RunResult {
    std::vector<DayMetrics> series;
    std::optional<std::uint64_t> collapse_day;
    std::uint64_t seed = 0;
    Mode mode = Mode::socializers;
};

/// An agent's memetic contribution: mean fitness of its current archive.
[[nodiscard]] double memetic_value(const Agent& agent);

/// Mean over agents of the mean fitness of the archive their genome develops into.
[[nodiscard]] std::optional<double> genetic_optimization(const World& w);
[[nodiscard]] std::optional<double> memetic_optimization(const World& w);

/// Fraction of (agent, step) slots with each flag set in the behavior each
/// agent executed today. Newborns that sat the day out are excluded.
[[nodiscard]] std::optional<TimeAllocation> time_allocation(const World& w);

/// Mean genome-encoded flag fractions over living agents.
[[nodiscard]] std::optional<TimeAllocation> genome_allocation(const World& w);

struct AgeActivity {
    std::optional<double> young;
    std::optional<double> old;
};

/// Activity is (breed + learn + social flags) / (3T) of today's behavior,
/// averaged over agents younger than `age_split` and over the rest.
[[nodiscard]] AgeActivity age_stratified_allocation(const World& w, std::uint64_t age_split);

[[nodiscard]] DayMetrics collect_metrics(const World& w, std::uint64_t age_split);

/// Records the first day the population is seen at zero; absorbing afterwards.
class CollapseTracker {
public:
    /// Returns the current day iff the population is zero and no collapse was recorded yet.
    std::optional<std::uint64_t> check(const World& w);
    [[nodiscard]] std::optional<std::uint64_t> collapse_day() const noexcept { return day_; }

private:
    std::optional<std::uint64_t> day_;
};

}  // namespace gcsim
