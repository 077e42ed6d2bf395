#pragma once

#include "gcsim/gene.hpp"

namespace gcsim {

/// Energy accounting constants shared by fitness evaluation and the world loop.
struct EconomyParams {
    double harvest_rate = 0.06;    // fraction of stock taken per step at full time, multiplier 1
    double tau = 1.0 / 3.0;        // time fraction consumed by each activity flag
    double c_move = 1.0;           // energy per edge traversed
    double metabolic = 2.0;        // energy per day
    double breed_threshold = 100.0;
    double child_endowment = 50.0;
    double initial_energy = 50.0;
    StrategyTable strategies;

    /// Throws ConfigError when a field is outside its domain.
    void validate() const;

    /// Fraction of a step left for foraging after the gene's activities.
    [[nodiscard]] double forage_time(const Gene& g) const noexcept {
        const double t = 1.0 - tau * g.flags_set();
        return t > 0.0 ? t : 0.0;
    }
};

}  // namespace gcsim
