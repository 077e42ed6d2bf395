#pragma once

#include "gcsim/network.hpp"
#include "gcsim/rng.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace gcsim {

enum class ForageStrategy : std::uint8_t { conservative = 0, standard = 1, intensive = 2 };

inline constexpr std::size_t kStrategyCount = 3;

std::string_view to_string(ForageStrategy s);

struct StrategyParams {
    double yield_multiplier;
    double cost_per_step;  // energy per step of full forage time
};

/// Yield/cost pair for each foraging level.
struct StrategyTable {
    std::array<StrategyParams, kStrategyCount> levels{{{0.5, 0.2}, {1.0, 0.5}, {1.5, 1.0}}};

    [[nodiscard]] const StrategyParams& operator[](ForageStrategy s) const {
        return levels[static_cast<std::size_t>(s)];
    }
    void validate() const;
};

/// One time step of behavior: where to be, how to forage, and which of the
/// three social activities to spend time on.
struct Gene {
    SiteId site = 0;
    ForageStrategy strategy = ForageStrategy::standard;
    bool breed = false;
    bool learn = false;
    bool social = false;

    [[nodiscard]] int flags_set() const noexcept { return int{breed} + int{learn} + int{social}; }
    bool operator==(const Gene&) const = default;
};

/// True iff every consecutive pair stays put or follows an edge.
[[nodiscard]] bool is_valid_path(std::span<const Gene> genes, const SiteNetwork& net);

/// One random-walk move: stay, or hop to a neighbor, each with equal weight.
[[nodiscard]] SiteId random_step(const SiteNetwork& net, SiteId from, Rng& rng);

/// Gene with uniform strategy and each flag set with probability `flag_probability`.
[[nodiscard]] Gene random_gene(SiteId site, double flag_probability, Rng& rng);

struct MutationRates {
    double point = 0.02;
    double path = 0.02;
};

/// Shared mutation kernel for genomes and memeplexes.
///
/// Each gene, with probability `rates.point`, gets a fresh strategy and each of
/// its flags flipped with probability 1/2. Then, with probability `rates.path`,
/// one index i is picked and the sites from i onward are re-routed as a fresh
/// random walk from site(i-1) (from a resampled site when i = 0). Actions at
/// re-routed positions are kept. With `pin_start` the first site never changes.
void mutate_genes(std::vector<Gene>& genes, const SiteNetwork& net, MutationRates rates, bool pin_start,
                  Rng& rng);

}  // namespace gcsim
