#pragma once

#include "gcsim/economy.hpp"
#include "gcsim/gene.hpp"
#include "gcsim/memetics.hpp"
#include "gcsim/network.hpp"
#include "gcsim/rng.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gcsim {

/// Probability of each activity flag on freshly drawn genes.
inline constexpr double kInitialFlagProbability = 0.25;

/// A long path through the network; never executed directly, only developed
/// into memeplexes at birth.
struct Genome {
    std::vector<Gene> genes;

    [[nodiscard]] std::size_t size() const noexcept { return genes.size(); }
    bool operator==(const Genome&) const = default;
};

struct TimeAllocation {
    double breed = 0.0;
    double learn = 0.0;
    double social = 0.0;
};

[[nodiscard]] Genome random_genome(const SiteNetwork& net, std::size_t length, Rng& rng);

/// Single-point crossover restricted to indices where both parents are at the
/// same site, so the child is a valid path. Falls back to a copy of `a`.
[[nodiscard]] Genome recombine(const Genome& a, const Genome& b, Rng& rng);

[[nodiscard]] Genome mutate_genome(const Genome& g, const SiteNetwork& net, MutationRates rates, Rng& rng);

/// Offers every length-T window of the genome to an empty archive.
[[nodiscard]] Memome develop(const Genome& g, std::size_t day_length, const SiteNetwork& net,
                             const EconomyParams& econ);

/// Mean archived fitness of develop(g). Constant over an agent's life.
[[nodiscard]] double genetic_value(const Genome& g, std::size_t day_length, const SiteNetwork& net,
                                   const EconomyParams& econ);

[[nodiscard]] TimeAllocation genome_time_allocation(const Genome& g);

/// Fraction of genes carrying each flag; zeros for an empty span.
[[nodiscard]] TimeAllocation time_allocation_of(std::span<const Gene> genes);

/// Child genome built from the parents' learned behavior: archived memeplexes
/// taken alternately from each parent in descending fitness, joined by
/// shortest-path connector genes, then cut or extended by random walk to `length`.
[[nodiscard]] Genome lamarck_genome(const Memome& a, const Memome& b, std::size_t length, const SiteNetwork& net,
                                    Rng& rng);

}  // namespace gcsim
