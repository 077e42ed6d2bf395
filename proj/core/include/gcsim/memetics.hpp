#pragma once

#include "gcsim/economy.hpp"
#include "gcsim/gene.hpp"
#include "gcsim/network.hpp"
#include "gcsim/rng.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace gcsim {

/// A day-long behavior: a valid path of T genes plus its cached fitness.
struct Memeplex {
    std::vector<Gene> genes;
    SiteId start_site = 0;
    double fitness = 0.0;

    bool operator==(const Memeplex&) const = default;
};

/// Expected net energy of executing `genes` for one day against full stocks,
/// ignoring other agents:
///
///   sum_t ft_t * (capacity * multiplier * harvest_rate - strategy_cost)
///   - c_move * (edges traversed) - metabolic
///
/// where ft_t = max(0, 1 - tau * flags_t). Throws ContractError on an empty or
/// invalid path.
[[nodiscard]] double evaluate(std::span<const Gene> genes, const SiteNetwork& net, const EconomyParams& econ);

/// Builds a memeplex from a gene path, computing its fitness.
[[nodiscard]] Memeplex make_memeplex(std::vector<Gene> genes, const SiteNetwork& net, const EconomyParams& econ);

/// Elite archive holding the best memeplex seen for each start site.
class Memome {
public:
    using Archive = std::map<SiteId, Memeplex>;

    /// Inserts when the site is empty or `m` is strictly fitter than the
    /// incumbent. Returns true when the archive changed.
    bool insert(Memeplex m);

    [[nodiscard]] const Memeplex* find(SiteId start) const;
    [[nodiscard]] std::size_t size() const noexcept { return archive_.size(); }
    [[nodiscard]] bool empty() const noexcept { return archive_.empty(); }

    /// Mean fitness over archived entries; 0 for an empty archive.
    [[nodiscard]] double mean_fitness() const noexcept;
    /// Highest archived fitness; 0 for an empty archive.
    [[nodiscard]] double best_fitness() const noexcept;

    [[nodiscard]] Archive::const_iterator begin() const noexcept { return archive_.begin(); }
    [[nodiscard]] Archive::const_iterator end() const noexcept { return archive_.end(); }

    bool operator==(const Memome&) const = default;

private:
    Archive archive_;
};

/// Random walk of `day_length` genes from `s`: standard strategy, no flags.
[[nodiscard]] Memeplex fallback_memeplex(SiteId s, const SiteNetwork& net, const EconomyParams& econ,
                                         std::size_t day_length, Rng& rng);

/// The archived memeplex for `s`, or a fallback walk when the agent knows nothing about `s`.
[[nodiscard]] Memeplex select_behavior(const Memome& memome, SiteId s, const SiteNetwork& net,
                                       const EconomyParams& econ, std::size_t day_length, Rng& rng);

/// Copy of `m` under the genome mutation kernel with the start site pinned; fitness recomputed.
[[nodiscard]] Memeplex mutate_memeplex(const Memeplex& m, const SiteNetwork& net, const EconomyParams& econ,
                                       MutationRates rates, Rng& rng);

}  // namespace gcsim
