#include "gcsim/memetics.hpp"

#include "gcsim/errors.hpp"

#include <algorithm>

namespace gcsim {

double evaluate(std::span<const Gene> genes, const SiteNetwork& net, const EconomyParams& econ) {
    require(!genes.empty(), "evaluate: empty memeplex");
    require(is_valid_path(genes, net), "evaluate: memeplex is not a valid path");
    double total = 0.0;
    for (std::size_t i = 0; i < genes.size(); ++i) {
        const Gene& g = genes[i];
        const StrategyParams& strat = econ.strategies[g.strategy];
        const double ft = econ.forage_time(g);
        const double reward = ft * net.site(g.site).capacity * strat.yield_multiplier * econ.harvest_rate;
        total += reward - strat.cost_per_step * ft;
        if (i > 0 && g.site != genes[i - 1].site) total -= econ.c_move;
    }
    return total - econ.metabolic;
}

Memeplex make_memeplex(std::vector<Gene> genes, const SiteNetwork& net, const EconomyParams& econ) {
    const double fitness = evaluate(genes, net, econ);
    const SiteId start = genes.front().site;
    return Memeplex{std::move(genes), start, fitness};
}

bool Memome::insert(Memeplex m) {
    require(!m.genes.empty() && m.genes.front().site == m.start_site, "Memome::insert: inconsistent start site");
    auto it = archive_.find(m.start_site);
    if (it == archive_.end()) {
        archive_.emplace(m.start_site, std::move(m));
        return true;
    }
    if (!(m.fitness > it->second.fitness)) return false;
    it->second = std::move(m);
    return true;
}

const Memeplex* Memome::find(SiteId start) const {
    auto it = archive_.find(start);
    return it == archive_.end() ? nullptr : &it->second;
}

double Memome::mean_fitness() const noexcept {
    if (archive_.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& [site, plex] : archive_) sum += plex.fitness;
    return sum / static_cast<double>(archive_.size());
}

double Memome::best_fitness() const noexcept {
    if (archive_.empty()) return 0.0;
    double best = archive_.begin()->second.fitness;
    for (const auto& [site, plex] : archive_) best = std::max(best, plex.fitness);
    return best;
}

Memeplex fallback_memeplex(SiteId s, const SiteNetwork& net, const EconomyParams& econ, std::size_t day_length,
                           Rng& rng) {
    require(net.contains(s), "fallback_memeplex: invalid site");
    require(day_length >= 1, "fallback_memeplex: day length must be at least 1");
    std::vector<Gene> genes;
    genes.reserve(day_length);
    SiteId site = s;
    for (std::size_t i = 0; i < day_length; ++i) {
        if (i > 0) site = random_step(net, site, rng);
        Gene g;
        g.site = site;
        genes.push_back(g);
    }
    return make_memeplex(std::move(genes), net, econ);
}

Memeplex select_behavior(const Memome& memome, SiteId s, const SiteNetwork& net, const EconomyParams& econ,
                         std::size_t day_length, Rng& rng) {
    require(net.contains(s), "select_behavior: invalid site");
    if (const Memeplex* best = memome.find(s)) return *best;
    return fallback_memeplex(s, net, econ, day_length, rng);
}

Memeplex mutate_memeplex(const Memeplex& m, const SiteNetwork& net, const EconomyParams& econ, MutationRates rates,
                         Rng& rng) {
    std::vector<Gene> genes = m.genes;
    mutate_genes(genes, net, rates, /*pin_start=*/true, rng);
    return make_memeplex(std::move(genes), net, econ);
}

}  // namespace gcsim
