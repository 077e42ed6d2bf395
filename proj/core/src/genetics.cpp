#include "gcsim/genetics.hpp"

#include "gcsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gcsim {

std::string_view to_string(ForageStrategy s) {
    switch (s) {
        case ForageStrategy::conservative: return "conservative";
        case ForageStrategy::standard: return "standard";
        case ForageStrategy::intensive: return "intensive";
    }
    return "unknown";
}

void StrategyTable::validate() const {
    for (const StrategyParams& p : levels) {
        if (!(p.yield_multiplier > 0.0) || !(p.cost_per_step > 0.0))
            throw ConfigError("strategy multipliers and costs must be strictly positive");
    }
}

void EconomyParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(name) + " must be strictly positive");
    };
    positive(harvest_rate, "harvest_rate");
    positive(tau, "tau");
    positive(c_move, "c_move");
    positive(metabolic, "metabolic");
    positive(breed_threshold, "breed_threshold");
    positive(child_endowment, "child_endowment");
    positive(initial_energy, "initial_energy");
    if (3.0 * tau > 1.0 + 1e-12) throw ConfigError("tau must satisfy 3 * tau <= 1");
    if (child_endowment > 2.0 * breed_threshold)
        throw ConfigError("child_endowment must not exceed 2 * breed_threshold");
    strategies.validate();
}

bool is_valid_path(std::span<const Gene> genes, const SiteNetwork& net) {
    for (std::size_t i = 0; i < genes.size(); ++i) {
        if (!net.contains(genes[i].site)) return false;
        if (i > 0 && genes[i].site != genes[i - 1].site && !net.adjacent(genes[i - 1].site, genes[i].site))
            return false;
    }
    return true;
}

SiteId random_step(const SiteNetwork& net, SiteId from, Rng& rng) {
    const auto nb = net.neighbors(from);
    const std::size_t pick = rng.index(nb.size() + 1);
    return pick == nb.size() ? from : nb[pick];
}

Gene random_gene(SiteId site, double flag_probability, Rng& rng) {
    Gene g;
    g.site = site;
    g.strategy = static_cast<ForageStrategy>(rng.index(kStrategyCount));
    g.breed = rng.bernoulli(flag_probability);
    g.learn = rng.bernoulli(flag_probability);
    g.social = rng.bernoulli(flag_probability);
    return g;
}

void mutate_genes(std::vector<Gene>& genes, const SiteNetwork& net, MutationRates rates, bool pin_start,
                  Rng& rng) {
    require(rates.point >= 0.0 && rates.point <= 1.0 && rates.path >= 0.0 && rates.path <= 1.0,
            "mutation rates must lie in [0, 1]");
    if (genes.empty()) return;

    for (Gene& g : genes) {
        if (!rng.bernoulli(rates.point)) continue;
        g.strategy = static_cast<ForageStrategy>(rng.index(kStrategyCount));
        if (rng.bernoulli(0.5)) g.breed = !g.breed;
        if (rng.bernoulli(0.5)) g.learn = !g.learn;
        if (rng.bernoulli(0.5)) g.social = !g.social;
    }

    if (!rng.bernoulli(rates.path)) return;
    std::size_t from = rng.index(genes.size());
    if (pin_start && from == 0) {
        if (genes.size() == 1) return;
        from = 1;
    }
    if (from == 0) {
        genes[0].site = static_cast<SiteId>(rng.index(net.size()));
        from = 1;
    }
    for (std::size_t i = from; i < genes.size(); ++i) genes[i].site = random_step(net, genes[i - 1].site, rng);
}

Genome random_genome(const SiteNetwork& net, std::size_t length, Rng& rng) {
    require(length >= 1, "random_genome: length must be at least 1");
    require(net.size() >= 1, "random_genome: empty network");
    Genome genome;
    genome.genes.reserve(length);
    SiteId site = static_cast<SiteId>(rng.index(net.size()));
    for (std::size_t i = 0; i < length; ++i) {
        if (i > 0) site = random_step(net, site, rng);
        genome.genes.push_back(random_gene(site, kInitialFlagProbability, rng));
    }
    return genome;
}

Genome recombine(const Genome& a, const Genome& b, Rng& rng) {
    require(a.size() == b.size(), "recombine: parent genomes differ in length");
    std::vector<std::size_t> cut_points;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a.genes[k].site == b.genes[k].site) cut_points.push_back(k);
    }
    if (cut_points.empty()) return a;
    const std::size_t k = cut_points[rng.index(cut_points.size())];
    Genome child;
    child.genes.reserve(a.size());
    child.genes.insert(child.genes.end(), a.genes.begin(), a.genes.begin() + static_cast<std::ptrdiff_t>(k));
    child.genes.insert(child.genes.end(), b.genes.begin() + static_cast<std::ptrdiff_t>(k), b.genes.end());
    return child;
}

Genome mutate_genome(const Genome& g, const SiteNetwork& net, MutationRates rates, Rng& rng) {
    Genome out = g;
    mutate_genes(out.genes, net, rates, /*pin_start=*/false, rng);
    return out;
}

Memome develop(const Genome& g, std::size_t day_length, const SiteNetwork& net, const EconomyParams& econ) {
    require(day_length >= 1, "develop: day length must be at least 1");
    require(g.size() >= day_length, "develop: genome shorter than a day");
    Memome memome;
    const std::span<const Gene> genes(g.genes);
    for (std::size_t start = 0; start + day_length <= genes.size(); ++start) {
        const auto window = genes.subspan(start, day_length);
        // Score before materializing so losing windows never allocate.
        const double fitness = evaluate(window, net, econ);
        const Memeplex* incumbent = memome.find(window.front().site);
        if (incumbent && !(fitness > incumbent->fitness)) continue;
        memome.insert(Memeplex{std::vector<Gene>(window.begin(), window.end()), window.front().site, fitness});
    }
    return memome;
}

double genetic_value(const Genome& g, std::size_t day_length, const SiteNetwork& net, const EconomyParams& econ) {
    return develop(g, day_length, net, econ).mean_fitness();
}

TimeAllocation genome_time_allocation(const Genome& g) {
    require(!g.genes.empty(), "genome_time_allocation: empty genome");
    return time_allocation_of(g.genes);
}

TimeAllocation time_allocation_of(std::span<const Gene> genes) {
    TimeAllocation out;
    if (genes.empty()) return out;
    std::size_t breed = 0, learn = 0, social = 0;
    for (const Gene& gene : genes) {
        breed += gene.breed;
        learn += gene.learn;
        social += gene.social;
    }
    const double n = static_cast<double>(genes.size());
    out.breed = static_cast<double>(breed) / n;
    out.learn = static_cast<double>(learn) / n;
    out.social = static_cast<double>(social) / n;
    return out;
}

namespace {

// Appends `segment` to `out`, bridging from out.back() with a shortest path
// when the segment does not start next to where `out` ends.
void append_stitched(std::vector<Gene>& out, std::span<const Gene> segment, const SiteNetwork& net) {
    if (segment.empty()) return;
    if (!out.empty()) {
        const SiteId from = out.back().site;
        const SiteId to = segment.front().site;
        if (from != to && !net.adjacent(from, to)) {
            const std::vector<SiteId> bridge = net.shortest_path(from, to);
            require(bridge.size() >= 2, "lamarck_genome: network is not connected");
            for (std::size_t i = 1; i + 1 < bridge.size(); ++i) {
                Gene connector;
                connector.site = bridge[i];
                out.push_back(connector);
            }
        }
    }
    out.insert(out.end(), segment.begin(), segment.end());
}

std::vector<const Memeplex*> by_descending_fitness(const Memome& m) {
    std::vector<const Memeplex*> order;
    order.reserve(m.size());
    for (const auto& [site, plex] : m) order.push_back(&plex);
    std::stable_sort(order.begin(), order.end(),
                     [](const Memeplex* x, const Memeplex* y) { return x->fitness > y->fitness; });
    return order;
}

}  // namespace

Genome lamarck_genome(const Memome& a, const Memome& b, std::size_t length, const SiteNetwork& net, Rng& rng) {
    require(length >= 1, "lamarck_genome: length must be at least 1");
    const auto from_a = by_descending_fitness(a);
    const auto from_b = by_descending_fitness(b);

    std::vector<Gene> genes;
    genes.reserve(length + 64);
    std::size_t ia = 0, ib = 0;
    bool take_a = true;
    while (genes.size() < length && (ia < from_a.size() || ib < from_b.size())) {
        const Memeplex* next = nullptr;
        if (take_a && ia < from_a.size()) next = from_a[ia++];
        else if (!take_a && ib < from_b.size()) next = from_b[ib++];
        else if (ia < from_a.size()) next = from_a[ia++];
        else next = from_b[ib++];
        take_a = !take_a;
        append_stitched(genes, next->genes, net);
    }

    if (genes.empty()) genes.push_back(random_gene(static_cast<SiteId>(rng.index(net.size())),
                                                   kInitialFlagProbability, rng));
    if (genes.size() > length) genes.resize(length);
    while (genes.size() < length) {
        const SiteId site = random_step(net, genes.back().site, rng);
        genes.push_back(random_gene(site, kInitialFlagProbability, rng));
    }
    return Genome{std::move(genes)};
}

}  // namespace gcsim
