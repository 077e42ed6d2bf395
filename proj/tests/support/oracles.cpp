#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace gcsim::oracle {

bool adjacent(const SiteNetwork& net, SiteId a, SiteId b) {
    if (a == b) return false;
    const Point& p = net.site(a).position;
    const Point& q = net.site(b).position;
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return std::sqrt(dx * dx + dy * dy) <= net.radius();
}

std::vector<SiteId> neighbors(const SiteNetwork& net, SiteId s) {
    std::vector<SiteId> out;
    for (SiteId t = 0; t < net.size(); ++t) {
        if (adjacent(net, s, t)) out.push_back(t);
    }
    return out;
}

bool valid_path(const SiteNetwork& net, std::span<const Gene> genes) {
    for (std::size_t i = 0; i < genes.size(); ++i) {
        if (genes[i].site >= net.size()) return false;
        if (i == 0) continue;
        const SiteId a = genes[i - 1].site;
        const SiteId b = genes[i].site;
        if (a != b && !adjacent(net, a, b)) return false;
    }
    return true;
}

double ledger_fitness(const SiteNetwork& net, const EconomyParams& econ, std::span<const Gene> genes) {
    double reward = 0.0;
    double strategy = 0.0;
    int moves = 0;
    for (std::size_t i = 0; i < genes.size(); ++i) {
        const Gene& g = genes[i];
        const int flags = (g.breed ? 1 : 0) + (g.learn ? 1 : 0) + (g.social ? 1 : 0);
        const double time = std::max(0.0, 1.0 - econ.tau * flags);
        const StrategyParams& p = econ.strategies.levels[static_cast<std::size_t>(g.strategy)];
        reward += time * net.site(g.site).capacity * p.yield_multiplier * econ.harvest_rate;
        strategy += p.cost_per_step * time;
        if (i > 0 && genes[i - 1].site != g.site) ++moves;
    }
    return reward - strategy - econ.c_move * moves - econ.metabolic;
}

WindowScan scan_windows(const SiteNetwork& net, const EconomyParams& econ, std::span<const Gene> genome,
                        std::size_t day_length) {
    WindowScan scan;
    for (std::size_t start = 0; start + day_length <= genome.size(); ++start) {
        ++scan.windows;
        const auto window = genome.subspan(start, day_length);
        const double f = ledger_fitness(net, econ, window);
        auto [it, inserted] = scan.best.try_emplace(window.front().site, f);
        if (!inserted) it->second = std::max(it->second, f);
    }
    return scan;
}

}  // namespace gcsim::oracle
