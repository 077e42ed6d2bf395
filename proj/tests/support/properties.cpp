#include "properties.hpp"

#include "oracles.hpp"

#include "gcsim/engine.hpp"
#include "gcsim/genetics.hpp"
#include "gcsim/memetics.hpp"
#include "gcsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace gcsim::props {
namespace {

void fail(Report& r, const std::string& what) {
    if (r.failures++ == 0) r.first_failure = what;
}

// Random connected network with a case-dependent size and radius.
SiteNetwork random_network(Rng& rng) {
    const std::size_t n = 2 + rng.index(40);
    const double radius = 0.45 + 0.3 * rng.uniform01();
    return SiteNetwork::generate(n, radius, CapacityRange{1.0, 20.0}, rng);
}

Memeplex random_memeplex(const SiteNetwork& net, const EconomyParams& econ, std::size_t length, Rng& rng) {
    Genome g = random_genome(net, length, rng);
    return make_memeplex(std::move(g.genes), net, econ);
}

WorldParams small_world(Mode mode) {
    WorldParams p;
    p.n_sites = 20;
    p.radius = 0.35;
    p.capacity = {25.0, 75.0};
    p.genome_length = 60;
    p.day_length = 10;
    p.initial_population = 30;
    p.econ.harvest_rate = 0.06;
    p.econ.c_move = 0.5;
    p.econ.breed_threshold = 60.0;
    p.econ.child_endowment = 40.0;
    p.mode = mode;
    return p;
}

}  // namespace

Report path_validity_random_genome(std::size_t cases, std::uint64_t seed) {
    Report r{"path validity: random_genome"};
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
        const SiteNetwork net = random_network(rng);
        const Genome g = random_genome(net, 1 + rng.index(200), rng);
        if (!oracle::valid_path(net, g.genes)) fail(r, "case " + std::to_string(c));
    }
    return r;
}

Report path_validity_recombine(std::size_t cases, std::uint64_t seed) {
    Report r{"path validity: recombine"};
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
        const SiteNetwork net = random_network(rng);
        const std::size_t len = 1 + rng.index(200);
        const Genome a = random_genome(net, len, rng);
        const Genome b = random_genome(net, len, rng);
        const Genome child = recombine(a, b, rng);
        if (child.size() != len || !oracle::valid_path(net, child.genes)) fail(r, "case " + std::to_string(c));
    }
    return r;
}

Report path_validity_mutate_genome(std::size_t cases, std::uint64_t seed) {
    Report r{"path validity: mutate_genome"};
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
        const SiteNetwork net = random_network(rng);
        const Genome g = random_genome(net, 1 + rng.index(200), rng);
        const MutationRates rates{rng.uniform01(), rng.uniform01()};
        const Genome m = mutate_genome(g, net, rates, rng);
        if (m.size() != g.size() || !oracle::valid_path(net, m.genes)) fail(r, "case " + std::to_string(c));
    }
    return r;
}

Report path_validity_mutate_memeplex(std::size_t cases, std::uint64_t seed) {
    Report r{"path validity: mutate_memeplex"};
    Rng rng(seed);
    EconomyParams econ;
    for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
        const SiteNetwork net = random_network(rng);
        const Memeplex m = random_memeplex(net, econ, 1 + rng.index(30), rng);
        const MutationRates rates{rng.uniform01(), rng.uniform01()};
        const Memeplex out = mutate_memeplex(m, net, econ, rates, rng);
        const bool ok = out.genes.size() == m.genes.size() && out.start_site == m.start_site &&
                        out.genes.front().site == m.start_site && oracle::valid_path(net, out.genes) &&
                        std::abs(out.fitness - oracle::ledger_fitness(net, econ, out.genes)) < 1e-9;
        if (!ok) fail(r, "case " + std::to_string(c));
    }
    return r;
}

Report archive_elitism(std::size_t cases, std::uint64_t seed) {
    Report r{"archive elitism vs recorded offers"};
    Rng rng(seed);
    EconomyParams econ;
    for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
        const SiteNetwork net = SiteNetwork::generate(2 + rng.index(10), 0.6, CapacityRange{1.0, 20.0}, rng);
        Memome memome;
        std::map<SiteId, double> best_offer;
        const std::size_t offers = 1 + rng.index(60);
        for (std::size_t k = 0; k < offers; ++k) {
            Memeplex m = random_memeplex(net, econ, 1 + rng.index(6), rng);
            auto [it, inserted] = best_offer.try_emplace(m.start_site, m.fitness);
            if (!inserted) it->second = std::max(it->second, m.fitness);
            memome.insert(std::move(m));
        }
        bool ok = memome.size() == best_offer.size();
        for (const auto& [site, best] : best_offer) {
            const Memeplex* kept = memome.find(site);
            ok = ok && kept && kept->fitness == best;
        }
        if (!ok) fail(r, "case " + std::to_string(c));
    }
    return r;
}

Report develop_matches_window_scan(std::size_t cases, std::uint64_t seed) {
    Report r{"develop vs exhaustive window scan (G<=30, T<=5)"};
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
        const SiteNetwork net = SiteNetwork::generate(1 + rng.index(12), 0.5, CapacityRange{1.0, 20.0}, rng);
        EconomyParams econ;
        econ.c_move = 0.1 + rng.uniform01();
        const std::size_t day = 1 + rng.index(5);
        const std::size_t len = day + rng.index(31 - day);
        const Genome g = random_genome(net, len, rng);
        const Memome m = develop(g, day, net, econ);
        const oracle::WindowScan scan = oracle::scan_windows(net, econ, g.genes, day);
        bool ok = scan.windows == len - day + 1 && m.size() == scan.best.size();
        for (const auto& [site, best] : scan.best) {
            const Memeplex* kept = m.find(site);
            ok = ok && kept && std::abs(kept->fitness - best) < 1e-9 && kept->genes.size() == day;
        }
        if (!ok) fail(r, "case " + std::to_string(c));
    }
    return r;
}

namespace {

class LedgerObserver final : public WorldObserver {
public:
    Report* report = nullptr;
    void on_settled(const Agent& a) override {
        const DayLedger& l = a.ledger;
        const double expected =
            l.energy_at_start + l.food - l.move_cost - l.strategy_cost - l.metabolic - l.breeding_paid;
        ++report->cases;
        if (std::abs(a.energy - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
            std::ostringstream msg;
            msg << "agent " << a.id << ": energy " << a.energy << " != ledger " << expected;
            fail(*report, msg.str());
        }
    }
};

class InertnessObserver final : public WorldObserver {
public:
    Report* report = nullptr;
    std::map<std::uint64_t, Genome> at_birth;
    void on_birth(const Agent& child, const Agent&, const Agent&) override { at_birth[child.id] = child.genome; }
    void on_death(const Agent& a) override { check(a); }
    void check(const Agent& a) {
        ++report->cases;
        auto it = at_birth.find(a.id);
        if (it == at_birth.end() || !(it->second == a.genome)) fail(*report, "agent " + std::to_string(a.id));
        if (it != at_birth.end()) at_birth.erase(it);
    }
};

class BirthObserver final : public WorldObserver {
public:
    Report* report = nullptr;
    const World* world = nullptr;
    void on_birth(const Agent& child, const Agent&, const Agent&) override {
        ++report->cases;
        const WorldParams& p = world->params();
        const double genetic = genetic_value(child.genome, p.day_length, world->network(), p.econ);
        const double memetic = memetic_value(child);
        if (std::abs(genetic - memetic) > 1e-9 || std::abs(child.genetic_value - genetic) > 1e-9)
            fail(*report, "child " + std::to_string(child.id));
    }
};

}  // namespace

Report energy_ledger_closure(std::size_t min_agent_days, std::uint64_t seed) {
    Report r{"energy ledger closure per agent-day"};
    LedgerObserver obs;
    obs.report = &r;
    for (std::uint64_t s = seed; r.cases < min_agent_days; ++s) {
        for (Mode mode : {Mode::basic, Mode::breeders, Mode::lamarck, Mode::socializers}) {
            World w(small_world(mode), s);
            w.set_observer(&obs);
            for (int d = 0; d < 150 && !w.collapsed(); ++d) w.step_day();
        }
        if (s - seed > 1000) break;
    }
    return r;
}

Report genome_inertness(std::size_t min_lifetimes, std::uint64_t seed) {
    Report r{"genome inertness (basic, breeders, socializers)"};
    for (std::uint64_t s = seed; r.cases < min_lifetimes; ++s) {
        for (Mode mode : {Mode::basic, Mode::breeders, Mode::socializers}) {
            InertnessObserver obs;
            obs.report = &r;
            World w(small_world(mode), s);
            for (const Agent& a : w.agents()) obs.at_birth[a.id] = a.genome;
            w.set_observer(&obs);
            for (int d = 0; d < 200 && !w.collapsed(); ++d) w.step_day();
            for (const Agent& a : w.agents()) obs.check(a);
        }
        if (s - seed > 1000) break;
    }
    return r;
}

Report birth_identity(std::size_t min_births, std::uint64_t seed) {
    Report r{"birth identity: memetic == genetic at birth"};
    for (std::uint64_t s = seed; r.cases < min_births; ++s) {
        for (Mode mode : {Mode::basic, Mode::breeders, Mode::lamarck, Mode::socializers}) {
            World w(small_world(mode), s);
            BirthObserver obs;
            obs.report = &r;
            obs.world = &w;
            w.set_observer(&obs);
            for (int d = 0; d < 150 && !w.collapsed(); ++d) w.step_day();
        }
        if (s - seed > 1000) break;
    }
    return r;
}

}  // namespace gcsim::props
