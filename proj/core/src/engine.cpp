#include "gcsim/engine.hpp"

#include "gcsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gcsim {

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::basic: return "basic";
        case Mode::breeders: return "breeders";
        case Mode::lamarck: return "lamarck";
        case Mode::socializers: return "socializers";
    }
    return "unknown";
}

std::optional<Mode> parse_mode(std::string_view text) {
    for (Mode m : {Mode::basic, Mode::breeders, Mode::lamarck, Mode::socializers}) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

void WorldParams::validate() const {
    if (n_sites < 1) throw ConfigError("n_sites must be at least 1");
    if (!(radius > 0.0) || radius > std::sqrt(2.0)) throw ConfigError("radius must lie in (0, sqrt(2)]");
    if (!(capacity.min >= 0.0) || !(capacity.max >= capacity.min))
        throw ConfigError("capacity range must be non-empty and non-negative");
    if (regrow_rate && !(*regrow_rate >= 0.0)) throw ConfigError("regrow_rate must be non-negative");
    if (day_length < 1) throw ConfigError("day length T must be at least 1");
    if (genome_length < day_length) throw ConfigError("genome length G must be at least T");
    auto rate_ok = [](double r) { return r >= 0.0 && r <= 1.0; };
    if (!rate_ok(mutation.point) || !rate_ok(mutation.path)) throw ConfigError("mutation rates must lie in [0, 1]");
    econ.validate();
}

std::vector<std::pair<std::size_t, std::size_t>> match_pairs(std::vector<std::size_t> candidates, Rng& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (candidates.size() < 2) return pairs;
    rng.shuffle(std::span<std::size_t>(candidates));
    pairs.reserve(candidates.size() / 2);
    for (std::size_t i = 0; i + 1 < candidates.size(); i += 2) pairs.emplace_back(candidates[i], candidates[i + 1]);
    return pairs;
}

World::World(WorldParams params, std::uint64_t seed)
    : params_((params.validate(), std::move(params))),
      rng_(seed),
      net_(SiteNetwork::generate(params_.n_sites, params_.radius, params_.capacity, rng_)),
      by_site_(net_.size()) {
    agents_.reserve(params_.initial_population);
    for (std::size_t i = 0; i < params_.initial_population; ++i) {
        Genome genome = random_genome(net_, params_.genome_length, rng_);
        const auto site = static_cast<SiteId>(rng_.index(net_.size()));
        add_agent(std::move(genome), site, params_.econ.initial_energy);
    }
}

World::World(WorldParams params, SiteNetwork net, std::uint64_t seed)
    : params_((params.validate(), std::move(params))), rng_(seed), net_(std::move(net)), by_site_(net_.size()) {}

Agent World::make_agent(Genome genome, SiteId site, double energy) {
    require(net_.contains(site), "make_agent: invalid site");
    require(genome.size() == params_.genome_length, "make_agent: genome length differs from G");
    Agent agent;
    agent.id = next_id_++;
    agent.energy = energy;
    agent.site = site;
    agent.birth_day = day_;
    agent.genome = std::move(genome);
    agent.memome = develop(agent.genome, params_.day_length, net_, params_.econ);
    agent.genetic_value = agent.memome.mean_fitness();
    agent.genome_allocation = genome_time_allocation(agent.genome);
    agent.today = select_behavior(agent.memome, site, net_, params_.econ, params_.day_length, rng_);
    agent.ledger.energy_at_start = energy;
    return agent;
}

Agent& World::add_agent(Genome genome, SiteId site, double energy) {
    agents_.push_back(make_agent(std::move(genome), site, energy));
    return agents_.back();
}

void World::step_day() {
    live_day();
    prepare_next_day();
}

void World::live_day() {
    for (std::size_t t = 0; t < params_.day_length; ++t) execute_timestep(t);
    settle_energy();
    if (params_.regrow_rate) net_.regrow(*params_.regrow_rate);
    else net_.refill();
    for (Agent& a : agents_) {
        if (!a.idle) ++a.age;
    }
    ++day_;
}

void World::begin_day_for(Agent& agent) {
    agent.idle = false;
    agent.learn_pending = false;
    agent.food_today = 0.0;
    agent.today = select_behavior(agent.memome, agent.site, net_, params_.econ, params_.day_length, rng_);
    agent.ledger = DayLedger{};
    agent.ledger.energy_at_start = agent.energy;
}

void World::prepare_next_day() {
    for (Agent& a : agents_) begin_day_for(a);
}

void World::execute_timestep(std::size_t t) {
    require(t < params_.day_length, "execute_timestep: step index out of range");
    const EconomyParams& econ = params_.econ;

    for (auto& bucket : by_site_) bucket.clear();

    // Movement: each active agent walks to this step's site.
    for (std::size_t i = 0; i < agents_.size(); ++i) {
        Agent& a = agents_[i];
        if (a.idle) continue;
        const SiteId target = a.today.genes[t].site;
        if (target != a.site) {
            a.energy -= econ.c_move;
            a.ledger.move_cost += econ.c_move;
            a.site = target;
        }
        by_site_[a.site].push_back(i);
    }

    // Foraging with proportional rationing when demand exceeds stock.
    for (SiteId s = 0; s < by_site_.size(); ++s) {
        const auto& present = by_site_[s];
        if (present.empty()) continue;
        const double stock = net_.site(s).stock;
        double demand = 0.0;
        for (std::size_t i : present) {
            const Gene& g = agents_[i].today.genes[t];
            demand += econ.harvest_rate * stock * econ.strategies[g.strategy].yield_multiplier * econ.forage_time(g);
        }
        const double scale = demand > stock && demand > 0.0 ? stock / demand : 1.0;
        double taken = 0.0;
        for (std::size_t i : present) {
            Agent& a = agents_[i];
            const Gene& g = a.today.genes[t];
            const double ft = econ.forage_time(g);
            const StrategyParams& strat = econ.strategies[g.strategy];
            const double share = econ.harvest_rate * stock * strat.yield_multiplier * ft * scale;
            a.food_today += share;
            a.ledger.food += share;
            taken += share;
            const double cost = strat.cost_per_step * ft;
            a.energy -= cost;
            a.ledger.strategy_cost += cost;
        }
        net_.take(s, taken);
    }

    // Breeding between co-located agents that flag it and can afford it.
    births_.clear();
    for (SiteId s = 0; s < by_site_.size(); ++s) {
        const auto& present = by_site_[s];
        if (present.size() < 2) continue;
        candidates_.clear();
        for (std::size_t i : present) {
            const Agent& a = agents_[i];
            if (a.today.genes[t].breed && a.energy >= econ.breed_threshold) candidates_.push_back(i);
        }
        for (auto [i, j] : match_pairs(candidates_, rng_)) births_.push_back(breed_pair(agents_[i], agents_[j]));
    }

    if (social_learning_enabled(params_.mode)) {
        for (SiteId s = 0; s < by_site_.size(); ++s) {
            const auto& present = by_site_[s];
            if (present.size() < 2) continue;
            candidates_.clear();
            for (std::size_t i : present) {
                if (agents_[i].today.genes[t].social) candidates_.push_back(i);
            }
            for (auto [i, j] : match_pairs(candidates_, rng_)) social_exchange(agents_[i], agents_[j]);
        }
    }

    if (learning_enabled(params_.mode)) {
        for (Agent& a : agents_) {
            if (!a.idle && a.today.genes[t].learn) a.learn_pending = true;
        }
    }

    for (Agent& child : births_) agents_.push_back(std::move(child));
    births_.clear();
}

Agent World::breed_pair(Agent& a, Agent& b) {
    const EconomyParams& econ = params_.econ;
    require(a.alive && b.alive, "breed_pair: parents must be alive");
    require(a.site == b.site, "breed_pair: parents must be co-located");
    require(a.energy >= econ.breed_threshold && b.energy >= econ.breed_threshold,
            "breed_pair: parents below breeding threshold");

    Genome genome = params_.mode == Mode::lamarck
                        ? lamarck_genome(a.memome, b.memome, params_.genome_length, net_, rng_)
                        : recombine(a.genome, b.genome, rng_);
    genome = mutate_genome(genome, net_, params_.mutation, rng_);

    const double payment = econ.child_endowment / 2.0;
    a.energy -= payment;
    b.energy -= payment;
    a.ledger.breeding_paid += payment;
    b.ledger.breeding_paid += payment;

    Agent child = make_agent(std::move(genome), a.site, econ.child_endowment);
    child.idle = true;
    if (observer_) observer_->on_birth(child, a, b);
    return child;
}

void World::individual_learning(Agent& agent) {
    if (!agent.learn_pending) return;
    agent.memome.insert(mutate_memeplex(agent.today, net_, params_.econ, params_.mutation, rng_));
    agent.learn_pending = false;
    if (observer_) observer_->on_learning(agent);
}

void World::social_exchange(Agent& a, Agent& b) {
    Memeplex for_a = mutate_memeplex(b.today, net_, params_.econ, params_.mutation, rng_);
    Memeplex for_b = mutate_memeplex(a.today, net_, params_.econ, params_.mutation, rng_);
    a.memome.insert(std::move(for_a));
    b.memome.insert(std::move(for_b));
    if (observer_) observer_->on_social_exchange(a, b);
}

void World::settle_energy() {
    if (learning_enabled(params_.mode)) {
        for (Agent& a : agents_) {
            if (!a.idle && a.learn_pending) individual_learning(a);
        }
    }
    const double metabolic = params_.econ.metabolic;
    for (Agent& a : agents_) {
        if (a.idle) continue;
        a.energy += a.food_today;
        a.energy -= metabolic;
        a.ledger.metabolic += metabolic;
        a.food_today = 0.0;
        if (observer_) observer_->on_settled(a);
        if (a.energy <= 0.0) {
            a.alive = false;
            if (observer_) observer_->on_death(a);
        }
    }
    std::erase_if(agents_, [](const Agent& a) { return !a.alive; });
}

}  // namespace gcsim
