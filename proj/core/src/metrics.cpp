#include "gcsim/metrics.hpp"

namespace gcsim {
namespace {

bool executed_today(const Agent& a) { return !a.idle; }

}  // namespace

double memetic_value(const Agent& agent) { return agent.memome.mean_fitness(); }

std::optional<double> genetic_optimization(const World& w) {
    if (w.agents().empty()) return std::nullopt;
    double sum = 0.0;
    for (const Agent& a : w.agents()) sum += a.genetic_value;
    return sum / static_cast<double>(w.agents().size());
}

std::optional<double> memetic_optimization(const World& w) {
    if (w.agents().empty()) return std::nullopt;
    double sum = 0.0;
    for (const Agent& a : w.agents()) sum += memetic_value(a);
    return sum / static_cast<double>(w.agents().size());
}

std::optional<TimeAllocation> time_allocation(const World& w) {
    std::size_t slots = 0, breed = 0, learn = 0, social = 0;
    for (const Agent& a : w.agents()) {
        if (!executed_today(a)) continue;
        for (const Gene& g : a.today.genes) {
            breed += g.breed;
            learn += g.learn;
            social += g.social;
        }
        slots += a.today.genes.size();
    }
    if (slots == 0) return std::nullopt;
    const double n = static_cast<double>(slots);
    return TimeAllocation{static_cast<double>(breed) / n, static_cast<double>(learn) / n,
                          static_cast<double>(social) / n};
}

std::optional<TimeAllocation> genome_allocation(const World& w) {
    if (w.agents().empty()) return std::nullopt;
    TimeAllocation sum;
    for (const Agent& a : w.agents()) {
        sum.breed += a.genome_allocation.breed;
        sum.learn += a.genome_allocation.learn;
        sum.social += a.genome_allocation.social;
    }
    const double n = static_cast<double>(w.agents().size());
    return TimeAllocation{sum.breed / n, sum.learn / n, sum.social / n};
}

AgeActivity age_stratified_allocation(const World& w, std::uint64_t age_split) {
    double young_sum = 0.0, old_sum = 0.0;
    std::size_t young_n = 0, old_n = 0;
    for (const Agent& a : w.agents()) {
        if (!executed_today(a) || a.today.genes.empty()) continue;
        std::size_t flags = 0;
        for (const Gene& g : a.today.genes) flags += static_cast<std::size_t>(g.flags_set());
        const double activity = static_cast<double>(flags) / (3.0 * static_cast<double>(a.today.genes.size()));
        if (a.age < age_split) {
            young_sum += activity;
            ++young_n;
        } else {
            old_sum += activity;
            ++old_n;
        }
    }
    AgeActivity out;
    if (young_n > 0) out.young = young_sum / static_cast<double>(young_n);
    if (old_n > 0) out.old = old_sum / static_cast<double>(old_n);
    return out;
}

DayMetrics collect_metrics(const World& w, std::uint64_t age_split) {
    DayMetrics m;
    m.day = w.day();
    m.population = w.population();
    if (!w.agents().empty()) {
        double energy = 0.0;
        for (const Agent& a : w.agents()) energy += a.energy;
        m.mean_energy = energy / static_cast<double>(w.agents().size());
    }
    m.genetic_opt = genetic_optimization(w);
    m.memetic_opt = memetic_optimization(w);
    if (auto ta = time_allocation(w)) {
        m.breed_time = ta->breed;
        m.learn_time = ta->learn;
        m.social_time = ta->social;
    }
    if (auto ga = genome_allocation(w)) {
        m.genome_breed = ga->breed;
        m.genome_learn = ga->learn;
        m.genome_social = ga->social;
    }
    const AgeActivity age = age_stratified_allocation(w, age_split);
    m.young_activity = age.young;
    m.old_activity = age.old;
    return m;
}

std::optional<std::uint64_t> CollapseTracker::check(const World& w) {
    if (day_ || !w.agents().empty()) return std::nullopt;
    day_ = w.day();
    return day_;
}

}  // namespace gcsim
