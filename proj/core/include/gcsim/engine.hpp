#pragma once

#include "gcsim/economy.hpp"
#include "gcsim/genetics.hpp"
#include "gcsim/memetics.hpp"
#include "gcsim/network.hpp"
#include "gcsim/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace gcsim {

/// Which inheritance and learning channels are active in a run.
///
///   basic        genome only; no learning of any kind
///   breeders     individual learning, no social learning (evo-devo control)
///   lamarck      individual learning; children inherit parents' learned memeplexes
///   socializers  individual and social learning (dual inheritance)
enum class Mode : std::uint8_t { basic, breeders, lamarck, socializers };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

[[nodiscard]] constexpr bool learning_enabled(Mode m) noexcept { return m != Mode::basic; }
[[nodiscard]] constexpr bool social_learning_enabled(Mode m) noexcept { return m == Mode::socializers; }

struct WorldParams {
    std::size_t n_sites = 50;
    double radius = 0.25;
    CapacityRange capacity{25.0, 75.0};
    /// Food restored per site each night; nullopt restores every site to capacity.
    std::optional<double> regrow_rate;
    std::size_t genome_length = 200;
    std::size_t day_length = 20;
    MutationRates mutation{0.02, 0.02};
    EconomyParams econ;
    std::size_t initial_population = 50;
    Mode mode = Mode::socializers;

    /// Throws ConfigError when a field is outside its domain.
    void validate() const;
};

/// Per-agent energy flows for the current day.
struct DayLedger {
    double energy_at_start = 0.0;
    double food = 0.0;
    double move_cost = 0.0;
    double strategy_cost = 0.0;
    double metabolic = 0.0;
    double breeding_paid = 0.0;
};

struct Agent {
    std::uint64_t id = 0;
    std::uint64_t age = 0;  // completed days
    double energy = 0.0;
    SiteId site = 0;
    Genome genome;
    Memome memome;
    Memeplex today;
    double food_today = 0.0;
    bool alive = true;
    /// Newborns sit out the rest of their birth day.
    bool idle = false;
    bool learn_pending = false;
    std::uint64_t birth_day = 0;
    /// Cached at birth; the genome never changes during life.
    double genetic_value = 0.0;
    TimeAllocation genome_allocation;
    DayLedger ledger;
};

/// Hooks for instrumentation. Called on the run's thread; must not mutate the world.
class WorldObserver {
public:
    virtual ~WorldObserver() = default;
    virtual void on_birth(const Agent& /*child*/, const Agent& /*a*/, const Agent& /*b*/) {}
    virtual void on_learning(const Agent& /*agent*/) {}
    virtual void on_social_exchange(const Agent& /*a*/, const Agent& /*b*/) {}
    /// After food conversion and metabolism, before death removal.
    virtual void on_settled(const Agent& /*agent*/) {}
    virtual void on_death(const Agent& /*agent*/) {}
};

/// Uniform random maximal matching: shuffle, then pair neighbors. An odd
/// candidate out stays unmatched.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> match_pairs(std::vector<std::size_t> candidates,
                                                                           Rng& rng);

/// One simulation run: network, population, clock and random stream.
///
/// A day is lived in two halves so metrics can observe the day just executed:
/// live_day() runs the T time steps, learning, settlement, death, regrowth and
/// aging; prepare_next_day() then picks every agent's behavior for tomorrow.
class World {
public:
    /// Generates the network and the founding population.
    World(WorldParams params, std::uint64_t seed);

    /// Empty population on a caller-supplied network.
    World(WorldParams params, SiteNetwork net, std::uint64_t seed);

    void step_day();
    void live_day();
    void prepare_next_day();

    void execute_timestep(std::size_t t);
    /// Learning, food conversion, metabolism and removal of the dead.
    void settle_energy();

    void individual_learning(Agent& agent);
    void social_exchange(Agent& a, Agent& b);
    [[nodiscard]] Agent breed_pair(Agent& a, Agent& b);

    /// Builds an agent with a freshly developed memome and a behavior for `site`.
    [[nodiscard]] Agent make_agent(Genome genome, SiteId site, double energy);
    /// Appends an agent built by make_agent() and returns a reference to it.
    Agent& add_agent(Genome genome, SiteId site, double energy);

    [[nodiscard]] const WorldParams& params() const noexcept { return params_; }
    [[nodiscard]] const SiteNetwork& network() const noexcept { return net_; }
    [[nodiscard]] SiteNetwork& network() noexcept { return net_; }
    [[nodiscard]] const std::vector<Agent>& agents() const noexcept { return agents_; }
    [[nodiscard]] std::vector<Agent>& agents() noexcept { return agents_; }
    [[nodiscard]] std::uint64_t day() const noexcept { return day_; }
    [[nodiscard]] Mode mode() const noexcept { return params_.mode; }
    [[nodiscard]] std::size_t population() const noexcept { return agents_.size(); }
    [[nodiscard]] bool collapsed() const noexcept { return agents_.empty(); }
    [[nodiscard]] Rng& rng() noexcept { return rng_; }

    void set_observer(WorldObserver* observer) noexcept { observer_ = observer; }

private:
    void begin_day_for(Agent& agent);

    WorldParams params_;
    Rng rng_;
    SiteNetwork net_;
    std::vector<Agent> agents_;
    std::uint64_t day_ = 0;
    std::uint64_t next_id_ = 0;
    WorldObserver* observer_ = nullptr;

    // Scratch buffers reused across time steps.
    std::vector<std::vector<std::size_t>> by_site_;
    std::vector<std::size_t> candidates_;
    std::vector<Agent> births_;
};

}  // namespace gcsim
