#include "gcsim/config.hpp"

#include "gcsim/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

namespace gcsim {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Thrown by value parsers/validators; rethrown with line and key context.
struct FieldError {
    std::string message;
};

double to_double(std::string_view v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out))
        throw FieldError{"malformed number '" + std::string(v) + "'"};
    return out;
}

std::uint64_t to_uint(std::string_view v) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw FieldError{"malformed non-negative integer '" + std::string(v) + "'"};
    return out;
}

double positive(std::string_view v) {
    const double x = to_double(v);
    if (!(x > 0.0)) throw FieldError{"must be strictly positive"};
    return x;
}

double non_negative(std::string_view v) {
    const double x = to_double(v);
    if (!(x >= 0.0)) throw FieldError{"must be non-negative"};
    return x;
}

double probability(std::string_view v) {
    const double x = to_double(v);
    if (!(x >= 0.0 && x <= 1.0)) throw FieldError{"must lie in [0, 1]"};
    return x;
}

using Setter = std::function<void(Config&, std::string_view)>;

Setter strategy_setter(ForageStrategy s, bool yield) {
    return [s, yield](Config& c, std::string_view v) {
        StrategyParams& p = c.world.econ.strategies.levels[static_cast<std::size_t>(s)];
        (yield ? p.yield_multiplier : p.cost_per_step) = positive(v);
    };
}

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        {"n_sites", [](Config& c, std::string_view v) {
             c.world.n_sites = to_uint(v);
             if (c.world.n_sites < 1) throw FieldError{"must be at least 1"};
         }},
        {"radius", [](Config& c, std::string_view v) {
             c.world.radius = positive(v);
             if (c.world.radius > std::sqrt(2.0)) throw FieldError{"must not exceed sqrt(2)"};
         }},
        {"capacity_min", [](Config& c, std::string_view v) { c.world.capacity.min = non_negative(v); }},
        {"capacity_max", [](Config& c, std::string_view v) { c.world.capacity.max = non_negative(v); }},
        {"regrow_rate", [](Config& c, std::string_view v) {
             if (v == "capacity") c.world.regrow_rate.reset();
             else c.world.regrow_rate = non_negative(v);
         }},
        {"G", [](Config& c, std::string_view v) {
             c.world.genome_length = to_uint(v);
             if (c.world.genome_length < 1) throw FieldError{"must be at least 1"};
         }},
        {"T", [](Config& c, std::string_view v) {
             c.world.day_length = to_uint(v);
             if (c.world.day_length < 1) throw FieldError{"must be at least 1"};
         }},
        {"point_rate", [](Config& c, std::string_view v) { c.world.mutation.point = probability(v); }},
        {"path_rate", [](Config& c, std::string_view v) { c.world.mutation.path = probability(v); }},
        {"tau", [](Config& c, std::string_view v) {
             c.world.econ.tau = positive(v);
             if (3.0 * c.world.econ.tau > 1.0 + 1e-12) throw FieldError{"must satisfy 3 * tau <= 1"};
         }},
        {"harvest_rate", [](Config& c, std::string_view v) { c.world.econ.harvest_rate = positive(v); }},
        {"c_move", [](Config& c, std::string_view v) { c.world.econ.c_move = positive(v); }},
        {"metabolic", [](Config& c, std::string_view v) { c.world.econ.metabolic = positive(v); }},
        {"breed_threshold", [](Config& c, std::string_view v) { c.world.econ.breed_threshold = positive(v); }},
        {"child_endowment", [](Config& c, std::string_view v) { c.world.econ.child_endowment = positive(v); }},
        {"initial_energy", [](Config& c, std::string_view v) { c.world.econ.initial_energy = positive(v); }},
        {"N0", [](Config& c, std::string_view v) { c.world.initial_population = to_uint(v); }},
        {"max_days", [](Config& c, std::string_view v) { c.max_days = to_uint(v); }},
        {"age_split", [](Config& c, std::string_view v) { c.age_split = to_uint(v); }},
        {"mode", [](Config& c, std::string_view v) {
             const auto m = parse_mode(v);
             if (!m) throw FieldError{"unknown mode '" + std::string(v) + "' (basic, breeders, lamarck, socializers)"};
             c.world.mode = *m;
         }},
        {"runs", [](Config& c, std::string_view v) {
             c.runs = to_uint(v);
             if (c.runs < 1) throw FieldError{"must be at least 1"};
         }},
        {"base_seed", [](Config& c, std::string_view v) { c.base_seed = to_uint(v); }},
        {"conservative_yield", strategy_setter(ForageStrategy::conservative, true)},
        {"conservative_cost", strategy_setter(ForageStrategy::conservative, false)},
        {"standard_yield", strategy_setter(ForageStrategy::standard, true)},
        {"standard_cost", strategy_setter(ForageStrategy::standard, false)},
        {"intensive_yield", strategy_setter(ForageStrategy::intensive, true)},
        {"intensive_cost", strategy_setter(ForageStrategy::intensive, false)},
    };
    return table;
}

}  // namespace

void Config::validate() const {
    world.validate();
    if (runs < 1) throw ConfigError("runs must be at least 1");
}

Config parse_config(std::string_view text) {
    Config cfg;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::string where = "line " + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": missing key");

        const auto& table = setters();
        const auto it = table.find(key);
        if (it == table.end()) throw ConfigError(where + ": unknown key '" + std::string(key) + "'");
        if (value.empty()) throw ConfigError(where + ": key '" + std::string(key) + "': missing value");
        try {
            it->second(cfg, value);
        } catch (const FieldError& e) {
            throw ConfigError(where + ": key '" + std::string(key) + "': " + e.message);
        }
        seen[std::string(key)] = line_no;
    }

    // Cross-field constraints, reported against the last line that touched them.
    auto fail = [&](std::initializer_list<const char*> keys, const std::string& message) {
        std::size_t line = 0;
        std::string key = *keys.begin();
        for (const char* k : keys) {
            if (auto s = seen.find(k); s != seen.end() && s->second >= line) {
                line = s->second;
                key = k;
            }
        }
        const std::string where = line ? "line " + std::to_string(line) : std::string("defaults");
        throw ConfigError(where + ": key '" + key + "': " + message);
    };
    if (cfg.world.capacity.max < cfg.world.capacity.min)
        fail({"capacity_min", "capacity_max"}, "capacity_min must not exceed capacity_max");
    if (cfg.world.genome_length < cfg.world.day_length) fail({"G", "T"}, "G must be at least T");
    if (cfg.world.econ.child_endowment > 2.0 * cfg.world.econ.breed_threshold)
        fail({"child_endowment", "breed_threshold"}, "child_endowment must not exceed 2 * breed_threshold");

    cfg.validate();
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace gcsim
