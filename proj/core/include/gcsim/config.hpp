#pragma once

#include "gcsim/engine.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string_view>

namespace gcsim {

/// Everything a batch needs: world parameters plus run control.
struct Config {
    WorldParams world;
    std::uint64_t max_days = 5000;
    std::uint64_t age_split = 50;
    std::size_t runs = 1;
    std::uint64_t base_seed = 1;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Parses line-oriented `key = value` text. `#` starts a comment; blank lines
/// are ignored; absent keys keep their defaults. Unknown keys, malformed values
/// and out-of-domain values raise ConfigError naming the line and key.
///
/// Keys: n_sites radius capacity_min capacity_max regrow_rate G T point_rate
/// path_rate tau harvest_rate c_move metabolic breed_threshold child_endowment
/// initial_energy N0 max_days age_split mode runs base_seed, plus
/// {conservative,standard,intensive}_{yield,cost} for the strategy table.
/// `regrow_rate = capacity` selects a full nightly restore (the default).
[[nodiscard]] Config parse_config(std::string_view text);

/// Reads and parses a config file. I/O failures raise ConfigError with the path.
[[nodiscard]] Config load_config(const std::filesystem::path& path);

}  // namespace gcsim
