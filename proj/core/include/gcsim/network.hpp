#pragma once

#include "gcsim/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace gcsim {

using SiteId = std::uint32_t;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Site {
    Point position;
    double capacity = 0.0;  // food units restored by a full regrow
    double stock = 0.0;     // food currently available, in [0, capacity]
};

struct CapacityRange {
    double min = 5.0;
    double max = 15.0;
};

/// Random geometric graph of food sites in the unit square.
///
/// Two distinct sites are adjacent iff their Euclidean distance is at most
/// `radius`. Topology and capacities are fixed once built; only stock changes.
class SiteNetwork {
public:
    /// Bounded number of redraws before generate() gives up on connectivity.
    static constexpr int kMaxConnectivityRetries = 100;

    /// Builds adjacency from explicit sites. Does not require connectivity.
    SiteNetwork(std::vector<Site> sites, double radius);

    /// Draws `n_sites` uniform positions and capacities, resampling the whole
    /// draft until it is connected. Throws NetworkGenerationError on failure.
    static SiteNetwork generate(std::size_t n_sites, double radius, CapacityRange capacity,
                                Rng& rng);

    [[nodiscard]] std::size_t size() const noexcept { return sites_.size(); }
    [[nodiscard]] double radius() const noexcept { return radius_; }
    [[nodiscard]] bool contains(SiteId s) const noexcept { return s < sites_.size(); }

    /// Throws std::out_of_range for an invalid id.
    [[nodiscard]] const Site& site(SiteId s) const;

    /// Sites adjacent to `s`, ascending. Throws std::out_of_range for an invalid id.
    [[nodiscard]] std::span<const SiteId> neighbors(SiteId s) const;

    [[nodiscard]] bool adjacent(SiteId a, SiteId b) const;
    [[nodiscard]] std::size_t edge_count() const noexcept;
    [[nodiscard]] bool connected() const;

    /// Vertices on a fewest-edges path from `from` to `to`, both ends included.
    /// Ties are broken toward lower site ids. Empty if unreachable.
    [[nodiscard]] std::vector<SiteId> shortest_path(SiteId from, SiteId to) const;

    /// stock = min(capacity, stock + rate) at every site.
    void regrow(double rate);

    /// Removes up to `amount` food from a site and returns what was taken.
    double take(SiteId s, double amount);

    /// Restores every site to full capacity.
    void refill();

    /// `site_id,x,y,capacity` per site followed by `edge,a,b` per edge (a < b).
    void write_dump(std::ostream& out) const;

    bool operator==(const SiteNetwork& other) const;

private:
    std::vector<Site> sites_;
    double radius_;
    std::vector<std::vector<SiteId>> adjacency_;
};

}  // namespace gcsim
