#include "gcsim/network.hpp"

#include "gcsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gcsim {
namespace {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

SiteNetwork::SiteNetwork(std::vector<Site> sites, double radius)
    : sites_(std::move(sites)), radius_(radius), adjacency_(sites_.size()) {
    require(radius > 0.0, "SiteNetwork: radius must be positive");
    for (const Site& s : sites_) {
        require(s.capacity >= 0.0, "SiteNetwork: negative capacity");
        require(s.stock >= 0.0 && s.stock <= s.capacity, "SiteNetwork: stock outside [0, capacity]");
        require(s.position.x >= 0.0 && s.position.x <= 1.0 && s.position.y >= 0.0 &&
                    s.position.y <= 1.0,
                "SiteNetwork: site outside the unit square");
    }
    for (std::size_t a = 0; a < sites_.size(); ++a) {
        for (std::size_t b = a + 1; b < sites_.size(); ++b) {
            if (distance(sites_[a].position, sites_[b].position) <= radius_) {
                adjacency_[a].push_back(static_cast<SiteId>(b));
                adjacency_[b].push_back(static_cast<SiteId>(a));
            }
        }
    }
    // Both loops append in increasing order, so each list is already sorted.
}

SiteNetwork SiteNetwork::generate(std::size_t n_sites, double radius, CapacityRange capacity,
                                  Rng& rng) {
    require(n_sites >= 1, "generate_network: n_sites must be at least 1");
    require(radius > 0.0 && radius <= std::sqrt(2.0), "generate_network: radius must be in (0, sqrt(2)]");
    require(capacity.min >= 0.0 && capacity.min <= capacity.max,
            "generate_network: capacity range must be non-empty and non-negative");

    for (int attempt = 0; attempt < kMaxConnectivityRetries; ++attempt) {
        std::vector<Site> sites(n_sites);
        for (Site& s : sites) {
            s.position.x = rng.uniform01();
            s.position.y = rng.uniform01();
            s.capacity = rng.uniform(capacity.min, capacity.max);
            s.stock = s.capacity;
        }
        SiteNetwork net(std::move(sites), radius);
        if (net.connected()) return net;
    }
    throw NetworkGenerationError("could not generate a connected network with n_sites=" +
                                 std::to_string(n_sites) + " and radius=" + std::to_string(radius) +
                                 " after " + std::to_string(kMaxConnectivityRetries) + " attempts");
}

const Site& SiteNetwork::site(SiteId s) const {
    if (!contains(s)) throw std::out_of_range("site id " + std::to_string(s) + " out of range");
    return sites_[s];
}

std::span<const SiteId> SiteNetwork::neighbors(SiteId s) const {
    if (!contains(s)) throw std::out_of_range("site id " + std::to_string(s) + " out of range");
    return adjacency_[s];
}

bool SiteNetwork::adjacent(SiteId a, SiteId b) const {
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t SiteNetwork::edge_count() const noexcept {
    std::size_t degree_sum = 0;
    for (const auto& nb : adjacency_) degree_sum += nb.size();
    return degree_sum / 2;
}

bool SiteNetwork::connected() const {
    if (sites_.empty()) return true;
    std::vector<char> seen(sites_.size(), 0);
    std::vector<SiteId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const SiteId s = stack.back();
        stack.pop_back();
        for (SiteId n : adjacency_[s]) {
            if (!seen[n]) {
                seen[n] = 1;
                ++reached;
                stack.push_back(n);
            }
        }
    }
    return reached == sites_.size();
}

std::vector<SiteId> SiteNetwork::shortest_path(SiteId from, SiteId to) const {
    if (!contains(from) || !contains(to)) throw std::out_of_range("shortest_path: site id out of range");
    if (from == to) return {from};
    constexpr SiteId kUnseen = static_cast<SiteId>(-1);
    std::vector<SiteId> parent(sites_.size(), kUnseen);
    parent[from] = from;
    std::deque<SiteId> queue{from};
    while (!queue.empty()) {
        const SiteId s = queue.front();
        queue.pop_front();
        if (s == to) break;
        for (SiteId n : adjacency_[s]) {
            if (parent[n] == kUnseen) {
                parent[n] = s;
                queue.push_back(n);
            }
        }
    }
    if (parent[to] == kUnseen) return {};
    std::vector<SiteId> path{to};
    for (SiteId s = to; s != from; s = parent[s]) path.push_back(parent[s]);
    std::reverse(path.begin(), path.end());
    return path;
}

void SiteNetwork::regrow(double rate) {
    require(rate >= 0.0, "regrow: rate must be non-negative");
    for (Site& s : sites_) s.stock = std::min(s.capacity, s.stock + rate);
}

double SiteNetwork::take(SiteId s, double amount) {
    if (!contains(s)) throw std::out_of_range("take: site id out of range");
    Site& site = sites_[s];
    const double taken = std::clamp(amount, 0.0, site.stock);
    site.stock -= taken;
    if (site.stock < 0.0) site.stock = 0.0;
    return taken;
}

void SiteNetwork::refill() {
    for (Site& s : sites_) s.stock = s.capacity;
}

void SiteNetwork::write_dump(std::ostream& out) const {
    char buf[128];
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        const Site& s = sites_[i];
        std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f,%.6f\n", i, s.position.x, s.position.y, s.capacity);
        out << buf;
    }
    for (std::size_t a = 0; a < adjacency_.size(); ++a) {
        for (SiteId b : adjacency_[a]) {
            if (b > a) out << "edge," << a << ',' << b << '\n';
        }
    }
}

bool SiteNetwork::operator==(const SiteNetwork& other) const {
    if (radius_ != other.radius_ || sites_.size() != other.sites_.size()) return false;
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        const Site& a = sites_[i];
        const Site& b = other.sites_[i];
        if (a.position.x != b.position.x || a.position.y != b.position.y || a.capacity != b.capacity ||
            a.stock != b.stock)
            return false;
    }
    return adjacency_ == other.adjacency_;
}

}  // namespace gcsim
