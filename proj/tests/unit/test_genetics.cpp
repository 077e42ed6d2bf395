#include <doctest.h>

#include "gcsim/errors.hpp"
#include "gcsim/genetics.hpp"
#include "oracles.hpp"

using namespace gcsim;

namespace {

SiteNetwork test_network(std::uint64_t seed, std::size_t n = 20) {
    Rng rng(seed);
    return SiteNetwork::generate(n, 0.35, {5, 15}, rng);
}

Genome stay_genome(SiteId site, std::size_t length) {
    Genome g;
    g.genes.assign(length, Gene{site, ForageStrategy::standard, false, false, false});
    return g;
}

}  // namespace

TEST_CASE("random_genome: length 1 is a single valid gene") {
    const SiteNetwork net = test_network(1);
    Rng rng(2);
    const Genome g = random_genome(net, 1, rng);
    CHECK(g.size() == 1);
    CHECK(oracle::valid_path(net, g.genes));
}

TEST_CASE("random_genome: 100 genomes pass the adjacency oracle") {
    const SiteNetwork net = test_network(3);
    Rng rng(4);
    for (int i = 0; i < 100; ++i) CHECK(oracle::valid_path(net, random_genome(net, 200, rng).genes));
}

TEST_CASE("random_genome: same seed, same genome") {
    const SiteNetwork net = test_network(5);
    Rng a(6), b(6);
    CHECK(random_genome(net, 200, a) == random_genome(net, 200, b));
}

TEST_CASE("recombine: identical parents give the parent") {
    const SiteNetwork net = test_network(7);
    Rng rng(8);
    const Genome a = random_genome(net, 50, rng);
    for (int i = 0; i < 20; ++i) CHECK(recombine(a, a, rng) == a);
}

TEST_CASE("recombine: no shared site falls back to the first parent") {
    Rng rng(9);
    const Genome a = stay_genome(0, 10);
    const Genome b = stay_genome(1, 10);
    CHECK(recombine(a, b, rng) == a);
}

TEST_CASE("recombine: child is a prefix of one parent and a suffix of the other") {
    const SiteNetwork net = test_network(10, 4);
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Genome a = random_genome(net, 30, rng);
        const Genome b = random_genome(net, 30, rng);
        const Genome c = recombine(a, b, rng);
        bool explained = c == a;
        for (std::size_t k = 0; k < 30 && !explained; ++k) {
            if (a.genes[k].site != b.genes[k].site) continue;
            bool match = true;
            for (std::size_t i = 0; i < 30; ++i) match = match && c.genes[i] == (i < k ? a.genes[i] : b.genes[i]);
            explained = match;
        }
        CHECK(explained);
    }
}

TEST_CASE("recombine: length mismatch is a contract error") {
    Rng rng(12);
    CHECK_THROWS_AS((void)recombine(stay_genome(0, 4), stay_genome(0, 5), rng), ContractError);
}

TEST_CASE("mutate_genome: zero rates is the identity") {
    const SiteNetwork net = test_network(13);
    Rng rng(14);
    const Genome g = random_genome(net, 200, rng);
    CHECK(mutate_genome(g, net, {0.0, 0.0}, rng) == g);
}

TEST_CASE("mutate_genome: point rate 1 flips each flag with probability one half") {
    const SiteNetwork net = test_network(15);
    Rng rng(16);
    const Genome g = random_genome(net, 10000, rng);
    const Genome m = mutate_genome(g, net, {1.0, 0.0}, rng);
    int breed = 0, learn = 0, social = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        breed += g.genes[i].breed != m.genes[i].breed;
        learn += g.genes[i].learn != m.genes[i].learn;
        social += g.genes[i].social != m.genes[i].social;
        CHECK(g.genes[i].site == m.genes[i].site);
    }
    // n = 10^4, p = 1/2: mean 5000, sd 50, 3 sd bounds
    for (int flips : {breed, learn, social}) {
        CHECK(flips >= 4850);
        CHECK(flips <= 5150);
    }
}

TEST_CASE("mutate_genome: path mutation reroutes but keeps the length") {
    const SiteNetwork net = test_network(17);
    Rng rng(18);
    const Genome g = random_genome(net, 200, rng);
    int changed = 0;
    for (int i = 0; i < 200; ++i) {
        const Genome m = mutate_genome(g, net, {0.0, 1.0}, rng);
        CHECK(m.size() == g.size());
        CHECK(oracle::valid_path(net, m.genes));
        changed += !(m == g);
    }
    CHECK(changed > 100);
}

TEST_CASE("develop: G == T gives one window") {
    const SiteNetwork net = test_network(19);
    Rng rng(20);
    const Genome g = random_genome(net, 20, rng);
    const Memome m = develop(g, 20, net, EconomyParams{});
    CHECK(m.size() == 1);
    CHECK(oracle::scan_windows(net, EconomyParams{}, g.genes, 20).windows == 1);
}

TEST_CASE("develop: G=10, T=3 considers 8 windows and keeps the best per start site") {
    const SiteNetwork net = test_network(21, 6);
    Rng rng(22);
    const EconomyParams econ;
    const Genome g = random_genome(net, 10, rng);
    const auto scan = oracle::scan_windows(net, econ, g.genes, 3);
    CHECK(scan.windows == 8);
    const Memome m = develop(g, 3, net, econ);
    CHECK(m.size() == scan.best.size());
    for (const auto& [site, best] : scan.best) {
        REQUIRE(m.find(site) != nullptr);
        CHECK(m.find(site)->fitness == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("develop: genome shorter than a day is a contract error") {
    CHECK_THROWS_AS((void)develop(stay_genome(0, 3), 4, test_network(23), EconomyParams{}), ContractError);
}

TEST_CASE("genome_time_allocation: counts") {
    Genome g = stay_genome(0, 4);
    SUBCASE("no flags") {
        const auto t = genome_time_allocation(g);
        CHECK(t.breed == 0.0);
        CHECK(t.learn == 0.0);
        CHECK(t.social == 0.0);
    }
    SUBCASE("all breed") {
        for (auto& gene : g.genes) gene.breed = true;
        CHECK(genome_time_allocation(g).breed == 1.0);
    }
    SUBCASE("breed on 1, learn on 2, social on 3") {
        g.genes[0].breed = true;
        g.genes[0].learn = g.genes[1].learn = true;
        g.genes[1].social = g.genes[2].social = g.genes[3].social = true;
        const auto t = genome_time_allocation(g);
        CHECK(t.breed == 0.25);
        CHECK(t.learn == 0.5);
        CHECK(t.social == 0.75);
    }
}

TEST_CASE("lamarck_genome: valid path of the requested length built from archived behavior") {
    const SiteNetwork net = test_network(24);
    const EconomyParams econ;
    Rng rng(25);
    for (int trial = 0; trial < 50; ++trial) {
        const Memome a = develop(random_genome(net, 60, rng), 10, net, econ);
        const Memome b = develop(random_genome(net, 60, rng), 10, net, econ);
        const Genome child = lamarck_genome(a, b, 200, net, rng);
        CHECK(child.size() == 200);
        CHECK(oracle::valid_path(net, child.genes));
    }
    // Short target: the fittest archived memeplex of the first parent leads.
    const Memome a = develop(random_genome(net, 60, rng), 10, net, econ);
    const Memome b = develop(random_genome(net, 60, rng), 10, net, econ);
    const Memeplex* best = nullptr;
    for (const auto& [site, m] : a)
        if (!best || m.fitness > best->fitness) best = &m;
    const Genome child = lamarck_genome(a, b, 10, net, rng);
    CHECK(child.genes == best->genes);
}
