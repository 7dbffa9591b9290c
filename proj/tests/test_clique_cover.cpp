#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "unipart/clique_cover.hpp"

using namespace unipart;

namespace {

RelationGraph k3() { return RelationGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }
RelationGraph empty3() { return RelationGraph::from_edges(3, {}); }
RelationGraph path3() { return RelationGraph::from_edges(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("heuristic ids round-trip and unknown ids are rejected") {
    for (Heuristic h : all_heuristics()) CHECK(parse_heuristic(heuristic_id(h)) == h);
    CHECK(parse_heuristic("exact") == Heuristic::Exact);
    CHECK_THROWS_AS(parse_heuristic("nope"), std::invalid_argument);
}

TEST_CASE("complete triangle covers with one group under every heuristic") {
    for (Heuristic h : all_heuristics()) {
        const Partition p = clique_cover(k3(), h);
        CHECK(p.groups.size() == 1);
        CHECK(p.groups[0] == std::vector<std::size_t>{0, 1, 2});
        CHECK(validate_partition(k3(), p).valid);
    }
    CHECK(clique_cover(k3(), Heuristic::Exact).groups.size() == 1);
}

TEST_CASE("edgeless graph needs one group per vertex") {
    for (Heuristic h : all_heuristics()) {
        const Partition p = clique_cover(empty3(), h);
        CHECK(p.groups.size() == 3);
        CHECK(validate_partition(empty3(), p).valid);
    }
}

TEST_CASE("path graph covers with two groups") {
    for (Heuristic h : all_heuristics()) {
        const Partition p = clique_cover(path3(), h);
        CHECK(p.groups.size() == 2);
        CHECK(validate_partition(path3(), p).valid);
    }
}

TEST_CASE("color_graph basics") {
    auto distinct_colors = [](const std::vector<int>& colors) {
        int m = 0;
        for (int c : colors) m = std::max(m, c + 1);
        return m;
    };
    CHECK(distinct_colors(color_graph(k3(), Heuristic::GC)) == 3);
    const RelationGraph c4 = RelationGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(distinct_colors(color_graph(c4, Heuristic::DSATUR)) == 2);
    CHECK(distinct_colors(color_graph(empty3(), Heuristic::LF)) == 1);
    CHECK_THROWS_AS(color_graph(k3(), Heuristic::Ramsey), ContractError);

    // Proper coloring under every coloring heuristic on random graphs.
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 30; ++rep) {
        const RelationGraph g = oracle::random_graph(20, 0.4, rng);
        for (Heuristic h : {Heuristic::GC, Heuristic::LF, Heuristic::SL, Heuristic::DSATUR, Heuristic::RLF,
                            Heuristic::DB, Heuristic::Cosine}) {
            const std::vector<int> colors = color_graph(g, h);
            for (std::size_t i = 0; i < g.n_vertices; ++i)
                for (std::size_t j = i + 1; j < g.n_vertices; ++j)
                    if (g.edge(i, j)) CHECK(colors[i] != colors[j]);
        }
    }
}

TEST_CASE("exact solver matches the stated instances") {
    CHECK(exact_cover_small(k3()).groups.size() == 1);

    // Source graph whose complement is the 5-cycle: chromatic number of C5
    // is 3, so the cover needs 3 groups.
    const RelationGraph c5 = RelationGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const RelationGraph source = complement(c5);
    CHECK(oracle::brute_force_chromatic(c5) == 3);
    const Partition p = exact_cover_small(source);
    CHECK(p.groups.size() == 3);
    CHECK(validate_partition(source, p).valid);
}

TEST_CASE("exact solver equals brute-force complement chromatic number on random 10-vertex graphs") {
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 40; ++rep) {
        const double density = 0.15 + 0.07 * (rep % 10);
        const RelationGraph g = oracle::random_graph(10, density, rng);
        const Partition p = exact_cover_small(g);
        CHECK(validate_partition(g, p).valid);
        CHECK(p.groups.size() == oracle::brute_force_chromatic(complement(g)));
    }
}

TEST_CASE("caps raise resource errors") {
    std::mt19937_64 rng(61);
    const RelationGraph g = oracle::random_graph(40, 0.3, rng);
    CHECK_THROWS_AS(exact_cover_small(g, 30), ResourceLimitError);
    CliqueCoverOptions opts;
    opts.bkt_vertex_cap = 20;
    CHECK_THROWS_AS(clique_cover(g, Heuristic::BKT, opts), ResourceLimitError);
}

TEST_CASE("every heuristic produces valid partitions on random graphs") {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 2 + rng() % 48;
        const double density = 0.05 + 0.9 * (rep % 7) / 6.0;
        const RelationGraph g = oracle::random_graph(n, density, rng);
        for (Heuristic h : all_heuristics()) {
            const Partition p = clique_cover(g, h);
            const PartitionCheck check = validate_partition(g, p);
            INFO("heuristic ", heuristic_id(h), " n=", n, " diagnostic: ", check.diagnostic);
            CHECK(check.valid);
        }
    }
}

TEST_CASE("heuristics never beat the exact solver on small graphs") {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 3 + rng() % 10;  // up to 12
        const RelationGraph g = oracle::random_graph(n, 0.1 + 0.08 * (rep % 10), rng);
        const std::size_t exact = exact_cover_small(g).groups.size();
        CHECK(exact == oracle::brute_force_chromatic(complement(g)));
        for (Heuristic h : all_heuristics()) CHECK(clique_cover(g, h).groups.size() >= exact);
    }
}

TEST_CASE("identical inputs give identical partitions") {
    std::mt19937_64 rng(73);
    const RelationGraph g = oracle::random_graph(30, 0.45, rng);
    for (Heuristic h : all_heuristics()) {
        const Partition a = clique_cover(g, h);
        const Partition b = clique_cover(g, h);
        CHECK(a.groups == b.groups);
    }
}

TEST_CASE("an isolated vertex adds exactly one group") {
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 12; ++rep) {
        const std::size_t n = 4 + rng() % 12;
        const RelationGraph g = oracle::random_graph(n, 0.4, rng);
        // Same graph with one extra vertex connected to nothing.
        RelationGraph bigger;
        bigger.n_vertices = n + 1;
        bigger.relation = g.relation;
        for (std::size_t v = 0; v < n; ++v) {
            BitVector row(n + 1);
            g.adjacency[v].for_each_set([&](std::size_t w) { row.set(w); });
            bigger.adjacency.push_back(std::move(row));
        }
        bigger.adjacency.push_back(BitVector(n + 1));
        for (Heuristic h : all_heuristics()) {
            INFO("heuristic ", heuristic_id(h));
            CHECK(clique_cover(bigger, h).groups.size() == clique_cover(g, h).groups.size() + 1);
        }
    }
}

TEST_CASE("validate_partition reports the first violation") {
    const RelationGraph g = path3();
    Partition bad;
    bad.groups = {{0, 2}, {1}};  // 0-2 is not an edge
    const PartitionCheck c1 = validate_partition(g, bad);
    CHECK_FALSE(c1.valid);
    CHECK(c1.diagnostic.find("(0, 2)") != std::string::npos);

    Partition missing;
    missing.groups = {{0, 1}};
    const PartitionCheck c2 = validate_partition(g, missing);
    CHECK_FALSE(c2.valid);
    CHECK(c2.diagnostic.find("not covered") != std::string::npos);

    Partition dup;
    dup.groups = {{0, 1}, {1}, {2}};
    CHECK_FALSE(validate_partition(g, dup).valid);
}

TEST_CASE("partitions cover between the extremes on bipartite-ish graphs") {
    // C4's complement is two disjoint edges: cover needs exactly 2 groups.
    const RelationGraph c4 = RelationGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(exact_cover_small(c4).groups.size() == 2);
    for (Heuristic h : all_heuristics()) {
        const std::size_t m = clique_cover(c4, h).groups.size();
        CHECK(m >= 2);
        CHECK(m <= 4);
    }
}
