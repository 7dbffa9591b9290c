#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unipart/relation_graph.hpp"

namespace unipart {

// GC..COSINE color the complement; Ramsey and BKT extract cliques from the
// source graph; Exact is the small-instance branch-and-bound solver.
enum class Heuristic { GC, LF, SL, DSATUR, RLF, DB, Cosine, Ramsey, BKT, Exact };

Heuristic parse_heuristic(const std::string& id);
std::string heuristic_id(Heuristic h);

// The nine polynomial-or-practical heuristics, excluding Exact.
const std::vector<Heuristic>& all_heuristics();

bool is_coloring_heuristic(Heuristic h);

// Disjoint cover of all vertices; each group is a clique in the source
// graph. Groups are normalized: sorted internally, ordered by first member.
struct Partition {
    std::vector<std::vector<std::size_t>> groups;
    std::string heuristic_tag;
    std::optional<std::uint64_t> seed;
};

struct CliqueCoverOptions {
    std::optional<std::uint64_t> seed;
    std::size_t bkt_vertex_cap = 200;
    std::size_t exact_vertex_cap = 30;
    // Search-node budget for the exact solver's branch and bound.
    std::uint64_t exact_node_budget = 200'000'000;
};

// Minimum-leaning clique cover of g with the chosen heuristic. Deterministic
// for a fixed (graph, heuristic, seed): every tie breaks toward the smallest
// canonical vertex index.
Partition clique_cover(const RelationGraph& g, Heuristic h, const CliqueCoverOptions& opts = {});

// Proper coloring of g itself (no complementing here); coloring-family
// heuristics only. Returns one color index per vertex, classes numbered by
// first occurrence.
std::vector<int> color_graph(const RelationGraph& g, Heuristic h);

// Provably minimum cover via branch and bound over maximal cliques
// (Bron-Kerbosch with pivoting). Limited to vertex_cap vertices.
Partition exact_cover_small(const RelationGraph& g, std::size_t vertex_cap = 30,
                            std::uint64_t node_budget = 200'000'000);

struct PartitionCheck {
    bool valid = true;
    std::string diagnostic;
};

// Checks cover, disjointness, and per-group cliqueness; the diagnostic names
// the first violation found.
PartitionCheck validate_partition(const RelationGraph& g, const Partition& p);

}  // namespace unipart
