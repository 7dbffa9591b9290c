#pragma once

#include <string>
#include <vector>

#include "unipart/bitvec.hpp"
#include "unipart/hamiltonian.hpp"

namespace unipart {

enum class Relation { Anticommute, Commute, QubitWise, Generic };

std::string relation_name(Relation r);

// Undirected graph over Hamiltonian terms (canonical order), adjacency held
// as per-vertex bit rows so neighborhood set algebra is word-parallel.
// Symmetric, no self-loops.
struct RelationGraph {
    std::size_t n_vertices = 0;
    std::vector<BitVector> adjacency;
    Relation relation = Relation::Generic;

    bool edge(std::size_t i, std::size_t j) const { return adjacency[i].get(j); }
    std::size_t degree(std::size_t i) const { return adjacency[i].count(); }

    static RelationGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    Relation relation = Relation::Generic);
};

// Evaluates the relation's predicate over all term pairs; workers fill
// disjoint upper-triangle rows which are then symmetrized, so the result is
// bit-identical to a sequential build.
RelationGraph build_relation_graph(const QubitHamiltonian& h, Relation relation);

// Complements the edge set. Anticommute and Commute swap tags; anything else
// becomes Generic.
RelationGraph complement(const RelationGraph& g);

struct DegreeStats {
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    double mean_degree = 0.0;
    std::size_t edge_count = 0;
    double density = 0.0;
};

DegreeStats degree_stats(const RelationGraph& g);

// Standard DIMACS edge list: `p edge V E` then `e i j` with 1-based indices.
std::string to_dimacs(const RelationGraph& g);

}  // namespace unipart
