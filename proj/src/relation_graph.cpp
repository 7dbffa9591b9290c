#include "unipart/relation_graph.hpp"

#include <limits>

#include "unipart/errors.hpp"
#include "unipart/parallel.hpp"

namespace unipart {

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Anticommute: return "anticommute";
        case Relation::Commute: return "commute";
        case Relation::QubitWise: return "qwc";
        default: return "generic";
    }
}

RelationGraph RelationGraph::from_edges(std::size_t n,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                        Relation relation) {
    RelationGraph g;
    g.n_vertices = n;
    g.relation = relation;
    g.adjacency.assign(n, BitVector(n));
    for (auto [i, j] : edges) {
        if (i == j) continue;
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
    }
    return g;
}

RelationGraph build_relation_graph(const QubitHamiltonian& h, Relation relation) {
    if (h.terms.empty()) throw ContractError("relation graph needs a nonempty Hamiltonian");
    const std::size_t n = h.terms.size();
    RelationGraph g;
    g.n_vertices = n;
    g.relation = relation;
    g.adjacency.assign(n, BitVector(n));

    auto related = [&](const PauliWord& p, const PauliWord& q) {
        switch (relation) {
            case Relation::Anticommute: return anticommutes(p, q);
            case Relation::Commute: return commutes(p, q);
            case Relation::QubitWise: return qubit_wise_commutes(p, q);
            default: throw ContractError("cannot build a graph for the generic relation");
        }
    };

    parallel_for(n, [&](std::size_t i) {
        const PauliWord& p = h.terms[i].word;
        for (std::size_t j = i + 1; j < n; ++j)
            if (related(p, h.terms[j].word)) g.adjacency[i].set(j);
    });
    parallel_for(n, [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (g.adjacency[i].get(j)) g.adjacency[j].set(i);
    });
    return g;
}

RelationGraph complement(const RelationGraph& g) {
    RelationGraph c;
    c.n_vertices = g.n_vertices;
    switch (g.relation) {
        case Relation::Anticommute: c.relation = Relation::Commute; break;
        case Relation::Commute: c.relation = Relation::Anticommute; break;
        default: c.relation = Relation::Generic; break;
    }
    c.adjacency.reserve(g.n_vertices);
    for (std::size_t i = 0; i < g.n_vertices; ++i) {
        BitVector row = ~g.adjacency[i];
        row.set(i, false);
        c.adjacency.push_back(std::move(row));
    }
    return c;
}

DegreeStats degree_stats(const RelationGraph& g) {
    DegreeStats s;
    if (g.n_vertices == 0) return s;
    s.min_degree = std::numeric_limits<std::size_t>::max();
    std::size_t total = 0;
    for (std::size_t i = 0; i < g.n_vertices; ++i) {
        const std::size_t d = g.degree(i);
        total += d;
        if (d < s.min_degree) s.min_degree = d;
        if (d > s.max_degree) s.max_degree = d;
    }
    s.edge_count = total / 2;
    s.mean_degree = static_cast<double>(total) / static_cast<double>(g.n_vertices);
    if (g.n_vertices > 1) {
        s.density = 2.0 * static_cast<double>(s.edge_count) /
                    (static_cast<double>(g.n_vertices) * static_cast<double>(g.n_vertices - 1));
    }
    return s;
}

std::string to_dimacs(const RelationGraph& g) {
    const DegreeStats s = degree_stats(g);
    std::string out = "p edge " + std::to_string(g.n_vertices) + " " + std::to_string(s.edge_count) + "\n";
    for (std::size_t i = 0; i < g.n_vertices; ++i) {
        g.adjacency[i].for_each_set([&](std::size_t j) {
            if (j > i) out += "e " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
        });
    }
    return out;
}

}  // namespace unipart
