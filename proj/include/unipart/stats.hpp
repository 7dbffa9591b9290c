#pragma once

#include <string>
#include <vector>

#include "unipart/clique_cover.hpp"
#include "unipart/hamiltonian.hpp"

namespace unipart {

struct HeuristicRecord {
    std::string heuristic;
    bool ok = false;
    std::string error;  // set when !ok (e.g. BKT above its vertex cap)
    std::size_t n_groups = 0;
    std::size_t max_size = 0;
    double size_std = 0.0;
    double wall_ms = 0.0;
};

// Per-Hamiltonian record mirroring the stats table layout: term counts with
// and without the identity constant, the QWC group count, relation-graph
// densities, and one entry per requested anticommutativity heuristic.
struct StatsRecord {
    std::string source;
    std::size_t n_qubits = 0;
    std::size_t total_terms = 0;
    std::size_t total_terms_with_identity = 0;
    std::size_t m_qwc = 0;
    double qwc_wall_ms = 0.0;
    double qwc_density = 0.0;
    double anticommute_density = 0.0;
    double commute_density = 0.0;
    std::vector<HeuristicRecord> heuristics;
};

// h must be canonical. The QWC column uses RLF; anticommutativity heuristics
// run concurrently against the shared graph.
StatsRecord compute_stats(const std::string& label, const QubitHamiltonian& h,
                          const std::vector<Heuristic>& heuristics, const CliqueCoverOptions& opts = {});

std::string render_stats_table(const std::vector<StatsRecord>& records, bool include_identity_in_total);

double group_size_std(const Partition& p);
std::size_t max_group_size(const Partition& p);

}  // namespace unipart
