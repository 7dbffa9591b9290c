#include "unipart/stats.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "unipart/parallel.hpp"
#include "unipart/relation_graph.hpp"

namespace unipart {

namespace {

double wall_ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::size_t max_group_size(const Partition& p) {
    std::size_t m = 0;
    for (const auto& g : p.groups) m = std::max(m, g.size());
    return m;
}

double group_size_std(const Partition& p) {
    if (p.groups.empty()) return 0.0;
    double mean = 0.0;
    for (const auto& g : p.groups) mean += static_cast<double>(g.size());
    mean /= static_cast<double>(p.groups.size());
    double var = 0.0;
    for (const auto& g : p.groups) {
        const double d = static_cast<double>(g.size()) - mean;
        var += d * d;
    }
    return std::sqrt(var / static_cast<double>(p.groups.size()));
}

StatsRecord compute_stats(const std::string& label, const QubitHamiltonian& h,
                          const std::vector<Heuristic>& heuristics, const CliqueCoverOptions& opts) {
    StatsRecord rec;
    rec.source = label;
    rec.n_qubits = h.n_qubits;
    rec.total_terms = h.terms.size();
    rec.total_terms_with_identity = h.terms.size() + (h.identity_offset != 0.0 ? 1 : 0);

    {
        const auto start = std::chrono::steady_clock::now();
        const RelationGraph qwc = build_relation_graph(h, Relation::QubitWise);
        const Partition p = clique_cover(qwc, Heuristic::RLF, opts);
        rec.m_qwc = p.groups.size();
        rec.qwc_wall_ms = wall_ms_since(start);
        rec.qwc_density = degree_stats(qwc).density;
    }

    const RelationGraph anti = build_relation_graph(h, Relation::Anticommute);
    rec.anticommute_density = degree_stats(anti).density;
    rec.commute_density = rec.n_qubits > 0 && h.terms.size() > 1 ? 1.0 - rec.anticommute_density : 0.0;
    rec.heuristics.resize(heuristics.size());
    parallel_for(heuristics.size(), [&](std::size_t i) {
        HeuristicRecord& out = rec.heuristics[i];
        out.heuristic = heuristic_id(heuristics[i]);
        const auto start = std::chrono::steady_clock::now();
        try {
            const Partition p = clique_cover(anti, heuristics[i], opts);
            out.ok = true;
            out.n_groups = p.groups.size();
            out.max_size = max_group_size(p);
            out.size_std = group_size_std(p);
        } catch (const std::exception& e) {
            out.ok = false;
            out.error = e.what();
        }
        out.wall_ms = wall_ms_since(start);
    });
    return rec;
}

std::string render_stats_table(const std::vector<StatsRecord>& records, bool include_identity_in_total) {
    std::vector<std::string> columns = {"system", "N", "total", "M_QWC"};
    std::vector<std::string> heuristic_cols;
    if (!records.empty())
        for (const auto& hr : records.front().heuristics) heuristic_cols.push_back(hr.heuristic);
    for (const auto& c : heuristic_cols) columns.push_back(c);

    std::vector<std::vector<std::string>> rows;
    for (const auto& rec : records) {
        std::vector<std::string> row = {
            rec.source, std::to_string(rec.n_qubits),
            std::to_string(include_identity_in_total ? rec.total_terms_with_identity : rec.total_terms),
            std::to_string(rec.m_qwc)};
        for (const auto& hr : rec.heuristics) row.push_back(hr.ok ? std::to_string(hr.n_groups) : "-");
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        width[c] = columns[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto emit_row = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            const bool left = c == 0;
            const std::size_t pad = width[c] - row[c].size();
            if (left) {
                line += row[c] + std::string(pad, ' ');
            } else {
                line += std::string(pad, ' ') + row[c];
            }
        }
        return line + "\n";
    };

    std::string out = emit_row(columns);
    for (const auto& row : rows) out += emit_row(row);

    out += "\ngroup sizes (heuristic: groups, max size, size std, wall ms):\n";
    char buf[200];
    for (const auto& rec : records) {
        std::snprintf(buf, sizeof(buf), "  %s :: graph density: anticommute %.3f, commute %.3f, qwc %.3f\n",
                      rec.source.c_str(), rec.anticommute_density, rec.commute_density, rec.qwc_density);
        out += buf;
        for (const auto& hr : rec.heuristics) {
            if (hr.ok) {
                std::snprintf(buf, sizeof(buf), "  %s :: %s: %zu groups, max %zu, std %.2f, %.1f ms\n",
                              rec.source.c_str(), hr.heuristic.c_str(), hr.n_groups, hr.max_size, hr.size_std,
                              hr.wall_ms);
            } else {
                std::snprintf(buf, sizeof(buf), "  %s :: %s: skipped (%s)\n", rec.source.c_str(),
                              hr.heuristic.c_str(), hr.error.c_str());
            }
            out += buf;
        }
    }
    out += "\nnote: all heuristic ties break toward the smallest canonical term index;\n"
           "counts can differ slightly from other implementations of the same heuristics.\n";
    bool any_identity = false;
    for (const auto& rec : records) any_identity |= rec.total_terms_with_identity != rec.total_terms;
    if (any_identity)
        out += "note: the identity constant is held out of all graphs; conventions that keep\n"
               "it as a term add one singleton group to each anticommutativity count.\n";
    return out;
}

}  // namespace unipart
