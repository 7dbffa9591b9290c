#include "unipart/clique_cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "unipart/errors.hpp"

namespace unipart {

namespace {

using Groups = std::vector<std::vector<std::size_t>>;

// ---------------------------------------------------------------------------
// coloring family
// ---------------------------------------------------------------------------

std::vector<int> greedy_in_order(const RelationGraph& g, const std::vector<std::size_t>& order) {
    std::vector<int> color(g.n_vertices, -1);
    std::vector<char> used(g.n_vertices + 1, 0);
    for (std::size_t v : order) {
        g.adjacency[v].for_each_set([&](std::size_t w) {
            if (color[w] >= 0) used[color[w]] = 1;
        });
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
        g.adjacency[v].for_each_set([&](std::size_t w) {
            if (color[w] >= 0) used[color[w]] = 0;
        });
    }
    return color;
}

std::vector<std::size_t> natural_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    return order;
}

std::vector<std::size_t> largest_first_order(const RelationGraph& g) {
    auto order = natural_order(g.n_vertices);
    std::vector<std::size_t> deg(g.n_vertices);
    for (std::size_t v = 0; v < g.n_vertices; ++v) deg[v] = g.degree(v);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return a < b;
    });
    return order;
}

// Matula-Beck: peel minimum-degree vertices, color in reverse removal order.
std::vector<std::size_t> smallest_last_order(const RelationGraph& g) {
    const std::size_t n = g.n_vertices;
    BitVector alive(n);
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) {
        alive.set(v);
        deg[v] = g.degree(v);
    }
    std::vector<std::size_t> removal;
    removal.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = alive.find_first(); v < n; v = alive.find_next(v + 1))
            if (best == n || deg[v] < deg[best]) best = v;
        removal.push_back(best);
        alive.set(best, false);
        g.adjacency[best].for_each_set([&](std::size_t w) {
            if (alive.get(w)) --deg[w];
        });
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

std::vector<int> dsatur(const RelationGraph& g) {
    const std::size_t n = g.n_vertices;
    std::vector<int> color(n, -1);
    std::vector<BitVector> neighbor_colors(n, BitVector(n + 1));
    std::vector<std::size_t> unc_degree(n);
    for (std::size_t v = 0; v < n; ++v) unc_degree[v] = g.degree(v);

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        std::size_t pick_sat = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            const std::size_t sat = neighbor_colors[v].count();
            if (pick == n || sat > pick_sat || (sat == pick_sat && unc_degree[v] > unc_degree[pick])) {
                pick = v;
                pick_sat = sat;
            }
        }
        std::size_t c = 0;
        while (neighbor_colors[pick].get(c)) ++c;
        color[pick] = static_cast<int>(c);
        g.adjacency[pick].for_each_set([&](std::size_t w) {
            if (color[w] < 0) {
                neighbor_colors[w].set(c);
                --unc_degree[w];
            }
        });
    }
    return color;
}

std::vector<int> recursive_largest_first(const RelationGraph& g) {
    const std::size_t n = g.n_vertices;
    std::vector<int> color(n, -1);
    BitVector uncolored(n);
    for (std::size_t v = 0; v < n; ++v) uncolored.set(v);

    int c = 0;
    while (uncolored.any()) {
        std::size_t seed = n;
        std::size_t seed_deg = 0;
        for (std::size_t v = uncolored.find_first(); v < n; v = uncolored.find_next(v + 1)) {
            const std::size_t d = g.adjacency[v].and_count(uncolored);
            if (seed == n || d > seed_deg) {
                seed = v;
                seed_deg = d;
            }
        }
        color[seed] = c;
        BitVector candidates = uncolored & ~g.adjacency[seed];
        candidates.set(seed, false);
        BitVector blocked = uncolored & g.adjacency[seed];
        uncolored.set(seed, false);
        while (candidates.any()) {
            std::size_t pick = n;
            std::size_t pick_score = 0;
            for (std::size_t v = candidates.find_first(); v < n; v = candidates.find_next(v + 1)) {
                const std::size_t s = g.adjacency[v].and_count(blocked);
                if (pick == n || s > pick_score) {
                    pick = v;
                    pick_score = s;
                }
            }
            color[pick] = c;
            uncolored.set(pick, false);
            blocked |= candidates & g.adjacency[pick];
            candidates &= ~g.adjacency[pick];
            candidates.set(pick, false);
        }
        ++c;
    }
    return color;
}

// Shared machinery for the two contraction heuristics: merging a pair of
// non-adjacent vertices commits them to one color class; when the merged
// graph is complete, the super-vertices are the classes.
struct ContractionState {
    std::size_t n;
    std::vector<BitVector> adj;
    BitVector alive;
    Groups members;

    explicit ContractionState(const RelationGraph& g)
        : n(g.n_vertices), adj(g.adjacency), alive(g.n_vertices), members(g.n_vertices) {
        for (std::size_t v = 0; v < n; ++v) {
            alive.set(v);
            members[v] = {v};
        }
    }

    void contract(std::size_t into, std::size_t from) {
        members[into].insert(members[into].end(), members[from].begin(), members[from].end());
        members[from].clear();
        const BitVector from_row = adj[from];
        from_row.for_each_set([&](std::size_t w) {
            adj[w].set(from, false);
            adj[w].set(into);
            adj[into].set(w);
        });
        adj[into].set(into, false);
        adj[from].clear();
        alive.set(from, false);
    }

    Groups classes() const {
        Groups out;
        for (std::size_t v = alive.find_first(); v < n; v = alive.find_next(v + 1)) out.push_back(members[v]);
        return out;
    }
};

Groups contract_dutton_brigham(const RelationGraph& g) {
    ContractionState st(g);
    while (true) {
        std::size_t bu = st.n, bv = st.n;
        std::size_t best = 0;
        bool found = false;
        for (std::size_t u = st.alive.find_first(); u < st.n; u = st.alive.find_next(u + 1)) {
            BitVector cand = st.alive & ~st.adj[u];
            cand.set(u, false);
            for (std::size_t v = cand.find_next(u + 1); v < st.n; v = cand.find_next(v + 1)) {
                const std::size_t common = st.adj[u].and_count(st.adj[v]);
                if (!found || common > best) {
                    found = true;
                    best = common;
                    bu = u;
                    bv = v;
                }
            }
        }
        if (!found) break;
        st.contract(bu, bv);
    }
    return st.classes();
}

// COSINE-style contraction: anchor on the highest-degree vertex that still
// has a non-neighbor, then absorb the non-neighbor sharing the most
// neighbors with it.
Groups contract_cosine(const RelationGraph& g) {
    ContractionState st(g);
    while (true) {
        std::size_t anchor = st.n;
        std::size_t anchor_deg = 0;
        for (std::size_t u = st.alive.find_first(); u < st.n; u = st.alive.find_next(u + 1)) {
            BitVector non = st.alive & ~st.adj[u];
            non.set(u, false);
            if (non.none()) continue;
            const std::size_t d = st.adj[u].count();
            if (anchor == st.n || d > anchor_deg) {
                anchor = u;
                anchor_deg = d;
            }
        }
        if (anchor == st.n) break;
        BitVector non = st.alive & ~st.adj[anchor];
        non.set(anchor, false);
        std::size_t partner = st.n;
        std::size_t best = 0;
        for (std::size_t v = non.find_first(); v < st.n; v = non.find_next(v + 1)) {
            const std::size_t common = st.adj[anchor].and_count(st.adj[v]);
            if (partner == st.n || common > best) {
                partner = v;
                best = common;
            }
        }
        st.contract(anchor, partner);
    }
    return st.classes();
}

std::vector<int> colors_from_classes(std::size_t n, const Groups& classes) {
    std::vector<int> color(n, -1);
    // Number classes by their smallest member for a canonical labeling.
    Groups sorted = classes;
    for (auto& cls : sorted) std::sort(cls.begin(), cls.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t c = 0; c < sorted.size(); ++c)
        for (std::size_t v : sorted[c]) color[v] = static_cast<int>(c);
    return color;
}

std::vector<int> color_impl(const RelationGraph& g, Heuristic h) {
    switch (h) {
        case Heuristic::GC: return greedy_in_order(g, natural_order(g.n_vertices));
        case Heuristic::LF: return greedy_in_order(g, largest_first_order(g));
        case Heuristic::SL: return greedy_in_order(g, smallest_last_order(g));
        case Heuristic::DSATUR: return dsatur(g);
        case Heuristic::RLF: return recursive_largest_first(g);
        case Heuristic::DB: return colors_from_classes(g.n_vertices, contract_dutton_brigham(g));
        case Heuristic::Cosine: return colors_from_classes(g.n_vertices, contract_cosine(g));
        default: throw ContractError("'" + heuristic_id(h) + "' is not a coloring heuristic");
    }
}

// ---------------------------------------------------------------------------
// clique-extraction family
// ---------------------------------------------------------------------------

struct RamseyResult {
    BitVector clique, indep;
};

// Boppana-Halldorsson Ramsey split with an explicit frame stack; recursion
// depth equals the vertex count, which overflows the call stack on large
// Hamiltonians.
RamseyResult ramsey(const std::vector<BitVector>& adj, const BitVector& start) {
    const std::size_t n = start.size();
    struct Frame {
        BitVector p;
        std::size_t v = 0;
        int phase = 0;
        RamseyResult first;
    };
    std::vector<Frame> stack;
    stack.push_back({start, 0, 0, {}});
    RamseyResult ret{BitVector(n), BitVector(n)};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.phase == 0) {
            if (f.p.none()) {
                ret = {BitVector(n), BitVector(n)};
                stack.pop_back();
                continue;
            }
            f.v = f.p.find_first();
            f.phase = 1;
            BitVector child = f.p & adj[f.v];
            stack.push_back({std::move(child), 0, 0, {}});
        } else if (f.phase == 1) {
            f.first = ret;
            f.phase = 2;
            BitVector child = f.p & ~adj[f.v];
            child.set(f.v, false);
            stack.push_back({std::move(child), 0, 0, {}});
        } else {
            BitVector with_v_clique = f.first.clique;
            with_v_clique.set(f.v);
            BitVector with_v_indep = ret.indep;
            with_v_indep.set(f.v);
            RamseyResult merged;
            merged.clique = with_v_clique.count() >= ret.clique.count() ? with_v_clique : ret.clique;
            merged.indep = with_v_indep.count() >= f.first.indep.count() ? with_v_indep : f.first.indep;
            ret = std::move(merged);
            stack.pop_back();
        }
    }
    return ret;
}

Groups ramsey_clique_removal(const RelationGraph& g) {
    BitVector remaining(g.n_vertices);
    for (std::size_t v = 0; v < g.n_vertices; ++v) remaining.set(v);
    Groups out;
    while (remaining.any()) {
        const RamseyResult r = ramsey(g.adjacency, remaining);
        std::vector<std::size_t> group;
        r.clique.for_each_set([&](std::size_t v) { group.push_back(v); });
        remaining &= ~r.clique;
        out.push_back(std::move(group));
    }
    return out;
}

// Maximum clique within `alive` by Bron-Kerbosch branching with the Tomita
// pivot and the |R| + |P| size bound.
class MaxCliqueSearch {
  public:
    explicit MaxCliqueSearch(const std::vector<BitVector>& adj) : adj_(adj) {}

    BitVector run(const BitVector& alive) {
        best_ = BitVector(alive.size());
        std::vector<std::size_t> r;
        expand(r, alive);
        return best_;
    }

  private:
    void expand(std::vector<std::size_t>& r, const BitVector& p) {
        const std::size_t pc = p.count();
        if (pc == 0) {
            if (r.size() > best_.count()) {
                best_ = BitVector(p.size());
                for (std::size_t v : r) best_.set(v);
            }
            return;
        }
        if (r.size() + pc <= best_.count()) return;
        std::size_t pivot = p.find_first();
        std::size_t pivot_score = 0;
        for (std::size_t u = p.find_first(); u < p.size(); u = p.find_next(u + 1)) {
            const std::size_t s = p.and_count(adj_[u]);
            if (s > pivot_score) {
                pivot = u;
                pivot_score = s;
            }
        }
        BitVector ext = p & ~adj_[pivot];
        std::vector<std::size_t> branch;
        ext.for_each_set([&](std::size_t v) { branch.push_back(v); });
        BitVector rest = p;
        for (std::size_t v : branch) {
            r.push_back(v);
            expand(r, rest & adj_[v]);
            r.pop_back();
            rest.set(v, false);
        }
    }

    const std::vector<BitVector>& adj_;
    BitVector best_;
};

Groups bkt_cover(const RelationGraph& g, std::size_t vertex_cap) {
    if (g.n_vertices > vertex_cap)
        throw ResourceLimitError("bkt: graph has " + std::to_string(g.n_vertices) +
                                 " vertices, above the cap of " + std::to_string(vertex_cap));
    BitVector remaining(g.n_vertices);
    for (std::size_t v = 0; v < g.n_vertices; ++v) remaining.set(v);
    MaxCliqueSearch search(g.adjacency);
    Groups out;
    while (remaining.any()) {
        const BitVector clique = search.run(remaining);
        std::vector<std::size_t> group;
        clique.for_each_set([&](std::size_t v) { group.push_back(v); });
        remaining &= ~clique;
        out.push_back(std::move(group));
    }
    return out;
}

// ---------------------------------------------------------------------------
// partition assembly
// ---------------------------------------------------------------------------

Partition normalize(Groups groups, Heuristic h, std::optional<std::uint64_t> seed) {
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
    for (auto& g : groups) std::sort(g.begin(), g.end());
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    Partition p;
    p.groups = std::move(groups);
    p.heuristic_tag = heuristic_id(h);
    p.seed = seed;
    return p;
}

Groups groups_from_colors(const std::vector<int>& colors) {
    int n_colors = 0;
    for (int c : colors) n_colors = std::max(n_colors, c + 1);
    Groups out(static_cast<std::size_t>(n_colors));
    for (std::size_t v = 0; v < colors.size(); ++v) out[static_cast<std::size_t>(colors[v])].push_back(v);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// exact solver: branch and bound over maximal cliques
// ---------------------------------------------------------------------------

namespace {

class ExactCover {
  public:
    ExactCover(const RelationGraph& g, std::uint64_t node_budget) : n_(g.n_vertices), budget_(node_budget) {
        adj_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) adj_[v] = g.adjacency[v].words().empty() ? 0 : g.adjacency[v].words()[0];
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    Groups solve() {
        enumerate_maximal(0, full_, 0);
        containing_.assign(n_, {});
        for (std::size_t k = 0; k < cliques_.size(); ++k) {
            std::uint64_t m = cliques_[k];
            while (m) {
                containing_[static_cast<std::size_t>(std::countr_zero(m))].push_back(k);
                m &= m - 1;
            }
        }
        greedy_start();
        std::vector<std::size_t> chosen;
        descend(full_, 0, chosen);
        return build_groups();
    }

  private:
    void tick() {
        if (++nodes_ > budget_)
            throw ResourceLimitError("exact solver exceeded its search budget of " + std::to_string(budget_) +
                                     " nodes");
    }

    void enumerate_maximal(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        tick();
        if (!p && !x) {
            cliques_.push_back(r);
            return;
        }
        std::uint64_t px = p | x;
        std::size_t pivot = static_cast<std::size_t>(std::countr_zero(px));
        int pivot_score = -1;
        while (px) {
            const std::size_t u = static_cast<std::size_t>(std::countr_zero(px));
            px &= px - 1;
            const int s = std::popcount(p & adj_[u]);
            if (s > pivot_score) {
                pivot_score = s;
                pivot = u;
            }
        }
        std::uint64_t ext = p & ~adj_[pivot];
        while (ext) {
            const std::size_t v = static_cast<std::size_t>(std::countr_zero(ext));
            const std::uint64_t bit = std::uint64_t{1} << v;
            ext &= ext - 1;
            enumerate_maximal(r | bit, p & adj_[v], x & adj_[v]);
            p &= ~bit;
            x |= bit;
        }
    }

    // Independent vertices in the source graph need pairwise distinct groups.
    std::size_t lower_bound(std::uint64_t uncovered) const {
        std::size_t count = 0;
        while (uncovered) {
            const std::size_t v = static_cast<std::size_t>(std::countr_zero(uncovered));
            uncovered &= ~(adj_[v] | (std::uint64_t{1} << v));
            ++count;
        }
        return count;
    }

    void greedy_start() {
        std::uint64_t uncovered = full_;
        best_chosen_.clear();
        while (uncovered) {
            std::size_t pick = 0;
            int score = -1;
            for (std::size_t k = 0; k < cliques_.size(); ++k) {
                const int s = std::popcount(cliques_[k] & uncovered);
                if (s > score) {
                    score = s;
                    pick = k;
                }
            }
            best_chosen_.push_back(pick);
            uncovered &= ~cliques_[pick];
        }
        best_count_ = best_chosen_.size();
    }

    void descend(std::uint64_t uncovered, std::size_t count, std::vector<std::size_t>& chosen) {
        tick();
        if (!uncovered) {
            best_count_ = count;
            best_chosen_ = chosen;
            return;
        }
        if (count + lower_bound(uncovered) >= best_count_) return;

        // Branch on the uncovered vertex with the fewest candidate cliques.
        std::size_t branch_v = 0;
        std::size_t branch_options = ~std::size_t{0};
        std::uint64_t m = uncovered;
        while (m) {
            const std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
            m &= m - 1;
            if (containing_[v].size() < branch_options) {
                branch_options = containing_[v].size();
                branch_v = v;
            }
        }
        std::vector<std::size_t> candidates = containing_[branch_v];
        std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
            const int ca = std::popcount(cliques_[a] & uncovered);
            const int cb = std::popcount(cliques_[b] & uncovered);
            if (ca != cb) return ca > cb;
            return a < b;
        });
        for (std::size_t k : candidates) {
            chosen.push_back(k);
            descend(uncovered & ~cliques_[k], count + 1, chosen);
            chosen.pop_back();
        }
    }

    Groups build_groups() const {
        Groups out;
        std::uint64_t unassigned = full_;
        for (std::size_t k : best_chosen_) {
            std::uint64_t take = cliques_[k] & unassigned;
            if (!take) continue;
            std::vector<std::size_t> group;
            while (take) {
                group.push_back(static_cast<std::size_t>(std::countr_zero(take)));
                take &= take - 1;
            }
            for (std::size_t v : group) unassigned &= ~(std::uint64_t{1} << v);
            out.push_back(std::move(group));
        }
        return out;
    }

    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> cliques_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<std::size_t> best_chosen_;
    std::size_t best_count_ = 0;
};

}  // namespace

Partition exact_cover_small(const RelationGraph& g, std::size_t vertex_cap, std::uint64_t node_budget) {
    if (g.n_vertices > vertex_cap)
        throw ResourceLimitError("exact solver: graph has " + std::to_string(g.n_vertices) +
                                 " vertices, above the cap of " + std::to_string(vertex_cap));
    if (g.n_vertices > 64) throw ResourceLimitError("exact solver handles at most 64 vertices");
    if (g.n_vertices == 0) throw ContractError("cannot cover an empty graph");
    ExactCover solver(g, node_budget);
    return normalize(solver.solve(), Heuristic::Exact, std::nullopt);
}

// ---------------------------------------------------------------------------
// public surface
// ---------------------------------------------------------------------------

Heuristic parse_heuristic(const std::string& id) {
    if (id == "gc") return Heuristic::GC;
    if (id == "lf") return Heuristic::LF;
    if (id == "sl") return Heuristic::SL;
    if (id == "ds") return Heuristic::DSATUR;
    if (id == "rlf") return Heuristic::RLF;
    if (id == "db") return Heuristic::DB;
    if (id == "cosine") return Heuristic::Cosine;
    if (id == "ramsey") return Heuristic::Ramsey;
    if (id == "bkt") return Heuristic::BKT;
    if (id == "exact") return Heuristic::Exact;
    throw std::invalid_argument("unknown heuristic '" + id + "'");
}

std::string heuristic_id(Heuristic h) {
    switch (h) {
        case Heuristic::GC: return "gc";
        case Heuristic::LF: return "lf";
        case Heuristic::SL: return "sl";
        case Heuristic::DSATUR: return "ds";
        case Heuristic::RLF: return "rlf";
        case Heuristic::DB: return "db";
        case Heuristic::Cosine: return "cosine";
        case Heuristic::Ramsey: return "ramsey";
        case Heuristic::BKT: return "bkt";
        case Heuristic::Exact: return "exact";
    }
    return "?";
}

const std::vector<Heuristic>& all_heuristics() {
    static const std::vector<Heuristic> nine = {Heuristic::GC,  Heuristic::LF,     Heuristic::SL,
                                                Heuristic::DSATUR, Heuristic::RLF, Heuristic::DB,
                                                Heuristic::Cosine, Heuristic::Ramsey, Heuristic::BKT};
    return nine;
}

bool is_coloring_heuristic(Heuristic h) {
    switch (h) {
        case Heuristic::GC:
        case Heuristic::LF:
        case Heuristic::SL:
        case Heuristic::DSATUR:
        case Heuristic::RLF:
        case Heuristic::DB:
        case Heuristic::Cosine: return true;
        default: return false;
    }
}

std::vector<int> color_graph(const RelationGraph& g, Heuristic h) {
    if (!is_coloring_heuristic(h))
        throw ContractError("'" + heuristic_id(h) + "' is not a coloring heuristic");
    return color_impl(g, h);
}

Partition clique_cover(const RelationGraph& g, Heuristic h, const CliqueCoverOptions& opts) {
    if (g.n_vertices == 0) throw ContractError("cannot cover an empty graph");
    if (h == Heuristic::Exact) {
        Partition p = exact_cover_small(g, opts.exact_vertex_cap, opts.exact_node_budget);
        p.seed = opts.seed;
        return p;
    }
    Groups groups;
    if (is_coloring_heuristic(h)) {
        const RelationGraph cg = complement(g);
        groups = groups_from_colors(color_impl(cg, h));
    } else if (h == Heuristic::Ramsey) {
        groups = ramsey_clique_removal(g);
    } else {
        groups = bkt_cover(g, opts.bkt_vertex_cap);
    }
    return normalize(std::move(groups), h, opts.seed);
}

PartitionCheck validate_partition(const RelationGraph& g, const Partition& p) {
    std::vector<int> owner(g.n_vertices, -1);
    for (std::size_t gi = 0; gi < p.groups.size(); ++gi) {
        const auto& group = p.groups[gi];
        for (std::size_t v : group) {
            if (v >= g.n_vertices)
                return {false, "group " + std::to_string(gi) + " references vertex " + std::to_string(v) +
                                   " outside the graph"};
            if (owner[v] >= 0)
                return {false, "vertex " + std::to_string(v) + " appears in groups " + std::to_string(owner[v]) +
                                   " and " + std::to_string(gi)};
            owner[v] = static_cast<int>(gi);
        }
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                if (!g.edge(group[a], group[b]))
                    return {false, "pair (" + std::to_string(group[a]) + ", " + std::to_string(group[b]) +
                                       ") in group " + std::to_string(gi) + " is not an edge"};
    }
    for (std::size_t v = 0; v < g.n_vertices; ++v)
        if (owner[v] < 0) return {false, "vertex " + std::to_string(v) + " is not covered"};
    return {true, ""};
}

}  // namespace unipart
