#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "unipart/circuit.hpp"
#include "unipart/generate.hpp"
#include "unipart/json_io.hpp"
#include "unipart/parallel.hpp"
#include "unipart/scaling.hpp"
#include "unipart/statevector.hpp"
#include "unipart/stats.hpp"

namespace {

using namespace unipart;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot write '" + path + "'");
    out << text;
}

struct CommonOptions {
    std::string input;
    std::string output;
    double prune_threshold = kDefaultPruneThreshold;
    std::string heuristic = "rlf";
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t bkt_cap = 200;
    std::size_t exact_cap = 30;

    CliqueCoverOptions cover_options() const {
        CliqueCoverOptions opts;
        if (seed_set) opts.seed = seed;
        opts.bkt_vertex_cap = bkt_cap;
        opts.exact_vertex_cap = exact_cap;
        return opts;
    }

    QubitHamiltonian load_canonical() const {
        const QubitHamiltonian h = canonicalize(load_hamiltonian(input), prune_threshold);
        if (h.terms.empty() && h.identity_offset == 0.0)
            throw ParseError(0, "'" + input + "' contains no terms");
        return h;
    }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--input", common.input, "Hamiltonian file")->required();
    cmd->add_option("--output", common.output, "output path (default: stdout)");
    cmd->add_option("--prune-threshold", common.prune_threshold, "drop |coefficient| below this")
        ->capture_default_str();
    cmd->add_option("--heuristic", common.heuristic, "gc|lf|sl|ds|rlf|db|cosine|ramsey|bkt|exact")
        ->capture_default_str();
    cmd->add_option("--seed", common.seed, "seed recorded with the partition")
        ->each([&common](const std::string&) { common.seed_set = true; });
    cmd->add_option("--bkt-cap", common.bkt_cap, "BKT vertex cap")->capture_default_str();
    cmd->add_option("--exact-cap", common.exact_cap, "exact solver vertex cap")->capture_default_str();
}

Relation parse_relation(const std::string& name) {
    if (name == "anticommute") return Relation::Anticommute;
    if (name == "qwc") return Relation::QubitWise;
    throw std::invalid_argument("unknown relation '" + name + "' (expected anticommute or qwc)");
}

// ---------------------------------------------------------------------------

int cmd_partition(const CommonOptions& common, const std::string& relation_name,
                  const std::string& dump_graph) {
    const QubitHamiltonian h = common.load_canonical();
    const Relation relation = parse_relation(relation_name);
    const RelationGraph graph = build_relation_graph(h, relation);
    if (!dump_graph.empty()) write_text(dump_graph, to_dimacs(graph));
    const Heuristic heur = parse_heuristic(common.heuristic);
    const Partition p = clique_cover(graph, heur, common.cover_options());
    const PartitionCheck check = validate_partition(graph, p);
    if (!check.valid) throw ContractError("internal: invalid partition (" + check.diagnostic + ")");
    nlohmann::json doc;
    if (relation == Relation::Anticommute) {
        doc = partition_json(p, build_unitary_groups(h, p));
    } else {
        doc = partition_json(p);
    }
    write_text(common.output, doc.dump(2) + "\n");
    return kExitOk;
}

int cmd_stats(const std::vector<std::string>& inputs, const std::vector<std::string>& heuristic_ids,
              const CommonOptions& common, bool include_identity) {
    if (inputs.empty()) throw ParseError(0, "stats needs at least one input file");
    std::vector<Heuristic> heuristics;
    if (heuristic_ids.empty()) {
        heuristics = all_heuristics();
    } else {
        for (const auto& id : heuristic_ids) heuristics.push_back(parse_heuristic(id));
    }
    // Files run concurrently; slot-indexed results keep the output order
    // identical to the input order.
    std::vector<StatsRecord> slots(inputs.size());
    std::vector<std::string> errors(inputs.size());
    parallel_for(inputs.size(), [&](std::size_t i) {
        try {
            const QubitHamiltonian h = canonicalize(load_hamiltonian(inputs[i]), common.prune_threshold);
            if (h.terms.empty()) throw ParseError(0, "no non-identity terms");
            slots[i] = compute_stats(inputs[i], h, heuristics, common.cover_options());
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    std::vector<StatsRecord> records;
    bool any_failed = false;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (errors[i].empty()) {
            records.push_back(std::move(slots[i]));
        } else {
            std::cerr << "stats: skipping '" << inputs[i] << "': " << errors[i] << "\n";
            any_failed = true;
        }
    }
    std::cout << render_stats_table(records, include_identity);
    if (!common.output.empty()) write_text(common.output, stats_json(records).dump(2) + "\n");
    if (records.empty()) return kExitInputError;
    return any_failed ? kExitInputError : kExitOk;
}

int cmd_circuit(const CommonOptions& common, std::size_t group_index, const std::string& prep_path) {
    const QubitHamiltonian h = common.load_canonical();
    if (h.terms.empty()) throw ParseError(0, "no measurable terms (constant Hamiltonian)");
    const RelationGraph graph = build_relation_graph(h, Relation::Anticommute);
    const Partition p = clique_cover(graph, parse_heuristic(common.heuristic), common.cover_options());
    const std::vector<UnitaryGroup> groups = build_unitary_groups(h, p);
    if (group_index >= groups.size())
        throw ContractError("group index " + std::to_string(group_index) + " out of range (partition has " +
                            std::to_string(groups.size()) + " groups)");
    Circuit prep;
    prep.n_system_qubits = h.n_qubits;
    if (!prep_path.empty()) {
        prep = load_circuit(prep_path);
        if (prep.n_system_qubits != h.n_qubits)
            throw DimensionError("prep circuit register does not match the Hamiltonian");
    }
    const Circuit mc = measurement_circuit(groups[group_index], prep);
    write_text(common.output, serialize_circuit(mc));
    const GateCounts counts = gate_count(mc);
    std::ostream& summary = common.output.empty() || common.output == "-" ? std::cerr : std::cout;
    summary << "group " << group_index << ": L=" << groups[group_index].size()
            << " d=" << groups[group_index].d << "\n"
            << "gates=" << counts.total << " cx=" << counts.cx << " entanglers=" << counts.entanglers
            << " depth=" << counts.depth << "\n";
    return kExitOk;
}

int cmd_verify(const CommonOptions& common, const std::string& prep_path, const std::string& mode,
               std::uint64_t shots, const std::string& dump_state, bool parallel_sim) {
    const QubitHamiltonian h = common.load_canonical();
    Circuit prep;
    prep.n_system_qubits = h.n_qubits;
    if (!prep_path.empty()) {
        prep = load_circuit(prep_path);
        if (prep.n_system_qubits != h.n_qubits)
            throw DimensionError("prep circuit register does not match the Hamiltonian");
    }
    SimulateOptions sim;
    if (parallel_sim) sim.mode = SimMode::Parallel;

    const Statevector prepared = simulate(prep, std::nullopt, sim);
    if (!dump_state.empty()) save_statevector(prepared, dump_state);
    const double direct = expectation_direct(h, prepared);

    std::vector<UnitaryGroup> groups;
    if (!h.terms.empty()) {
        const RelationGraph graph = build_relation_graph(h, Relation::Anticommute);
        const Partition p = clique_cover(graph, parse_heuristic(common.heuristic), common.cover_options());
        groups = build_unitary_groups(h, p);
    }

    std::cout << "groups         = " << groups.size() << "\n";
    std::cout.precision(17);
    if (mode == "exact") {
        const double partitioned = estimate_energy_exact(h, groups, prep, sim);
        const double delta = std::abs(partitioned - direct);
        std::cout << "E_direct       = " << direct << "\n"
                  << "E_partitioned  = " << partitioned << "\n"
                  << "|difference|   = " << delta << "\n";
        if (delta >= 1e-10) {
            std::cout << "FAIL (tolerance 1e-10)\n";
            return kExitVerifyFailed;
        }
        std::cout << "PASS (tolerance 1e-10)\n";
        return kExitOk;
    }
    if (mode != "sampled") throw std::invalid_argument("mode must be exact or sampled");
    const SampledEnergy sampled = estimate_energy_sampled(h, groups, prep, shots, common.seed, sim);
    const double delta = std::abs(sampled.energy - direct);
    const double tolerance = 5.0 * sampled.std_error;
    std::cout << "E_direct       = " << direct << "\n"
              << "E_sampled      = " << sampled.energy << "\n"
              << "std_error      = " << sampled.std_error << "\n"
              << "|difference|   = " << delta << "\n";
    if (delta > tolerance) {
        std::cout << "FAIL (tolerance 5 sigma)\n";
        return kExitVerifyFailed;
    }
    std::cout << "PASS (tolerance 5 sigma)\n";
    return kExitOk;
}

int cmd_scaling_fit(const std::vector<std::string>& stats_files, const std::string& heuristic,
                    bool include_identity, const std::string& csv_path) {
    std::vector<ScalingPoint> points;
    for (const auto& path : stats_files) {
        std::ifstream in(path);
        if (!in) throw ParseError(0, "cannot open '" + path + "'");
        nlohmann::json doc;
        in >> doc;
        for (auto& p : scaling_points(doc, heuristic, include_identity)) points.push_back(std::move(p));
    }
    const ScalingFit fit = fit_scaling(points);
    std::cout.precision(4);
    std::cout << std::fixed;
    std::cout << "points      = " << points.size() << "\n"
              << "term slope  = " << fit.term_slope << "\n"
              << "group slope = " << fit.group_slope << " (" << heuristic << ")\n";
    if (!csv_path.empty()) write_text(csv_path, scaling_csv(points));
    return kExitOk;
}

int cmd_gen(std::size_t qubits, std::size_t terms, double scale, std::uint64_t seed,
            const std::string& output) {
    const QubitHamiltonian h = random_hamiltonian(qubits, terms, scale, seed);
    write_text(output, serialize_hamiltonian(h));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "unipart: partition qubit Hamiltonians into unitary fragments and verify the measurement protocol"};
    app.require_subcommand(1);

    CommonOptions part_common;
    std::string part_relation = "anticommute";
    std::string part_dump_graph;
    auto* partition = app.add_subcommand("partition", "partition a Hamiltonian and emit groups as JSON");
    add_common(partition, part_common);
    partition->add_option("--relation", part_relation, "anticommute|qwc")->capture_default_str();
    partition->add_option("--dump-graph", part_dump_graph, "also write the graph as DIMACS");

    CommonOptions stats_common;
    std::vector<std::string> stats_inputs;
    std::vector<std::string> stats_heuristics;
    bool include_identity = false;
    auto* stats = app.add_subcommand("stats", "per-Hamiltonian grouping statistics table");
    stats->add_option("--input", stats_inputs, "Hamiltonian files")->required();
    stats->add_option("--heuristic", stats_heuristics, "heuristics to run (default: all nine)");
    stats->add_option("--output", stats_common.output, "write the JSON report here");
    stats->add_option("--prune-threshold", stats_common.prune_threshold, "")->capture_default_str();
    stats->add_option("--bkt-cap", stats_common.bkt_cap, "")->capture_default_str();
    stats->add_option("--exact-cap", stats_common.exact_cap, "")->capture_default_str();
    stats->add_flag("--include-identity-in-counts", include_identity,
                    "count the identity constant in the total column");

    CommonOptions circuit_common;
    std::size_t group_index = 0;
    std::string circuit_prep;
    auto* circuit = app.add_subcommand("circuit", "emit the measurement circuit for one group");
    add_common(circuit, circuit_common);
    circuit->add_option("--group", group_index, "group index")->capture_default_str();
    circuit->add_option("--prep", circuit_prep, "state-preparation circuit file");

    CommonOptions verify_common;
    std::string verify_prep;
    std::string verify_mode = "exact";
    std::uint64_t shots = 100000;
    std::string dump_state;
    bool parallel_sim = false;
    auto* verify = app.add_subcommand("verify", "check E_partitioned against E_direct");
    add_common(verify, verify_common);
    verify->add_option("--prep", verify_prep, "state-preparation circuit file");
    verify->add_option("--mode", verify_mode, "exact|sampled")->capture_default_str();
    verify->add_option("--shots", shots, "shots per group in sampled mode")->capture_default_str();
    verify->add_option("--dump-state", dump_state, "write the prepared statevector (binary)");
    verify->add_flag("--parallel-sim", parallel_sim, "parallel amplitude updates");

    std::vector<std::string> fit_inputs;
    std::string fit_heuristic = "rlf";
    bool fit_include_identity = false;
    std::string fit_csv;
    auto* fit = app.add_subcommand("scaling-fit", "log-log slopes of terms and groups vs qubit count");
    fit->add_option("stats", fit_inputs, "stats JSON files")->required();
    fit->add_option("--heuristic", fit_heuristic, "group counts to fit")->capture_default_str();
    fit->add_flag("--include-identity-in-counts", fit_include_identity, "");
    fit->add_option("--csv", fit_csv, "write plot-ready CSV of the log-log points");

    std::size_t gen_qubits = 4;
    std::size_t gen_terms = 16;
    double gen_scale = 1.0;
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "generate a random Hamiltonian instance");
    gen->add_option("--qubits", gen_qubits, "")->required();
    gen->add_option("--terms", gen_terms, "")->required();
    gen->add_option("--scale", gen_scale, "coefficient scale")->capture_default_str();
    gen->add_option("--seed", gen_seed, "")->capture_default_str();
    gen->add_option("--output", gen_output, "");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (partition->parsed()) return cmd_partition(part_common, part_relation, part_dump_graph);
        if (stats->parsed()) return cmd_stats(stats_inputs, stats_heuristics, stats_common, include_identity);
        if (circuit->parsed()) return cmd_circuit(circuit_common, group_index, circuit_prep);
        if (verify->parsed())
            return cmd_verify(verify_common, verify_prep, verify_mode, shots, dump_state, parallel_sim);
        if (fit->parsed()) return cmd_scaling_fit(fit_inputs, fit_heuristic, fit_include_identity, fit_csv);
        if (gen->parsed()) return cmd_gen(gen_qubits, gen_terms, gen_scale, gen_seed, gen_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
