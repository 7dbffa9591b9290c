#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "unipart/circuit.hpp"
#include "unipart/generate.hpp"
#include "unipart/json_io.hpp"
#include "unipart/statevector.hpp"

using namespace unipart;

namespace {

std::string binary() {
    const char* env = std::getenv("UNIPART_BIN");
    REQUIRE_MESSAGE(env != nullptr, "UNIPART_BIN must point at the CLI binary");
    return env;
}

int run(const std::string& args, const std::string& stdout_file = "cli_stdout.txt") {
    const std::string cmd = binary() + " " + args + " > " + stdout_file + " 2> cli_stderr.txt";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

const char* kTriangle = "1 [X0]\n1 [Y0]\n1 [Z0]\n";

}  // namespace

TEST_CASE("partition output is byte-identical to the module JSON") {
    spit("tri.txt", kTriangle);
    REQUIRE(run("partition --input tri.txt --heuristic rlf --output cli_partition.json") == 0);

    const QubitHamiltonian h = canonicalize(load_hamiltonian("tri.txt"));
    const RelationGraph g = build_relation_graph(h, Relation::Anticommute);
    const Partition p = clique_cover(g, Heuristic::RLF);
    const std::string expected = partition_json(p, build_unitary_groups(h, p)).dump(2) + "\n";
    CHECK(slurp("cli_partition.json") == expected);
}

TEST_CASE("qwc relation puts the triangle in three groups") {
    spit("tri.txt", kTriangle);
    REQUIRE(run("partition --input tri.txt --relation qwc") == 0);
    const auto doc = nlohmann::json::parse(slurp("cli_stdout.txt"));
    CHECK(doc["n_groups"] == 3);
    CHECK(!doc.contains("thetas"));
}

TEST_CASE("anticommute relation covers the triangle with one group") {
    spit("tri.txt", kTriangle);
    for (const char* heur : {"gc", "exact", "bkt"}) {
        REQUIRE(run(std::string("partition --input tri.txt --heuristic ") + heur) == 0);
        const auto doc = nlohmann::json::parse(slurp("cli_stdout.txt"));
        CHECK(doc["n_groups"] == 1);
    }
}

TEST_CASE("graph dump matches to_dimacs") {
    spit("tri.txt", kTriangle);
    REQUIRE(run("partition --input tri.txt --dump-graph tri.dimacs --output cli_partition.json") == 0);
    const QubitHamiltonian h = canonicalize(load_hamiltonian("tri.txt"));
    CHECK(slurp("tri.dimacs") == to_dimacs(build_relation_graph(h, Relation::Anticommute)));
}

TEST_CASE("malformed input exits with code 2 and names the line") {
    spit("bad.txt", "0.5 [X0]\noops\n");
    CHECK(run("partition --input bad.txt") == 2);
    CHECK(slurp("cli_stderr.txt").find("line 2") != std::string::npos);
    CHECK(run("partition --input does_not_exist.txt") == 2);
    CHECK(run("partition --input bad.txt --heuristic bogus") == 2);
}

TEST_CASE("gen is deterministic and feeds the pipeline") {
    REQUIRE(run("gen --qubits 3 --terms 12 --seed 11 --output gen_a.txt") == 0);
    REQUIRE(run("gen --qubits 3 --terms 12 --seed 11 --output gen_b.txt") == 0);
    CHECK(slurp("gen_a.txt") == slurp("gen_b.txt"));
    const std::string expected = serialize_hamiltonian(random_hamiltonian(3, 12, 1.0, 11));
    CHECK(slurp("gen_a.txt") == expected);
    CHECK(run("gen --qubits 2 --terms 99") == 2);  // more terms than words exist
}

TEST_CASE("circuit emission matches the module serialization") {
    spit("tri.txt", kTriangle);
    REQUIRE(run("circuit --input tri.txt --group 0 --output cli_circuit.txt") == 0);
    const QubitHamiltonian h = canonicalize(load_hamiltonian("tri.txt"));
    const RelationGraph g = build_relation_graph(h, Relation::Anticommute);
    const auto groups = build_unitary_groups(h, clique_cover(g, Heuristic::RLF));
    Circuit prep;
    prep.n_system_qubits = h.n_qubits;
    CHECK(slurp("cli_circuit.txt") == serialize_circuit(measurement_circuit(groups[0], prep)));
    CHECK(run("circuit --input tri.txt --group 99") == 2);
}

TEST_CASE("verify passes in exact mode and reports mode details in sampled mode") {
    spit("tri.txt", kTriangle);
    CHECK(run("verify --input tri.txt") == 0);
    CHECK(slurp("cli_stdout.txt").find("PASS") != std::string::npos);

    spit("prep.txt", "circuit qubits=1 ancilla=0\nH 0\nRZ(0.31) 0\n");
    CHECK(run("verify --input tri.txt --prep prep.txt --mode sampled --shots 50000 --seed 4") == 0);
    const std::string out = slurp("cli_stdout.txt");
    CHECK(out.find("std_error") != std::string::npos);
    // Determinism of the sampled path.
    REQUIRE(run("verify --input tri.txt --prep prep.txt --mode sampled --shots 50000 --seed 4",
                "cli_stdout2.txt") == 0);
    CHECK(out == slurp("cli_stdout2.txt"));
}

TEST_CASE("verify --dump-state writes a loadable statevector") {
    spit("tri.txt", kTriangle);
    spit("prep.txt", "circuit qubits=1 ancilla=0\nH 0\n");
    REQUIRE(run("verify --input tri.txt --prep prep.txt --dump-state state.bin") == 0);
    const Statevector s = load_statevector("state.bin");
    CHECK(s.n_qubits == 1);
    CHECK(std::abs(s.amplitudes[0].real() - 1 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("stats JSON round-trips through the scaling fit") {
    spit("tri.txt", kTriangle);
    REQUIRE(run("gen --qubits 4 --terms 30 --seed 2 --output gen4.txt") == 0);
    REQUIRE(run("gen --qubits 5 --terms 60 --seed 2 --output gen5.txt") == 0);
    REQUIRE(run("gen --qubits 6 --terms 100 --seed 2 --output gen6.txt") == 0);
    REQUIRE(run("stats --input gen4.txt gen5.txt gen6.txt --heuristic rlf --output stats.json") == 0);
    const auto doc = nlohmann::json::parse(slurp("stats.json"));
    REQUIRE(doc["reports"].size() == 3);
    CHECK(doc["reports"][0]["total_terms"] == 30);
    CHECK(doc["reports"][0]["heuristics"].contains("rlf"));
    CHECK(run("scaling-fit stats.json --heuristic rlf --csv fit.csv") == 0);
    CHECK(slurp("fit.csv").find("log10_n_qubits") != std::string::npos);
}

TEST_CASE("scaling fit recovers exact synthetic slopes") {
    nlohmann::json doc;
    doc["reports"] = nlohmann::json::array();
    for (double n : {8.0, 12.0, 16.0, 24.0}) {
        nlohmann::json r;
        r["source"] = "synthetic";
        r["n_qubits"] = n;
        r["total_terms"] = n * n * n * n;
        r["total_terms_with_identity"] = n * n * n * n;
        r["m_qwc"] = 1;
        r["qwc_wall_ms"] = 0.0;
        r["heuristics"]["rlf"]["n_groups"] = n * n * n;
        r["heuristics"]["rlf"]["max_size"] = 1;
        r["heuristics"]["rlf"]["size_std"] = 0.0;
        r["heuristics"]["rlf"]["wall_ms"] = 0.0;
        doc["reports"].push_back(r);
    }
    spit("synth.json", doc.dump());
    REQUIRE(run("scaling-fit synth.json") == 0);
    const std::string out = slurp("cli_stdout.txt");
    CHECK(out.find("term slope  = 4.0000") != std::string::npos);
    CHECK(out.find("group slope = 3.0000") != std::string::npos);
    CHECK(run("scaling-fit missing.json") == 2);
}
