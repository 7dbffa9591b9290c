#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "unipart/generate.hpp"
#include "unipart/hamiltonian.hpp"

using namespace unipart;

namespace {

oracle::Matrix dense_sum(const QubitHamiltonian& h) {
    const Eigen::Index dim = Eigen::Index{1} << h.n_qubits;
    oracle::Matrix m = h.identity_offset * oracle::Matrix::Identity(dim, dim);
    for (const auto& t : h.terms) m += t.coefficient * oracle::pauli_word_matrix(t.word);
    return m;
}

}  // namespace

TEST_CASE("parses a single term") {
    const QubitHamiltonian h = parse_hamiltonian("0.5 [X0 Z1]\n");
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms[0].coefficient == 0.5);
    CHECK(h.terms[0].word == PauliWord::parse("X0 Z1", 2));
    CHECK(h.n_qubits == 2);
    CHECK(h.identity_offset == 0.0);
}

TEST_CASE("identity lines accumulate into the offset") {
    const QubitHamiltonian h = parse_hamiltonian("1.0 []\n");
    CHECK(h.terms.empty());
    CHECK(canonicalize(h).identity_offset == 1.0);
}

TEST_CASE("duplicate words merge under canonicalize") {
    const QubitHamiltonian h = canonicalize(parse_hamiltonian("0.3 [X0]\n0.2 [X0]\n"));
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms[0].coefficient == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("comments, blank lines, and the qubits header") {
    const QubitHamiltonian h = parse_hamiltonian("# a comment\n\nqubits: 5\n1.5 [Z1]\n");
    CHECK(h.n_qubits == 5);
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms[0].word.n_qubits() == 5);
    CHECK_THROWS_AS(parse_hamiltonian("qubits: 2\n1.0 [Z3]\n"), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian("qubits: 2\nqubits: 3\n"), ParseError);
}

TEST_CASE("syntax errors carry line numbers") {
    try {
        parse_hamiltonian("0.5 [X0]\nnot-a-term\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_hamiltonian("0.5 [X0\n"), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian("0.5 [X0] junk\n"), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian("zzz [X0]\n"), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian("0.1 [X0 X0]\n"), ParseError);  // duplicate index
}

TEST_CASE("complex coefficients: zero imaginary passes, nonzero is rejected") {
    const QubitHamiltonian h = parse_hamiltonian("(0.25+0j) [X0]\n");
    CHECK(h.terms[0].coefficient == 0.25);
    CHECK_THROWS_AS(parse_hamiltonian("(0.25+0.5j) [X0]\n"), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian("0.5j [X0]\n"), ParseError);
}

TEST_CASE("canonicalize cancels, folds identity, prunes, and is idempotent") {
    QubitHamiltonian h;
    h.n_qubits = 1;
    h.terms.push_back({0.3, PauliWord::parse("X0", 1)});
    h.terms.push_back({-0.3, PauliWord::parse("X0", 1)});
    const QubitHamiltonian c = canonicalize(h, 1e-12);
    CHECK(c.terms.empty());

    QubitHamiltonian ident;
    ident.n_qubits = 1;
    ident.terms.push_back({2.0, PauliWord::identity(1)});
    const QubitHamiltonian ci = canonicalize(ident);
    CHECK(ci.terms.empty());
    CHECK(ci.identity_offset == 2.0);

    const QubitHamiltonian r = canonicalize(parse_hamiltonian("0.5 [X0 Z1]\n-0.25 [Y0]\n1.0 []\n"));
    const QubitHamiltonian rr = canonicalize(r);
    CHECK(serialize_hamiltonian(r) == serialize_hamiltonian(rr));
}

TEST_CASE("terms sort by (x_bits, z_bits) deterministically") {
    const QubitHamiltonian h = canonicalize(parse_hamiltonian("1 [Y0]\n1 [Z0]\n1 [X0]\n"));
    REQUIRE(h.terms.size() == 3);
    CHECK(h.terms[0].word == PauliWord::parse("Z0", 1));  // (x,z) = (0,1)
    CHECK(h.terms[1].word == PauliWord::parse("X0", 1));  // (1,0)
    CHECK(h.terms[2].word == PauliWord::parse("Y0", 1));  // (1,1)
}

TEST_CASE("serialize/parse round-trips canonical Hamiltonians exactly") {
    const char* inputs[] = {"0.5 [X0 Z1]\n", "1.0 []\n", "0.3 [X0]\n0.2 [X0]\n"};
    for (const char* text : inputs) {
        const QubitHamiltonian h = canonicalize(parse_hamiltonian(text));
        const QubitHamiltonian back = parse_hamiltonian(serialize_hamiltonian(h));
        CHECK(back.n_qubits == h.n_qubits);
        CHECK(back.identity_offset == h.identity_offset);
        REQUIRE(back.terms.size() == h.terms.size());
        for (std::size_t i = 0; i < h.terms.size(); ++i) {
            CHECK(back.terms[i].coefficient == h.terms[i].coefficient);
            CHECK(back.terms[i].word == h.terms[i].word);
        }
    }
}

TEST_CASE("round-trip holds for random instances with awkward coefficients") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        const QubitHamiltonian h = random_hamiltonian(5, 25, 0.731, rng());
        const QubitHamiltonian back = parse_hamiltonian(serialize_hamiltonian(h));
        REQUIRE(back.terms.size() == h.terms.size());
        for (std::size_t i = 0; i < h.terms.size(); ++i)
            CHECK(back.terms[i].coefficient == h.terms[i].coefficient);
    }
}

TEST_CASE("canonicalization preserves the dense operator") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 12; ++rep) {
        const std::size_t n = rep % 2 == 0 ? 4 : 6;
        QubitHamiltonian h;
        h.n_qubits = n;
        std::normal_distribution<double> coeff(0.0, 1.0);
        for (int t = 0; t < 30; ++t) h.terms.push_back({coeff(rng), oracle::random_word(n, rng, true)});
        h.identity_offset = coeff(rng);
        const QubitHamiltonian c = canonicalize(h);
        for (const auto& t : c.terms) CHECK_FALSE(t.word.is_identity());
        CHECK((dense_sum(h) - dense_sum(c)).norm() < 1e-12);
    }
}

TEST_CASE("empty input yields an empty single-qubit Hamiltonian") {
    const QubitHamiltonian h = parse_hamiltonian("");
    CHECK(h.terms.empty());
    CHECK(h.n_qubits == 1);
}
