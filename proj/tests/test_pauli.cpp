#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "unipart/pauli.hpp"

using namespace unipart;

namespace {

PauliWord from_str(const std::string& s, std::size_t n = 0) { return PauliWord::parse(s, n); }

bool matrices_close(const oracle::Matrix& a, const oracle::Matrix& b, double tol = 1e-14) {
    return (a - b).norm() < tol;
}

}  // namespace

TEST_CASE("phase arithmetic is addition mod 4") {
    CHECK(Phase(1) * Phase(3) == Phase(0));
    CHECK(Phase(2) * Phase(3) == Phase(1));
    CHECK(Phase(-1) == Phase(3));
    CHECK(Phase(1).to_complex() == std::complex<double>(0, 1));
    CHECK(Phase(3).to_complex() == std::complex<double>(0, -1));
}

TEST_CASE("factor encoding round-trips") {
    PauliWord w(4);
    w.set_factor(0, PauliOp::X);
    w.set_factor(1, PauliOp::Y);
    w.set_factor(2, PauliOp::Z);
    CHECK(w.factor(0) == PauliOp::X);
    CHECK(w.factor(1) == PauliOp::Y);
    CHECK(w.factor(2) == PauliOp::Z);
    CHECK(w.factor(3) == PauliOp::I);
    CHECK(w.weight() == 3);
    CHECK(w.str() == "X0 Y1 Z2");
    CHECK(PauliWord::parse(w.str(), 4) == w);
    CHECK(PauliWord(4).is_identity());
}

TEST_CASE("word parsing rejects malformed input") {
    CHECK_THROWS_AS(PauliWord::parse("Q0"), ParseError);
    CHECK_THROWS_AS(PauliWord::parse("X"), ParseError);
    CHECK_THROWS_AS(PauliWord::parse("X0 Z0"), ParseError);  // duplicate index
    CHECK_THROWS_AS(PauliWord::parse("X9", 4), ParseError);
}

TEST_CASE("multiply matches the stated small cases") {
    // X(x)I times X(x)I is the identity.
    auto [ph_xx, w_xx] = multiply(from_str("X0", 2), from_str("X0", 2));
    CHECK(ph_xx == Phase(0));
    CHECK(w_xx.is_identity());

    // XZ = -iY on one qubit.
    auto [ph_xz, w_xz] = multiply(from_str("X0", 1), from_str("Z0", 1));
    CHECK(ph_xz == Phase(3));
    CHECK(w_xz == from_str("Y0", 1));
    CHECK(matrices_close(oracle::pauli_word_matrix(from_str("X0", 1)) * oracle::pauli_word_matrix(from_str("Z0", 1)),
                         ph_xz.to_complex() * oracle::pauli_word_matrix(w_xz)));

    // Identity times anything is that thing.
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const PauliWord p = oracle::random_word(4, rng, true);
        auto [ph, r] = multiply(PauliWord::identity(4), p);
        CHECK(ph == Phase(0));
        CHECK(r == p);
    }
}

TEST_CASE("multiply agrees with the dense oracle exhaustively for N <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::uint64_t n_words = std::uint64_t{1} << (2 * n);
        std::vector<PauliWord> words;
        for (std::uint64_t code = 0; code < n_words; ++code) {
            PauliWord w(n);
            for (std::size_t q = 0; q < n; ++q) {
                const int bits = (code >> (2 * q)) & 3;
                w.set_factor(q, static_cast<PauliOp>(bits));
            }
            words.push_back(w);
        }
        for (const auto& p : words) {
            const oracle::Matrix mp = oracle::pauli_word_matrix(p);
            for (const auto& q : words) {
                auto [ph, r] = multiply(p, q);
                CHECK(matrices_close(mp * oracle::pauli_word_matrix(q),
                                     ph.to_complex() * oracle::pauli_word_matrix(r)));
            }
        }
    }
}

TEST_CASE("multiply agrees with the dense oracle on random pairs up to N = 6") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 4 + rep % 3;
        const PauliWord p = oracle::random_word(n, rng, true);
        const PauliWord q = oracle::random_word(n, rng, true);
        auto [ph, r] = multiply(p, q);
        CHECK(matrices_close(oracle::pauli_word_matrix(p) * oracle::pauli_word_matrix(q),
                             ph.to_complex() * oracle::pauli_word_matrix(r), 1e-13));
    }
}

TEST_CASE("a word squares to the identity with no phase") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        const PauliWord p = oracle::random_word(6, rng, true);
        auto [ph, r] = multiply(p, p);
        CHECK(ph == Phase(0));
        CHECK(r.is_identity());
    }
}

TEST_CASE("commutation predicates: stated cases") {
    CHECK(commutes(from_str("X0", 1), from_str("X0", 1)));
    CHECK_FALSE(commutes(from_str("X0", 1), from_str("Z0", 1)));
    CHECK(commutes(from_str("X0 Z1", 2), from_str("Z0 X1", 2)));  // two anticommuting positions

    CHECK(anticommutes(from_str("X0", 1), from_str("Z0", 1)));
    CHECK_FALSE(anticommutes(from_str("X0", 1), from_str("X0", 1)));
    CHECK_FALSE(anticommutes(from_str("Y0 Y1", 2), from_str("X0 Z1", 2)));

    CHECK(qubit_wise_commutes(from_str("X0 Z1", 2), from_str("X0", 2)));
    CHECK_FALSE(qubit_wise_commutes(from_str("X0", 1), from_str("Z0", 1)));
    CHECK(qubit_wise_commutes(from_str("X0 Y1", 3), from_str("X0 Y1 Z2", 3)));
}

TEST_CASE("commutes matches the dense commutator") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 1 + rep % 4;
        const PauliWord p = oracle::random_word(n, rng, true);
        const PauliWord q = oracle::random_word(n, rng, true);
        const oracle::Matrix mp = oracle::pauli_word_matrix(p);
        const oracle::Matrix mq = oracle::pauli_word_matrix(q);
        CHECK(commutes(p, q) == ((mp * mq - mq * mp).norm() < 1e-12));
        CHECK(anticommutes(p, q) == ((mp * mq + mq * mp).norm() < 1e-12));
    }
}

TEST_CASE("exactly one of commutes/anticommutes holds for distinct words") {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 2000; ++rep) {
        const PauliWord p = oracle::random_word(4, rng);
        const PauliWord q = oracle::random_word(4, rng);
        if (p == q) {
            CHECK(commutes(p, q));
            CHECK_FALSE(anticommutes(p, q));
        } else {
            CHECK(commutes(p, q) != anticommutes(p, q));
        }
    }
}

TEST_CASE("qubit-wise commutation implies full commutation (10^4 random 4-qubit pairs)") {
    std::mt19937_64 rng(23);
    std::size_t qwc_seen = 0;
    for (int rep = 0; rep < 10000; ++rep) {
        const PauliWord p = oracle::random_word(4, rng, true);
        const PauliWord q = oracle::random_word(4, rng, true);
        if (qubit_wise_commutes(p, q)) {
            ++qwc_seen;
            CHECK(commutes(p, q));
        }
    }
    CHECK(qwc_seen > 0);
}

TEST_CASE("weight counts non-identity factors") {
    CHECK(weight(PauliWord::identity(3)) == 0);
    CHECK(weight(from_str("X0", 3)) == 1);
    CHECK(weight(from_str("X0 Y1 Z2", 3)) == 3);
}

TEST_CASE("bits beyond n_qubits stay zero through products") {
    // 65 qubits forces a second storage word with a partial tail.
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 50; ++rep) {
        const PauliWord p = oracle::random_word(65, rng, true);
        const PauliWord q = oracle::random_word(65, rng, true);
        auto [ph, r] = multiply(p, q);
        (void)ph;
        CHECK((r.x_bits().words().back() >> 1) == 0);
        CHECK((r.z_bits().words().back() >> 1) == 0);
        CHECK((~r.x_bits()).count() + r.x_bits().count() == 65);
    }
}

TEST_CASE("size mismatch raises a dimension error") {
    CHECK_THROWS_AS(multiply(PauliWord(2), PauliWord(3)), DimensionError);
    CHECK_THROWS_AS(commutes(PauliWord(2), PauliWord(3)), DimensionError);
    CHECK_THROWS_AS(qubit_wise_commutes(PauliWord(2), PauliWord(3)), DimensionError);
}
