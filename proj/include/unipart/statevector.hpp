#pragma once

#include <optional>
#include <utility>

#include "unipart/circuit.hpp"
#include "unipart/dense.hpp"
#include "unipart/hamiltonian.hpp"
#include "unipart/unitary_group.hpp"

namespace unipart {

inline constexpr std::size_t kSimulatorQubitCap = 20;

// Dense amplitudes, little-endian: qubit 0 is the least significant index
// bit, the ancilla (when present) the most significant.
struct Statevector {
    std::size_t n_qubits = 0;
    ComplexVector amplitudes;

    static Statevector zero_state(std::size_t n_qubits);
    double norm() const { return amplitudes.norm(); }
};

enum class SimMode { Sequential, Parallel };

struct SimulateOptions {
    SimMode mode = SimMode::Sequential;
    std::size_t qubit_cap = kSimulatorQubitCap;
};

// Applies the circuit's gates in order via stride-indexed amplitude updates.
// Parallel mode splits index ranges across workers with identical per-slot
// arithmetic, so both modes produce bit-identical amplitudes.
Statevector simulate(const Circuit& c, std::optional<Statevector> initial = std::nullopt,
                     const SimulateOptions& opts = {});

// sum_I C_I <psi|P_I|psi> + identity_offset, each Pauli expectation taken by
// in-place bit arithmetic; no matrices are materialized.
double expectation_direct(const QubitHamiltonian& h, const Statevector& state);

// Marginal probabilities of the z = +1 / -1 outcomes on the given qubit.
std::pair<double, double> ancilla_probabilities(const Statevector& state, std::size_t ancilla);

// Runs one measurement circuit per group and accumulates
// sum_n d_n (2 p_plus - 1) + identity_offset from exact probabilities.
double estimate_energy_exact(const QubitHamiltonian& h, const std::vector<UnitaryGroup>& groups,
                             const Circuit& prep, const SimulateOptions& opts = {});

struct SampledEnergy {
    double energy = 0.0;
    double std_error = 0.0;
};

// Same protocol with per-group binomial shot sampling from a seeded
// generator; the error bar propagates sqrt(sum d_n^2 Var(2 p_hat - 1)).
SampledEnergy estimate_energy_sampled(const QubitHamiltonian& h, const std::vector<UnitaryGroup>& groups,
                                      const Circuit& prep, std::uint64_t shots, std::uint64_t seed,
                                      const SimulateOptions& opts = {});

// Binary dump: 8-byte little-endian qubit count, then 16-byte (re, im)
// double pairs in index order.
void save_statevector(const Statevector& state, const std::string& path);
Statevector load_statevector(const std::string& path);

}  // namespace unipart
