#pragma once

#include <vector>

#include "qucc/ansatz.hpp"
#include "qucc/encoding.hpp"
#include "qucc/statevector.hpp"

namespace qucc {

/// Qubit image of one excitation's generator: t - t† maps to
/// i * sum_k c_k P_k with real c_k and mutually commuting P_k (checked at
/// compile time), so exp(weight*theta*(t-t†)) is an exact product of
/// single-string exponentials.
struct CompiledExcitation {
    int group = 0;
    double weight = 1.0;
    std::vector<std::pair<PauliString, double>> strings;
};

struct CompiledAnsatz {
    int n_qubits = 0;
    int n_parameters = 0;
    std::uint64_t reference_index = 0;
    std::vector<CompiledExcitation> entries;
};

/// Encodes every excitation under the plan. With tapering attached,
/// excitations that anticommute with a kept symmetry generator connect
/// different sectors; they are dropped (the in-sector projection of their
/// generator vanishes) and parameter groups are renumbered compactly.
CompiledAnsatz compile_ansatz(const AnsatzSpec& spec, const EncodingPlan& plan);

/// Single-Trotter-step application in compiled order.
void apply_ansatz_trotter(Statevector& state, const CompiledAnsatz& ansatz,
                          const std::vector<double>& theta);

/// Exact exponential of the full cluster generator (no Trotter splitting).
void apply_ansatz_exact(Statevector& state, const CompiledAnsatz& ansatz,
                        const std::vector<double>& theta);

/// Gate-count model: a string of weight k costs one parameterized rotation,
/// 2(k-1) two-qubit gates, and two single-qubit basis changes per X or Y
/// factor.
struct ResourceEstimate {
    long parameterized_rotations = 0;
    long basis_change_gates = 0;
    long two_qubit_gates = 0;
    int n_parameters = 0;
};

ResourceEstimate estimate_resources(const CompiledAnsatz& ansatz);

}  // namespace qucc
