#pragma once

#include <vector>

#include "qucc/ansatz.hpp"
#include "qucc/compiled_ansatz.hpp"
#include "qucc/encoding.hpp"
#include "qucc/hamiltonian.hpp"
#include "qucc/optimize.hpp"
#include "qucc/pauli.hpp"

namespace qucc {

struct OptimizerConfig {
    double energy_tol = 1e-7;     // paper's convergence criterion
    double gradient_step = 1e-6;  // central differences
    int max_iterations = 1000;
    double initial_theta = 0.1;
    double initial_kappa = 1e-3;
};

struct VqeResult {
    double energy = 0.0;
    std::vector<double> theta;
    std::vector<double> kappa;  // empty when orbital optimization is off
    long n_energy_evaluations = 0;
    int n_iterations = 0;
    bool converged = false;
    struct TraceEntry {
        double energy;
        std::vector<double> theta;
        std::vector<double> kappa;
    };
    std::vector<TraceEntry> trace;
};

/// Minimizes <ref| U†(θ) H U(θ) |ref> over the Trotterized ansatz, all
/// amplitudes initialized to initial_theta.
VqeResult vqe_minimize(const PauliOperator& hamiltonian, const CompiledAnsatz& ansatz,
                       const OptimizerConfig& config);

/// Same objective with the exact (non-Trotterized) cluster exponential.
VqeResult vqe_minimize_exact(const PauliOperator& hamiltonian, const CompiledAnsatz& ansatz,
                             const OptimizerConfig& config);

/// Joint (θ, κ) optimization. Every κ update rebuilds the integrals via
/// R = exp(-κ) over the active orbitals, reassembles and re-encodes the
/// Hamiltonian. Tapering is not supported here (the rotation does not
/// preserve the extra Z2 symmetries); parity reduction is.
struct OoVqeProblem {
    MolecularIntegrals ints;  // active-space integrals (frozen core applied)
    AnsatzKind kind = AnsatzKind::puccd;
    bool include_singles = false;
    Mapping mapping = Mapping::parity;
    bool two_qubit_reduction = true;
};

VqeResult oo_vqe_minimize(const OoVqeProblem& problem, const OptimizerConfig& config);

/// CSV export of a result trace: iteration, energy, then one column per
/// theta and kappa component.
std::string trace_csv(const VqeResult& result);

}  // namespace qucc
