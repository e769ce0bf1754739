#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qucc/encoding.hpp"
#include "qucc/hamiltonian.hpp"
#include "qucc/pauli.hpp"

namespace qucc {

/// Determinant basis of the fixed (n_alpha, n_beta) sector, sorted by
/// (up-mask, down-mask).
struct SectorBasis {
    int n_orbitals = 0;
    int n_alpha = 0;
    int n_beta = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> dets;

    std::size_t dimension() const { return dets.size(); }
    std::size_t index_of(std::uint64_t up, std::uint64_t dn) const;
};

SectorBasis make_sector_basis(int n_orbitals, int n_alpha, int n_beta);

/// Diagonal Slater-Condon energy of one determinant (includes e_offset).
double determinant_energy(const MolecularIntegrals& ints, std::uint64_t up, std::uint64_t dn);

struct ExactGround {
    double energy = 0.0;
    Eigen::VectorXd eigenvector;
    SectorBasis basis;
};

/// Lowest eigenpair of the sector Hamiltonian built directly from the
/// integrals via Slater-Condon rules (independent of the fermion/qubit
/// pipeline). Dense below 4000 determinants, Lanczos above; hard cap 4e5.
ExactGround exact_ground(const MolecularIntegrals& ints);

/// Dense matrix of a qubit operator restricted to a list of basis states.
Eigen::MatrixXcd pauli_dense_restricted(const PauliOperator& op,
                                        const std::vector<std::uint64_t>& basis);

/// Encoded basis indices of every determinant with the given particle
/// numbers. Tapered plans keep only determinants in the plan's symmetry
/// sector (which always contains the reference).
std::vector<std::uint64_t> sector_indices(const EncodingPlan& plan, int n_alpha, int n_beta);

/// Sorted eigenvalues of `op` restricted to `basis` (empty basis = full
/// space; capped at 12 qubits full / 4000 restricted states).
std::vector<double> exact_spectrum_sector(const PauliOperator& op,
                                          const std::vector<std::uint64_t>& basis = {});

}  // namespace qucc
