#pragma once

#include <cstdint>
#include <vector>

#include "qucc/fermion.hpp"
#include "qucc/pauli.hpp"

namespace qucc {

enum class Mapping { jordan_wigner, parity };

/// A Z2 symmetry of a qubit Hamiltonian: a Z/I-only Pauli string commuting
/// with every term, a target qubit owned by this generator alone, and the
/// eigenvalue selecting the symmetry sector once assigned.
struct SymmetryGenerator {
    PauliString pauli;        // z-mask only, x == 0
    int target_qubit = 0;
    int sector_eigenvalue = +1;
};

/// How fermionic modes become qubits: mapping kind, optional two-qubit
/// reduction (parity only), particle counts, and any tapering attached
/// after inspecting the encoded Hamiltonian.
struct EncodingPlan {
    Mapping mapping = Mapping::jordan_wigner;
    bool two_qubit_reduction = false;
    int n_spin_orbitals = 0;
    int n_alpha = 0;
    int n_beta = 0;
    std::vector<SymmetryGenerator> taper_generators;

    int base_qubits() const { return two_qubit_reduction ? n_spin_orbitals - 2 : n_spin_orbitals; }
    int n_qubits() const { return base_qubits() - static_cast<int>(taper_generators.size()); }

    /// HF occupation bits: lowest n_alpha up modes and n_beta down modes.
    std::uint64_t reference_occupations() const;
};

EncodingPlan make_plan(Mapping mapping, bool two_qubit_reduction, int n_spin_orbitals,
                       int n_alpha, int n_beta);

PauliOperator jordan_wigner(const FermionOperator& op);
PauliOperator parity_map(const FermionOperator& op);

/// Parity transform followed by removal of the two parity-storage qubits
/// (M/2-1 and M-1 under block spin ordering). Requires every term to act
/// with I/Z there, i.e. the operator conserves both spin populations.
PauliOperator parity_map_reduced(const FermionOperator& op, int n_alpha, int n_beta);

/// Z/I-only symmetry generators of `op` found by GF(2) elimination over the
/// x-parts of its terms; deterministic target-qubit assignment (lowest qubit
/// set in the generator and in no other returned generator).
std::vector<SymmetryGenerator> find_z2_symmetries(const PauliOperator& op);

/// Eigenvalue of each generator on the computational-basis state `bits`.
std::vector<int> sector_eigenvalues(const std::vector<SymmetryGenerator>& gens, std::uint64_t bits);

/// Conjugates by the Clifford prod_i (X_target + tau_i)/sqrt(2), substitutes
/// the sector eigenvalue on each target qubit and deletes it.
PauliOperator taper(const PauliOperator& op, const std::vector<SymmetryGenerator>& gens,
                    const std::vector<int>& sectors);

/// True when every term of `op` commutes with every generator.
bool commutes_with_symmetries(const PauliOperator& op, const std::vector<SymmetryGenerator>& gens);

/// Finds the symmetries of the encoded Hamiltonian, fixes the sector from
/// the plan's HF reference determinant, and returns the plan extended with
/// them. `encoded` must be the mapping(+reduction) image for this plan.
EncodingPlan plan_with_tapering(const EncodingPlan& plan, const PauliOperator& encoded);

/// Mapping(+reduction) image of a fermionic operator, before tapering.
PauliOperator encode_base(const FermionOperator& op, const EncodingPlan& plan);

/// Full pipeline: encode_base then taper with the plan's generators.
PauliOperator encode_operator(const FermionOperator& op, const EncodingPlan& plan);

/// Occupation bits -> encoded bits on the pre-taper register.
std::uint64_t encode_occupations_base(std::uint64_t occupations, const EncodingPlan& plan);

/// Occupation bits -> computational-basis index on the final register
/// (tapering tracked through the Clifford: target bits drop out).
std::uint64_t encode_determinant(std::uint64_t occupations, const EncodingPlan& plan);

/// Basis index on the final register -> occupation bits. Not defined for
/// tapered plans (a tapered basis state lifts to a superposition of
/// determinants); throws in that case.
std::uint64_t decode_determinant(std::uint64_t index, const EncodingPlan& plan);

}  // namespace qucc
