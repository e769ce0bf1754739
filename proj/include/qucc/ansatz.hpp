#pragma once

#include <string>
#include <vector>

#include "qucc/fermion.hpp"

namespace qucc {

/// Spatial-orbital active space of a closed-shell reference: orbitals
/// 0..n_occ-1 are doubly occupied, the rest virtual.
struct ActiveSpace {
    int n_orbitals = 0;
    int n_occ = 0;

    int n_virt() const { return n_orbitals - n_occ; }
};

enum class AnsatzKind { uccsd, puccd, uccd0, uccd0_full };

std::string ansatz_name(AnsatzKind kind);

/// One excitation template t; the realized generator is weight * theta * (t - t†).
struct Excitation {
    LadderString ops;
    int group = 0;
    double weight = 1.0;
};

struct AnsatzSpec {
    AnsatzKind kind = AnsatzKind::uccsd;
    int n_spin_orbitals = 0;
    int n_parameters = 0;
    bool include_singles = false;
    std::vector<Excitation> excitations;

    /// Structured text listing (group, weight, ladder string) for golden tests.
    std::string dump() const;
};

/// Singles plus doubles. Sharing convention: singles carry one parameter
/// per (spatial pair, spin); mixed-spin doubles one per unordered pair
/// {(m,i),(n,j)} (theta_mnij = theta_nmji); same-spin doubles one per
/// (m<n, i<j) shared across spins.
AnsatzSpec uccsd_excitations(const ActiveSpace& space);

/// Pair doubles a†_{m↑}a†_{m↓}a_{i↑}a_{i↓}, one parameter each; optional
/// singles for lattice runs.
AnsatzSpec puccd_excitations(const ActiveSpace& space, bool include_singles = false);

/// Singlet doubles. Parameters are indexed by unordered virtual pairs {m,n}
/// times unordered occupied pairs {i,j}. full=false keeps one representative
/// excitation per group; full=true keeps every symmetry partner with the
/// shared parameter.
AnsatzSpec uccd0_excitations(const ActiveSpace& space, bool full, bool include_singles = false);

/// Triplet doubles component. Generated for completeness and tests; not part
/// of any shipped pipeline.
AnsatzSpec uccd1_excitations(const ActiveSpace& space);

/// Sum of weight * theta_group * (t - t†) over all excitations.
FermionOperator cluster_operator(const AnsatzSpec& spec, const std::vector<double>& theta);

}  // namespace qucc
