#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qucc/fermion.hpp"

namespace qucc {

/// One- and two-electron integrals over spatial molecular orbitals, in
/// Hartree. `g` is stored in physicist notation: g(r,s,t,u) = <rs|g|tu>.
/// `e_offset` carries the nuclear repulsion plus any frozen-core energy.
struct MolecularIntegrals {
    int n_orbitals = 0;
    int n_alpha = 0;
    int n_beta = 0;
    double e_offset = 0.0;
    Eigen::MatrixXd h;       // n x n, symmetric
    std::vector<double> g;   // n^4, flat

    MolecularIntegrals() = default;
    MolecularIntegrals(int n, int na, int nb)
        : n_orbitals(n), n_alpha(na), n_beta(nb), h(Eigen::MatrixXd::Zero(n, n)),
          g(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

    double& g_at(int r, int s, int t, int u) {
        return g[((static_cast<std::size_t>(r) * n_orbitals + s) * n_orbitals + t) * n_orbitals + u];
    }
    double g_at(int r, int s, int t, int u) const {
        return g[((static_cast<std::size_t>(r) * n_orbitals + s) * n_orbitals + t) * n_orbitals + u];
    }

    int n_spin_orbitals() const { return 2 * n_orbitals; }
};

struct HubbardSpec {
    int n_sites = 2;
    double t = 1.0;
    double u = 0.0;
    bool periodic = false;
    int n_up = 1;
    int n_down = 1;
};

/// Real antisymmetric generator of an orbital rotation R = exp(-kappa).
struct KappaMatrix {
    Eigen::MatrixXd values;

    explicit KappaMatrix(int n) : values(Eigen::MatrixXd::Zero(n, n)) {}
    explicit KappaMatrix(Eigen::MatrixXd m);

    int dim() const { return static_cast<int>(values.rows()); }
    static int n_free_parameters(int n) { return n * (n - 1) / 2; }

    /// Packs the strict upper triangle (row-major) into a flat vector and back.
    static KappaMatrix from_parameters(const std::vector<double>& params, int n);
    std::vector<double> to_parameters() const;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads an FCIDUMP stream (chemist-notation records, 1-based indices) and
/// returns integrals converted to physicist notation with the 8-fold
/// symmetry expanded. The "0 0 0 0" record becomes e_offset.
MolecularIntegrals parse_fcidump(std::istream& in);
MolecularIntegrals parse_fcidump_file(const std::string& path);

/// Writes the canonical FCIDUMP text form (chemist notation, unique
/// 8-fold-symmetry representatives, 16 significant digits).
void write_fcidump(std::ostream& out, const MolecularIntegrals& ints);

/// Expresses an N-site Hubbard chain as MolecularIntegrals in the hopping
/// eigenbasis, so the reference determinant (lowest orbitals filled) is the
/// U=0 mean-field state. Degenerate hopping eigenvalues are ordered
/// ascending with the sign fixed so each eigenvector's first nonzero
/// component is positive.
MolecularIntegrals build_hubbard(const HubbardSpec& spec);

/// Folds doubly occupied core orbitals into an effective one-body term and
/// energy offset; returns integrals over the remaining orbitals.
MolecularIntegrals apply_frozen_core(const MolecularIntegrals& ints, const std::vector<int>& core);

/// Basis change h' = C^T h C, g' = (C x C x C x C) g with C = exp(-kappa).
MolecularIntegrals rotate_integrals(const MolecularIntegrals& ints, const KappaMatrix& kappa);

/// Same transform for an explicit orthogonal C (used for composition tests).
MolecularIntegrals rotate_integrals_matrix(const MolecularIntegrals& ints, const Eigen::MatrixXd& c);

/// Assembles the second-quantized Hamiltonian over 2*n_orbitals spin
/// orbitals (block ordering, all up then all down), including e_offset.
FermionOperator build_hamiltonian(const MolecularIntegrals& ints);

}  // namespace qucc
