#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qucc/encoding.hpp"
#include "qucc/pauli.hpp"

namespace qucc {

/// 2^n complex amplitudes; qubit 0 is the least significant bit of the
/// basis index. Unit norm is an invariant of every public operation.
class Statevector {
  public:
    explicit Statevector(int n_qubits, std::uint64_t basis_index = 0);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& amplitudes() { return amps_; }
    cplx amplitude(std::uint64_t b) const { return amps_[b]; }

    double norm() const;
    void assert_normalized(double tol = 1e-10) const;

    /// state <- exp(i * angle * P), applied exactly in one pass.
    void apply_pauli_exponential(const PauliString& p, double angle);

  private:
    int n_qubits_;
    std::vector<cplx> amps_;
};

/// Basis state |HF> of the plan's reference determinant.
Statevector prepare_reference(const EncodingPlan& plan);

/// <state|op|state> accumulated term by term. Requires a Hermitian operator;
/// asserts the imaginary residue stays below 1e-9.
double expectation(const Statevector& state, const PauliOperator& op);

/// Repeated-evaluation form of `expectation`: terms grouped by their bit-flip
/// mask with per-group phase diagonals precomputed up to a memory budget.
class CompiledExpectation {
  public:
    explicit CompiledExpectation(const PauliOperator& op,
                                 std::size_t memory_budget_bytes = std::size_t{256} << 20);

    double value(const Statevector& state) const;
    int n_qubits() const { return n_qubits_; }

  private:
    struct Group {
        std::uint64_t x_mask;
        std::vector<cplx> diag;                               // precomputed phase diagonal
        std::vector<std::pair<std::uint64_t, cplx>> terms;    // (phase_mask, i^nY * coef) fallback
    };
    int n_qubits_ = 0;
    double constant_ = 0.0;
    std::vector<double> diag_weights_;  // real diagonal part (identity + Z-only terms)
    std::vector<Group> groups_;
};

/// y <- op|x> (dense vectors of matching dimension).
void apply_pauli_operator(const PauliOperator& op, const std::vector<cplx>& x,
                          std::vector<cplx>& y);

/// state <- exp(op) * state for an anti-Hermitian op, exact to machine
/// precision via scaling plus a Taylor series of the operator action.
/// Capability limit: 16 qubits.
void apply_operator_exponential(Statevector& state, const PauliOperator& op);

/// Debug dump: little-endian (re, im) pairs of 64-bit reals, basis order.
void write_statevector(std::ostream& out, const Statevector& state);
Statevector read_statevector(std::istream& in, int n_qubits);

struct ConfigurationWeight {
    std::string occupations;  // char p = occupation of spin-orbital p
    cplx amplitude;
};

/// Amplitudes decoded back to fermionic occupation strings, sorted by
/// descending |amplitude| (ties: lexicographic occupation string).
/// Not available for tapered plans.
std::vector<ConfigurationWeight> configuration_weights(const Statevector& state,
                                                       const EncodingPlan& plan);

}  // namespace qucc
