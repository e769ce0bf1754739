#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qucc {

using cplx = std::complex<double>;

/// Coefficients with magnitude below this are dropped everywhere.
inline constexpr double kCoefEps = 1e-12;

/// A phase-free n-qubit Pauli string (n <= 64). Bit j of `x` / `z` is set
/// when qubit j carries an X / Z component; both bits set means Y. The
/// string itself is Hermitian; phases live in the operator coefficients.
struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    bool operator==(const PauliString& o) const { return x == o.x && z == o.z; }
    bool operator<(const PauliString& o) const {
        return x != o.x ? x < o.x : z < o.z;
    }

    bool is_identity() const { return x == 0 && z == 0; }
    int weight() const { return __builtin_popcountll(x | z); }
    int y_count() const { return __builtin_popcountll(x & z); }

    bool commutes_with(const PauliString& o) const {
        int anti = __builtin_popcountll(x & o.z) + __builtin_popcountll(z & o.x);
        return (anti & 1) == 0;
    }

    char letter(int qubit) const {
        bool bx = (x >> qubit) & 1, bz = (z >> qubit) & 1;
        return bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
    }

    std::string to_string(int n_qubits) const;
};

/// Product of two strings: result.first is the bitwise-xor string,
/// result.second the accumulated i^k phase of the ordered product a*b.
std::pair<PauliString, cplx> pauli_product(const PauliString& a, const PauliString& b);

/// Sparse sum of Pauli strings with complex coefficients.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(int n_qubits) : n_qubits_(n_qubits) {}

    static PauliOperator identity(int n_qubits, cplx coef = 1.0);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::map<PauliString, cplx>& terms() const { return terms_; }

    void add_term(const PauliString& s, cplx coef);
    PauliOperator& operator+=(const PauliOperator& o);
    PauliOperator& operator-=(const PauliOperator& o);
    PauliOperator& operator*=(cplx scale);

    PauliOperator adjoint() const;
    cplx coefficient(const PauliString& s) const;

    /// True when all coefficients are real to within `tol` (strings are
    /// Hermitian and linearly independent, so this decides Hermiticity).
    bool is_hermitian(double tol = 1e-10) const;

    void prune(double eps = kCoefEps);

    /// Text form "(re+imj) XYZI", one term per line, canonical order.
    std::string to_text() const;

  private:
    int n_qubits_ = 0;
    std::map<PauliString, cplx> terms_;
};

PauliOperator operator+(PauliOperator a, const PauliOperator& b);
PauliOperator operator-(PauliOperator a, const PauliOperator& b);
PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
PauliOperator operator*(cplx scale, PauliOperator a);

/// Commutator [a, b].
PauliOperator pauli_commutator(const PauliOperator& a, const PauliOperator& b);

}  // namespace qucc
