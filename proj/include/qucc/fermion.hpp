#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qucc/pauli.hpp"

namespace qucc {

/// One ladder operator: spin-orbital index plus creation flag.
struct LadderOp {
    int index = 0;
    bool dagger = false;

    auto operator<=>(const LadderOp&) const = default;
};

/// Ordered product of ladder operators (leftmost first).
using LadderString = std::vector<LadderOp>;

enum class Spin { up, down };

/// Spin-orbital flattening: all spin-up orbitals first, then all spin-down.
inline int spin_orbital(int spatial, Spin spin, int n_orbitals) {
    return spatial + (spin == Spin::down ? n_orbitals : 0);
}

/// Sparse sum of normal-ordered second-quantized strings. Canonical form:
/// creations with strictly decreasing indices, then annihilations with
/// strictly decreasing indices; no repeated index within a block; no stored
/// coefficient below kCoefEps.
class FermionOperator {
  public:
    FermionOperator() = default;
    explicit FermionOperator(int n_spin_orbitals) : n_modes_(n_spin_orbitals) {}

    static FermionOperator identity(int n_spin_orbitals, cplx coef = 1.0);
    /// Single product term, normal-ordered on insertion.
    static FermionOperator term(int n_spin_orbitals, const LadderString& ops, cplx coef = 1.0);

    int n_modes() const { return n_modes_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::map<LadderString, cplx>& terms() const { return terms_; }

    /// Adds coef * ops, rewriting into canonical normal order via the
    /// anticommutation relations; absorbs into existing terms.
    void add_term(const LadderString& ops, cplx coef);

    FermionOperator& operator+=(const FermionOperator& o);
    FermionOperator& operator-=(const FermionOperator& o);
    FermionOperator& operator*=(cplx scale);

    FermionOperator adjoint() const;
    cplx coefficient(const LadderString& ops) const;
    void prune(double eps = kCoefEps);

    /// Debug text, one term per line: "(re+imj) * [3+ 1+ 0- 2-]".
    std::string to_text() const;

  private:
    int n_modes_ = 0;
    std::map<LadderString, cplx> terms_;
};

FermionOperator operator+(FermionOperator a, const FermionOperator& b);
FermionOperator operator-(FermionOperator a, const FermionOperator& b);
FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);
FermionOperator operator*(cplx scale, FermionOperator a);

FermionOperator fermion_commutator(const FermionOperator& a, const FermionOperator& b);

/// Number operator for one spin species over n_orbitals spatial orbitals.
FermionOperator number_operator(Spin spin, int n_orbitals);

/// Total particle-number operator over all spin-orbitals.
FermionOperator total_number_operator(int n_spin_orbitals);

}  // namespace qucc
