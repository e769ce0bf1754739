#include "qucc/pauli.hpp"

#include <cstdio>
#include <stdexcept>

namespace qucc {

std::string PauliString::to_string(int n_qubits) const {
    std::string s(n_qubits, 'I');
    for (int q = 0; q < n_qubits; ++q) s[q] = letter(q);
    return s;
}

std::pair<PauliString, cplx> pauli_product(const PauliString& a, const PauliString& b) {
    PauliString r{a.x ^ b.x, a.z ^ b.z};
    // i-exponent from per-qubit products: cyclic pairs (XY, YZ, ZX) give +i,
    // anticyclic (YX, ZY, XZ) give -i.
    std::uint64_t ax = a.x, az = a.z, bx = b.x, bz = b.z;
    std::uint64_t cyc = (ax & ~az & bx & bz)    // X*Y
                      | (ax & az & ~bx & bz)    // Y*Z
                      | (~ax & az & bx & ~bz);  // Z*X
    std::uint64_t acyc = (ax & az & bx & ~bz)   // Y*X
                       | (~ax & az & bx & bz)   // Z*Y
                       | (ax & ~az & ~bx & bz); // X*Z
    int e = (__builtin_popcountll(cyc) - __builtin_popcountll(acyc)) & 3;
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {r, ipow[e]};
}

PauliOperator PauliOperator::identity(int n_qubits, cplx coef) {
    PauliOperator op(n_qubits);
    op.add_term(PauliString{}, coef);
    return op;
}

void PauliOperator::add_term(const PauliString& s, cplx coef) {
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        if (std::abs(coef) > kCoefEps) terms_.emplace(s, coef);
        return;
    }
    it->second += coef;
    if (std::abs(it->second) <= kCoefEps) terms_.erase(it);
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& o) {
    if (n_qubits_ != o.n_qubits_) throw std::invalid_argument("PauliOperator: qubit count mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& o) {
    if (n_qubits_ != o.n_qubits_) throw std::invalid_argument("PauliOperator: qubit count mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

PauliOperator& PauliOperator::operator*=(cplx scale) {
    if (std::abs(scale) <= kCoefEps) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, c] : terms_) c *= scale;
    return *this;
}

PauliOperator PauliOperator::adjoint() const {
    PauliOperator r(n_qubits_);
    for (const auto& [s, c] : terms_) r.terms_.emplace(s, std::conj(c));
    return r;
}

cplx PauliOperator::coefficient(const PauliString& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? cplx{0, 0} : it->second;
}

bool PauliOperator::is_hermitian(double tol) const {
    for (const auto& [s, c] : terms_)
        if (std::abs(c.imag()) > tol) return false;
    return true;
}

void PauliOperator::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= eps)
            it = terms_.erase(it);
        else
            ++it;
    }
}

std::string PauliOperator::to_text() const {
    std::string out;
    char buf[80];
    for (const auto& [s, c] : terms_) {
        std::snprintf(buf, sizeof(buf), "(%.12g%+.12gj) ", c.real() + 0.0, c.imag() + 0.0);
        out += buf;
        out += s.to_string(n_qubits_);
        out += '\n';
    }
    return out;
}

PauliOperator operator+(PauliOperator a, const PauliOperator& b) {
    a += b;
    return a;
}

PauliOperator operator-(PauliOperator a, const PauliOperator& b) {
    a -= b;
    return a;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
    if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("PauliOperator: qubit count mismatch");
    PauliOperator r(a.n_qubits());
    for (const auto& [sa, ca] : a.terms())
        for (const auto& [sb, cb] : b.terms()) {
            auto [s, phase] = pauli_product(sa, sb);
            r.add_term(s, ca * cb * phase);
        }
    return r;
}

PauliOperator operator*(cplx scale, PauliOperator a) {
    a *= scale;
    return a;
}

PauliOperator pauli_commutator(const PauliOperator& a, const PauliOperator& b) {
    return a * b - b * a;
}

}  // namespace qucc
