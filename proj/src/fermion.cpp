#include "qucc/fermion.hpp"

#include <cstdio>
#include <stdexcept>

namespace qucc {

FermionOperator FermionOperator::identity(int n, cplx coef) {
    FermionOperator op(n);
    op.add_term({}, coef);
    return op;
}

FermionOperator FermionOperator::term(int n, const LadderString& ops, cplx coef) {
    FermionOperator op(n);
    op.add_term(ops, coef);
    return op;
}

void FermionOperator::add_term(const LadderString& ops, cplx coef) {
    if (std::abs(coef) <= kCoefEps) return;
    // Worklist rewriting with {a_p, a†_q} = δ_pq, {a_p, a_q} = {a†_p, a†_q} = 0
    // until every string is canonical (creations desc, annihilations desc).
    std::vector<std::pair<LadderString, cplx>> work;
    work.emplace_back(ops, coef);
    while (!work.empty()) {
        auto [s, c] = std::move(work.back());
        work.pop_back();
        bool rewritten = false;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            const LadderOp &l = s[i], &r = s[i + 1];
            if (!l.dagger && r.dagger) {
                // a_p a†_q = δ_pq - a†_q a_p
                LadderString swapped = s;
                std::swap(swapped[i], swapped[i + 1]);
                work.emplace_back(std::move(swapped), -c);
                if (l.index == r.index) {
                    LadderString contracted = s;
                    contracted.erase(contracted.begin() + i, contracted.begin() + i + 2);
                    work.emplace_back(std::move(contracted), c);
                }
                rewritten = true;
                break;
            }
            if (l.dagger == r.dagger) {
                if (l.index == r.index) {
                    rewritten = true;  // repeated creation/annihilation: zero
                    break;
                }
                if (l.index < r.index) {
                    LadderString swapped = s;
                    std::swap(swapped[i], swapped[i + 1]);
                    work.emplace_back(std::move(swapped), -c);
                    rewritten = true;
                    break;
                }
            }
        }
        if (rewritten) continue;
        auto it = terms_.find(s);
        if (it == terms_.end()) {
            if (std::abs(c) > kCoefEps) terms_.emplace(std::move(s), c);
        } else {
            it->second += c;
            if (std::abs(it->second) <= kCoefEps) terms_.erase(it);
        }
    }
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
    if (n_modes_ != o.n_modes_) throw std::invalid_argument("FermionOperator: mode count mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& o) {
    if (n_modes_ != o.n_modes_) throw std::invalid_argument("FermionOperator: mode count mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

FermionOperator& FermionOperator::operator*=(cplx scale) {
    if (std::abs(scale) <= kCoefEps) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, c] : terms_) c *= scale;
    return *this;
}

FermionOperator FermionOperator::adjoint() const {
    FermionOperator r(n_modes_);
    for (const auto& [s, c] : terms_) {
        LadderString rev(s.rbegin(), s.rend());
        for (auto& op : rev) op.dagger = !op.dagger;
        r.add_term(rev, std::conj(c));
    }
    return r;
}

cplx FermionOperator::coefficient(const LadderString& ops) const {
    auto it = terms_.find(ops);
    return it == terms_.end() ? cplx{0, 0} : it->second;
}

void FermionOperator::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= eps)
            it = terms_.erase(it);
        else
            ++it;
    }
}

std::string FermionOperator::to_text() const {
    std::string out;
    char buf[64];
    for (const auto& [s, c] : terms_) {
        std::snprintf(buf, sizeof(buf), "(%.12g%+.12gj) * [", c.real() + 0.0, c.imag() + 0.0);
        out += buf;
        bool first = true;
        for (const auto& op : s) {
            if (!first) out += ' ';
            first = false;
            out += std::to_string(op.index);
            out += op.dagger ? '+' : '-';
        }
        out += "]\n";
    }
    return out;
}

FermionOperator operator+(FermionOperator a, const FermionOperator& b) {
    a += b;
    return a;
}

FermionOperator operator-(FermionOperator a, const FermionOperator& b) {
    a -= b;
    return a;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
    if (a.n_modes() != b.n_modes()) throw std::invalid_argument("FermionOperator: mode count mismatch");
    FermionOperator r(a.n_modes());
    for (const auto& [sa, ca] : a.terms())
        for (const auto& [sb, cb] : b.terms()) {
            LadderString s = sa;
            s.insert(s.end(), sb.begin(), sb.end());
            r.add_term(s, ca * cb);
        }
    return r;
}

FermionOperator operator*(cplx scale, FermionOperator a) {
    a *= scale;
    return a;
}

FermionOperator fermion_commutator(const FermionOperator& a, const FermionOperator& b) {
    return a * b - b * a;
}

FermionOperator number_operator(Spin spin, int n_orbitals) {
    FermionOperator op(2 * n_orbitals);
    for (int r = 0; r < n_orbitals; ++r) {
        int p = spin_orbital(r, spin, n_orbitals);
        op.add_term({{p, true}, {p, false}}, 1.0);
    }
    return op;
}

FermionOperator total_number_operator(int n_spin_orbitals) {
    FermionOperator op(n_spin_orbitals);
    for (int p = 0; p < n_spin_orbitals; ++p) op.add_term({{p, true}, {p, false}}, 1.0);
    return op;
}

}  // namespace qucc
