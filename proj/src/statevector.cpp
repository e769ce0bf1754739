#include "qucc/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "qucc/kernels.hpp"

namespace qucc {

Statevector::Statevector(int n_qubits, std::uint64_t basis_index)
    : n_qubits_(n_qubits), amps_(std::uint64_t{1} << n_qubits, cplx{0, 0}) {
    if (n_qubits < 0 || n_qubits > 30) throw std::invalid_argument("statevector: unsupported qubit count");
    if (basis_index >= dim()) throw std::invalid_argument("statevector: basis index out of range");
    amps_[basis_index] = 1.0;
}

double Statevector::norm() const {
    double acc = 0.0;
    for (const auto& a : amps_) acc += a.real() * a.real() + a.imag() * a.imag();
    return std::sqrt(acc);
}

void Statevector::assert_normalized(double tol) const {
    if (std::abs(norm() - 1.0) > tol)
        throw std::logic_error("statevector norm drifted: " + std::to_string(norm()));
}

void Statevector::apply_pauli_exponential(const PauliString& p, double angle) {
    const auto& k = kernels::active_kernels();
    const double c = std::cos(angle), s = std::sin(angle);
    if (p.x == 0) {
        if (p.z == 0) {  // global phase exp(i*angle)
            const cplx ph{c, s};
            for (auto& a : amps_) a *= ph;
            return;
        }
        k.pauli_exp_diag(amps_.data(), dim(), p.z, c, s);
        return;
    }
    // phi(b) = i^nY * (-1)^popcount(b & z); the pair-partner phase is its
    // conjugate, so both updates reduce to one sign per pair.
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx ny = ipow[p.y_count() & 3];
    const cplx w0 = cplx{0, s} * std::conj(ny);
    const cplx w1 = cplx{0, s} * ny;
    k.pauli_exp_flip(amps_.data(), dim(), p.x, p.z, c, w0, w1);
}

Statevector prepare_reference(const EncodingPlan& plan) {
    return Statevector(plan.n_qubits(), encode_determinant(plan.reference_occupations(), plan));
}

double expectation(const Statevector& state, const PauliOperator& op) {
    if (op.n_qubits() != state.n_qubits())
        throw std::invalid_argument("expectation: qubit count mismatch");
    if (!op.is_hermitian()) throw std::domain_error("expectation: operator is not Hermitian");
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx* a = state.amplitudes().data();
    const std::uint64_t n = state.dim();
    cplx acc{0, 0};
    for (const auto& [s, coef] : op.terms()) {
        const cplx ny = ipow[s.y_count() & 3];
        cplx term{0, 0};
        for (std::uint64_t b = 0; b < n; ++b) {
            const double sign = __builtin_parityll(b & s.z) ? -1.0 : 1.0;
            term += std::conj(a[b ^ s.x]) * (sign * a[b]);
        }
        acc += coef * ny * term;
    }
    if (std::abs(acc.imag()) > 1e-9)
        throw std::logic_error("expectation: imaginary residue " + std::to_string(acc.imag()));
    return acc.real();
}

CompiledExpectation::CompiledExpectation(const PauliOperator& op, std::size_t memory_budget_bytes)
    : n_qubits_(op.n_qubits()) {
    if (!op.is_hermitian()) throw std::domain_error("expectation: operator is not Hermitian");
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::uint64_t dim = std::uint64_t{1} << n_qubits_;

    diag_weights_.assign(dim, 0.0);
    bool any_diag = false;

    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, cplx>>> by_mask;
    for (const auto& [s, coef] : op.terms()) {
        if (s.x == 0) {
            if (s.z == 0) {
                constant_ += coef.real();
            } else {
                any_diag = true;
                for (std::uint64_t b = 0; b < dim; ++b)
                    diag_weights_[b] += __builtin_parityll(b & s.z) ? -coef.real() : coef.real();
            }
            continue;
        }
        by_mask[s.x].emplace_back(s.z, coef * ipow[s.y_count() & 3]);
    }
    if (!any_diag) diag_weights_.clear();

    // Precompute phase diagonals for the largest groups within the budget.
    std::vector<std::uint64_t> order;
    for (const auto& [x, terms] : by_mask) order.push_back(x);
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        auto sa = by_mask[a].size(), sb = by_mask[b].size();
        return sa != sb ? sa > sb : a < b;
    });
    std::size_t used = diag_weights_.size() * sizeof(double);
    for (std::uint64_t x : order) {
        Group g;
        g.x_mask = x;
        const auto& terms = by_mask[x];
        const std::size_t need = dim * sizeof(cplx);
        if (terms.size() > 1 && used + need <= memory_budget_bytes) {
            g.diag.assign(dim, cplx{0, 0});
            for (const auto& [z, c] : terms)
                for (std::uint64_t b = 0; b < dim; ++b)
                    g.diag[b] += __builtin_parityll(b & z) ? -c : c;
            used += need;
        } else {
            g.terms = terms;
        }
        groups_.push_back(std::move(g));
    }
    std::sort(groups_.begin(), groups_.end(),
              [](const Group& a, const Group& b) { return a.x_mask < b.x_mask; });
}

double CompiledExpectation::value(const Statevector& state) const {
    if (state.n_qubits() != n_qubits_)
        throw std::invalid_argument("expectation: qubit count mismatch");
    const auto& k = kernels::active_kernels();
    const cplx* a = state.amplitudes().data();
    const std::uint64_t dim = state.dim();
    double acc = constant_;
    if (!diag_weights_.empty()) acc += k.weighted_norm(a, dim, diag_weights_.data());
    cplx off{0, 0};
    for (const auto& g : groups_) {
        if (!g.diag.empty()) {
            off += k.phase_dot(a, dim, g.x_mask, g.diag.data());
        } else {
            for (const auto& [z, c] : g.terms) {
                cplx term{0, 0};
                for (std::uint64_t b = 0; b < dim; ++b) {
                    const double sign = __builtin_parityll(b & z) ? -1.0 : 1.0;
                    term += std::conj(a[b ^ g.x_mask]) * (sign * a[b]);
                }
                off += c * term;
            }
        }
    }
    if (std::abs(off.imag()) > 1e-9)
        throw std::logic_error("expectation: imaginary residue " + std::to_string(off.imag()));
    return acc + off.real();
}

void apply_pauli_operator(const PauliOperator& op, const std::vector<cplx>& x,
                          std::vector<cplx>& y) {
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::uint64_t n = x.size();
    y.assign(n, cplx{0, 0});
    for (const auto& [s, coef] : op.terms()) {
        const cplx c = coef * ipow[s.y_count() & 3];
        for (std::uint64_t b = 0; b < n; ++b) {
            const double sign = __builtin_parityll(b & s.z) ? -1.0 : 1.0;
            y[b ^ s.x] += c * sign * x[b];
        }
    }
}

void apply_operator_exponential(Statevector& state, const PauliOperator& op) {
    if (op.n_qubits() != state.n_qubits())
        throw std::invalid_argument("exponential: qubit count mismatch");
    if (state.n_qubits() > 16)
        throw std::runtime_error("exponential: exact path capped at 16 qubits");
    // Scaling and squaring applied to the action: exp(A)v = (exp(A/2^m))^{2^m} v
    // with the scaled exponential summed as a Taylor series.
    double norm_bound = 0.0;
    for (const auto& [s, c] : op.terms()) norm_bound += std::abs(c);
    int m = 0;
    while (norm_bound > 0.5 && m < 30) {
        norm_bound *= 0.5;
        ++m;
    }
    if (norm_bound > 0.5) throw std::runtime_error("exponential: operator norm too large");
    const double scale = std::ldexp(1.0, -m);
    PauliOperator scaled = op;
    scaled *= scale;

    auto& amps = state.amplitudes();
    std::vector<cplx> term = amps, next;
    for (std::uint64_t rep = 0; rep < (std::uint64_t{1} << m); ++rep) {
        term = amps;
        double term_norm = 1.0;
        for (int k = 1; k <= 64; ++k) {
            apply_pauli_operator(scaled, term, next);
            for (auto& v : next) v /= static_cast<double>(k);
            std::swap(term, next);
            term_norm = 0.0;
            for (std::uint64_t b = 0; b < term.size(); ++b) {
                amps[b] += term[b];
                term_norm += std::norm(term[b]);
            }
            if (term_norm < 1e-32) break;
        }
    }
    state.assert_normalized(1e-10);
}

void write_statevector(std::ostream& out, const Statevector& state) {
    static_assert(std::endian::native == std::endian::little, "dump format is little-endian");
    for (const auto& a : state.amplitudes()) {
        const double re = a.real(), im = a.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(double));
        out.write(reinterpret_cast<const char*>(&im), sizeof(double));
    }
}

Statevector read_statevector(std::istream& in, int n_qubits) {
    Statevector s(n_qubits, 0);
    for (auto& a : s.amplitudes()) {
        double re, im;
        in.read(reinterpret_cast<char*>(&re), sizeof(double));
        in.read(reinterpret_cast<char*>(&im), sizeof(double));
        if (!in) throw std::runtime_error("statevector dump truncated");
        a = {re, im};
    }
    return s;
}

std::vector<ConfigurationWeight> configuration_weights(const Statevector& state,
                                                       const EncodingPlan& plan) {
    if (state.n_qubits() != plan.n_qubits())
        throw std::invalid_argument("configuration weights: qubit count mismatch");
    const int m = plan.n_spin_orbitals;
    std::vector<ConfigurationWeight> out;
    out.reserve(state.dim());
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
        std::uint64_t occ = decode_determinant(b, plan);
        std::string s(m, '0');
        for (int p = 0; p < m; ++p)
            if ((occ >> p) & 1) s[p] = '1';
        out.push_back({std::move(s), state.amplitude(b)});
    }
    std::sort(out.begin(), out.end(), [](const ConfigurationWeight& a, const ConfigurationWeight& b) {
        double wa = std::norm(a.amplitude), wb = std::norm(b.amplitude);
        if (std::abs(wa - wb) > 1e-30) return wa > wb;
        return a.occupations < b.occupations;
    });
    return out;
}

}  // namespace qucc
