#include "qucc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace qucc {

namespace {

struct Amp {
    double sign = 1.0;
    std::uint64_t mask = 0;
    bool ok = true;
};

inline Amp annihilate(Amp a, int p) {
    if (!a.ok || !((a.mask >> p) & 1)) return {0.0, 0, false};
    if (__builtin_parityll(a.mask & ((1ULL << p) - 1))) a.sign = -a.sign;
    a.mask &= ~(1ULL << p);
    return a;
}

inline Amp create(Amp a, int p) {
    if (!a.ok || ((a.mask >> p) & 1)) return {0.0, 0, false};
    if (__builtin_parityll(a.mask & ((1ULL << p) - 1))) a.sign = -a.sign;
    a.mask |= 1ULL << p;
    return a;
}

std::vector<std::uint64_t> combinations(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k < 0 || k > n) return out;
    std::uint64_t v = (1ULL << k) - 1;
    const std::uint64_t limit = 1ULL << n;
    while (v < limit) {
        out.push_back(v);
        if (v == 0) break;
        std::uint64_t t = v | (v - 1);  // next bit permutation
        v = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
    }
    return out;
}

}  // namespace

std::size_t SectorBasis::index_of(std::uint64_t up, std::uint64_t dn) const {
    auto it = std::lower_bound(dets.begin(), dets.end(), std::make_pair(up, dn));
    if (it == dets.end() || *it != std::make_pair(up, dn))
        throw std::logic_error("sector basis: determinant not found");
    return static_cast<std::size_t>(it - dets.begin());
}

SectorBasis make_sector_basis(int n_orbitals, int n_alpha, int n_beta) {
    SectorBasis b;
    b.n_orbitals = n_orbitals;
    b.n_alpha = n_alpha;
    b.n_beta = n_beta;
    auto ups = combinations(n_orbitals, n_alpha);
    auto dns = combinations(n_orbitals, n_beta);
    b.dets.reserve(ups.size() * dns.size());
    for (auto up : ups)
        for (auto dn : dns) b.dets.emplace_back(up, dn);
    std::sort(b.dets.begin(), b.dets.end());
    return b;
}

double determinant_energy(const MolecularIntegrals& ints, std::uint64_t up, std::uint64_t dn) {
    const int n = ints.n_orbitals;
    double e = ints.e_offset;
    std::vector<int> occ_up, occ_dn;
    for (int p = 0; p < n; ++p) {
        if ((up >> p) & 1) occ_up.push_back(p);
        if ((dn >> p) & 1) occ_dn.push_back(p);
    }
    for (int p : occ_up) e += ints.h(p, p);
    for (int p : occ_dn) e += ints.h(p, p);
    for (int p : occ_up)
        for (int q : occ_up) e += 0.5 * (ints.g_at(p, q, p, q) - ints.g_at(p, q, q, p));
    for (int p : occ_dn)
        for (int q : occ_dn) e += 0.5 * (ints.g_at(p, q, p, q) - ints.g_at(p, q, q, p));
    for (int p : occ_up)
        for (int q : occ_dn) e += ints.g_at(p, q, p, q);
    return e;
}

namespace {

/// Emits every off-diagonal element <D'|H|D> for determinant D via
/// Slater-Condon rules, signs evaluated on the combined occupation mask.
template <class Emit>
void connected_elements(const MolecularIntegrals& ints, std::uint64_t up, std::uint64_t dn,
                        Emit&& emit) {
    const int n = ints.n_orbitals;
    std::vector<int> occ_up, occ_dn, vir_up, vir_dn;
    for (int p = 0; p < n; ++p) {
        ((up >> p) & 1 ? occ_up : vir_up).push_back(p);
        ((dn >> p) & 1 ? occ_dn : vir_dn).push_back(p);
    }
    const std::uint64_t comb = up | (dn << n);

    auto one_body = [&](int m, int i, bool spin_up) {
        // h + Coulomb over all occupied, exchange over same spin.
        double v = ints.h(m, i);
        for (int q : occ_up) {
            v += ints.g_at(m, q, i, q);
            if (spin_up && q != i) v -= ints.g_at(m, q, q, i);
        }
        for (int q : occ_dn) {
            v += ints.g_at(m, q, i, q);
            if (!spin_up && q != i) v -= ints.g_at(m, q, q, i);
        }
        v -= ints.g_at(m, i, i, i);  // remove the same-spin q == i Coulomb term
        return v;
    };

    // Singles.
    for (int i : occ_up)
        for (int m : vir_up) {
            Amp a = create(annihilate({1.0, comb, true}, i), m);
            emit(up ^ (1ULL << i) ^ (1ULL << m), dn, a.sign * one_body(m, i, true));
        }
    for (int i : occ_dn)
        for (int m : vir_dn) {
            Amp a = create(annihilate({1.0, comb, true}, i + n), m + n);
            emit(up, dn ^ (1ULL << i) ^ (1ULL << m), a.sign * one_body(m, i, false));
        }

    // Same-spin doubles: value = amp(a†_m a†_p a_j a_i) (g(mpij) - g(mpji)).
    auto same_spin = [&](const std::vector<int>& occ, const std::vector<int>& vir, int off,
                         bool spin_is_up) {
        for (std::size_t ii = 0; ii < occ.size(); ++ii)
            for (std::size_t jj = ii + 1; jj < occ.size(); ++jj)
                for (std::size_t mm = 0; mm < vir.size(); ++mm)
                    for (std::size_t pp = mm + 1; pp < vir.size(); ++pp) {
                        int i = occ[ii], j = occ[jj], m = vir[mm], p = vir[pp];
                        Amp a = create(create(annihilate(annihilate({1.0, comb, true}, i + off),
                                                         j + off), p + off), m + off);
                        double v = a.sign * (ints.g_at(m, p, i, j) - ints.g_at(m, p, j, i));
                        std::uint64_t flips = (1ULL << i) | (1ULL << j) | (1ULL << m) | (1ULL << p);
                        if (spin_is_up)
                            emit(up ^ flips, dn, v);
                        else
                            emit(up, dn ^ flips, v);
                    }
    };
    same_spin(occ_up, vir_up, 0, true);
    same_spin(occ_dn, vir_dn, n, false);

    // Mixed doubles: value = amp(a†_{m↑} a†_{p↓} a_{j↓} a_{i↑}) g(mpij).
    for (int i : occ_up)
        for (int m : vir_up)
            for (int j : occ_dn)
                for (int p : vir_dn) {
                    Amp a = create(create(annihilate(annihilate({1.0, comb, true}, i), j + n),
                                          p + n), m);
                    emit(up ^ (1ULL << i) ^ (1ULL << m), dn ^ (1ULL << j) ^ (1ULL << p),
                         a.sign * ints.g_at(m, p, i, j));
                }
}

void sector_matvec(const MolecularIntegrals& ints, const SectorBasis& basis,
                   const std::vector<double>& diag, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    y.setZero(static_cast<Eigen::Index>(basis.dimension()));
    for (std::size_t r = 0; r < basis.dimension(); ++r) {
        auto [up, dn] = basis.dets[r];
        y[static_cast<Eigen::Index>(r)] += diag[r] * x[static_cast<Eigen::Index>(r)];
        connected_elements(ints, up, dn, [&](std::uint64_t u2, std::uint64_t d2, double v) {
            if (v == 0.0) return;
            auto c = basis.index_of(u2, d2);
            y[static_cast<Eigen::Index>(c)] += v * x[static_cast<Eigen::Index>(r)];
        });
    }
}

}  // namespace

ExactGround exact_ground(const MolecularIntegrals& ints) {
    ExactGround out;
    out.basis = make_sector_basis(ints.n_orbitals, ints.n_alpha, ints.n_beta);
    const std::size_t dim = out.basis.dimension();
    if (dim == 0) throw std::invalid_argument("exact: empty sector");
    if (dim > 400000) throw std::runtime_error("exact: sector dimension exceeds cap");

    std::vector<double> diag(dim);
    for (std::size_t r = 0; r < dim; ++r)
        diag[r] = determinant_energy(ints, out.basis.dets[r].first, out.basis.dets[r].second);

    if (dim <= 4000) {
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            h(r, r) = diag[r];
            auto [up, dn] = out.basis.dets[r];
            connected_elements(ints, up, dn, [&](std::uint64_t u2, std::uint64_t d2, double v) {
                h(out.basis.index_of(u2, d2), r) += v;
            });
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        out.energy = es.eigenvalues()[0];
        out.eigenvector = es.eigenvectors().col(0);
        return out;
    }

    // Lanczos with full reorthogonalization, deterministic seeded start.
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> dist;
    Eigen::VectorXd v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[static_cast<Eigen::Index>(i)] = dist(rng);
    v.normalize();
    std::vector<Eigen::VectorXd> vs{v};
    std::vector<double> alpha, beta;
    Eigen::VectorXd w(dim);
    double last = 1e300;
    const int max_iter = std::min<std::size_t>(dim, 400);
    for (int it = 0; it < max_iter; ++it) {
        sector_matvec(ints, out.basis, diag, vs.back(), w);
        alpha.push_back(vs.back().dot(w));
        for (const auto& u : vs) w -= u.dot(w) * u;
        for (const auto& u : vs) w -= u.dot(w) * u;  // second pass
        const double b = w.norm();
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(alpha.size(), alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < alpha.size()) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        const double e0 = es.eigenvalues()[0];
        if (std::abs(e0 - last) < 1e-13 || b < 1e-12 || it == max_iter - 1) {
            out.energy = e0;
            Eigen::VectorXd ritz = Eigen::VectorXd::Zero(dim);
            for (std::size_t i = 0; i < alpha.size(); ++i)
                ritz += es.eigenvectors()(i, 0) * vs[i];
            ritz.normalize();
            out.eigenvector = ritz;
            return out;
        }
        last = e0;
        beta.push_back(b);
        vs.push_back(w / b);
    }
    throw std::logic_error("exact: lanczos failed to converge");
}

Eigen::MatrixXcd pauli_dense_restricted(const PauliOperator& op,
                                        const std::vector<std::uint64_t>& basis) {
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::unordered_map<std::uint64_t, std::size_t> row;
    row.reserve(basis.size() * 2);
    for (std::size_t i = 0; i < basis.size(); ++i) row[basis[i]] = i;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
    for (const auto& [s, coef] : op.terms()) {
        const cplx c = coef * ipow[s.y_count() & 3];
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const std::uint64_t b = basis[j];
            auto it = row.find(b ^ s.x);
            if (it == row.end()) continue;  // restriction projects out
            const double sign = __builtin_parityll(b & s.z) ? -1.0 : 1.0;
            m(it->second, j) += c * sign;
        }
    }
    return m;
}

std::vector<std::uint64_t> sector_indices(const EncodingPlan& plan, int n_alpha, int n_beta) {
    const int n = plan.n_spin_orbitals / 2;
    std::vector<std::uint64_t> out;
    // Enumerate determinants and push their encoded images; with tapering
    // attached, only the plan's symmetry sector is representable and the
    // remaining determinants are filtered out.
    for (std::uint64_t up : combinations(n, n_alpha))
        for (std::uint64_t dn : combinations(n, n_beta)) {
            const std::uint64_t occ = up | (dn << n);
            if (!plan.taper_generators.empty()) {
                const std::uint64_t base = encode_occupations_base(occ, plan);
                bool in_sector = true;
                for (const auto& g : plan.taper_generators) {
                    int ev = __builtin_parityll(base & g.pauli.z) ? -1 : +1;
                    if (ev != g.sector_eigenvalue) {
                        in_sector = false;
                        break;
                    }
                }
                if (!in_sector) continue;
            }
            out.push_back(encode_determinant(occ, plan));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> exact_spectrum_sector(const PauliOperator& op,
                                          const std::vector<std::uint64_t>& basis) {
    std::vector<std::uint64_t> states = basis;
    if (states.empty()) {
        if (op.n_qubits() > 12) throw std::runtime_error("spectrum: full space capped at 12 qubits");
        states.resize(std::size_t{1} << op.n_qubits());
        for (std::size_t i = 0; i < states.size(); ++i) states[i] = i;
    }
    if (states.size() > 4000) throw std::runtime_error("spectrum: restricted basis capped at 4000");
    Eigen::MatrixXcd m = pauli_dense_restricted(op, states);
    if ((m - m.adjoint()).norm() > 1e-8 * std::max(1.0, m.norm()))
        throw std::domain_error("spectrum: operator is not Hermitian on the basis");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + states.size());
    return ev;
}

}  // namespace qucc
