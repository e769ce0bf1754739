#include "qucc/hamiltonian.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace qucc {

KappaMatrix::KappaMatrix(Eigen::MatrixXd m) : values(std::move(m)) {
    if (values.rows() != values.cols()) throw std::invalid_argument("kappa must be square");
    if ((values + values.transpose()).norm() > 1e-10)
        throw std::invalid_argument("kappa must be antisymmetric");
}

KappaMatrix KappaMatrix::from_parameters(const std::vector<double>& params, int n) {
    if (static_cast<int>(params.size()) != n_free_parameters(n))
        throw std::invalid_argument("kappa parameter count mismatch");
    KappaMatrix k(n);
    std::size_t idx = 0;
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) {
            k.values(r, s) = params[idx];
            k.values(s, r) = -params[idx];
            ++idx;
        }
    return k;
}

std::vector<double> KappaMatrix::to_parameters() const {
    const int n = dim();
    std::vector<double> params;
    params.reserve(n_free_parameters(n));
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) params.push_back(values(r, s));
    return params;
}

namespace {

void set_chemist_entry(MolecularIntegrals& ints, int i, int j, int k, int l, double v) {
    // Chemist (ij|kl) equals physicist <ik|g|jl>; expand the 8 real-orbital
    // permutational images.
    const int idx[8][4] = {{i, j, k, l}, {j, i, k, l}, {i, j, l, k}, {j, i, l, k},
                           {k, l, i, j}, {l, k, i, j}, {k, l, j, i}, {l, k, j, i}};
    for (const auto& t : idx) ints.g_at(t[0], t[2], t[1], t[3]) = v;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("fcidump line " + std::to_string(line) + ": " + what);
}

}  // namespace

MolecularIntegrals parse_fcidump(std::istream& in) {
    std::string line;
    int line_no = 0;

    // Header: &FCI key=value,... terminated by &END or /.
    std::string header;
    bool header_done = false;
    while (!header_done && std::getline(in, line)) {
        ++line_no;
        header += ' ' + line;
        std::string upper = line;
        std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
        if (upper.find("&END") != std::string::npos || upper.find('/') != std::string::npos)
            header_done = true;
    }
    if (!header_done) fail(line_no, "missing &END/'/' header terminator");

    auto header_int = [&](const std::string& key, bool required, long fallback) -> long {
        std::string upper = header;
        std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
        auto pos = upper.find(key);
        while (pos != std::string::npos) {
            bool left_ok = pos == 0 || !std::isalnum(static_cast<unsigned char>(upper[pos - 1]));
            if (left_ok) break;
            pos = upper.find(key, pos + 1);
        }
        if (pos == std::string::npos) {
            if (required) fail(line_no, "header key " + key + " not found");
            return fallback;
        }
        pos += key.size();
        while (pos < upper.size() && (std::isspace(static_cast<unsigned char>(upper[pos])) || upper[pos] == '='))
            ++pos;
        std::size_t end = pos;
        while (end < upper.size() && (std::isdigit(static_cast<unsigned char>(upper[end])) ||
                                      upper[end] == '-' || upper[end] == '+'))
            ++end;
        if (end == pos) fail(line_no, "header key " + key + " has no integer value");
        return std::stol(header.substr(pos, end - pos));
    };

    const long norb = header_int("NORB", true, 0);
    const long nelec = header_int("NELEC", true, 0);
    const long ms2 = header_int("MS2", false, 0);
    if (norb <= 0) fail(line_no, "NORB must be positive");
    if (nelec < 0 || (nelec + ms2) % 2 != 0) fail(line_no, "inconsistent NELEC/MS2");
    const int n_alpha = static_cast<int>((nelec + ms2) / 2);
    const int n_beta = static_cast<int>((nelec - ms2) / 2);
    if (n_alpha < 0 || n_beta < 0 || n_alpha + n_beta > 2 * norb)
        fail(line_no, "electron count out of range");

    MolecularIntegrals ints(static_cast<int>(norb), n_alpha, n_beta);

    // Track previously seen records so conflicting duplicates are rejected.
    std::map<std::array<int, 4>, double> seen_2e;
    std::map<std::array<int, 2>, double> seen_1e;
    bool seen_core = false;
    double core_value = 0.0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        double value;
        long i, j, k, l;
        if (!(ss >> value)) continue;  // blank line
        if (!(ss >> i >> j >> k >> l)) fail(line_no, "expected 'value i j k l'");
        if (i < 0 || j < 0 || k < 0 || l < 0 || i > norb || j > norb || k > norb || l > norb)
            fail(line_no, "index out of range");
        if (i == 0 && j == 0 && k == 0 && l == 0) {
            if (seen_core && std::abs(core_value - value) > 1e-12)
                fail(line_no, "conflicting core-energy records");
            seen_core = true;
            core_value = value;
            ints.e_offset = value;
        } else if (k == 0 && l == 0) {
            if (i == 0 || j == 0) fail(line_no, "one-electron record needs two indices");
            std::array<int, 2> key{static_cast<int>(std::max(i, j)), static_cast<int>(std::min(i, j))};
            auto it = seen_1e.find(key);
            if (it != seen_1e.end() && std::abs(it->second - value) > 1e-12)
                fail(line_no, "conflicting one-electron records");
            seen_1e[key] = value;
            ints.h(i - 1, j - 1) = value;
            ints.h(j - 1, i - 1) = value;
        } else if (i == 0 || j == 0 || k == 0 || l == 0) {
            fail(line_no, "mixed zero/nonzero indices");
        } else {
            auto canon = [](int a, int b, int c, int d) {
                if (a < b) std::swap(a, b);
                if (c < d) std::swap(c, d);
                if (a < c || (a == c && b < d)) {
                    std::swap(a, c);
                    std::swap(b, d);
                }
                return std::array<int, 4>{a, b, c, d};
            };
            auto key = canon(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k),
                             static_cast<int>(l));
            auto it = seen_2e.find(key);
            if (it != seen_2e.end() && std::abs(it->second - value) > 1e-12)
                fail(line_no, "conflicting two-electron records");
            seen_2e[key] = value;
            set_chemist_entry(ints, static_cast<int>(i) - 1, static_cast<int>(j) - 1,
                              static_cast<int>(k) - 1, static_cast<int>(l) - 1, value);
        }
    }
    return ints;
}

MolecularIntegrals parse_fcidump_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fcidump file: " + path);
    return parse_fcidump(in);
}

void write_fcidump(std::ostream& out, const MolecularIntegrals& ints) {
    const int n = ints.n_orbitals;
    const int nelec = ints.n_alpha + ints.n_beta;
    const int ms2 = ints.n_alpha - ints.n_beta;
    out << "&FCI NORB=" << n << ", NELEC=" << nelec << ", MS2=" << ms2 << ",\n&END\n";
    char buf[64];
    auto emit = [&](double v, int i, int j, int k, int l) {
        if (std::abs(v) <= kCoefEps && !(i == 0 && j == 0 && k == 0 && l == 0)) return;
        std::snprintf(buf, sizeof(buf), "%24.16e %3d %3d %3d %3d\n", v, i, j, k, l);
        out << buf;
    };
    // Unique chemist representatives: i>=j, k>=l, (i,j) >= (k,l).
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            for (int k = 1; k <= i; ++k)
                for (int l = 1; l <= k; ++l) {
                    if (k == i && l > j) continue;
                    emit(ints.g_at(i - 1, k - 1, j - 1, l - 1), i, j, k, l);
                }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) emit(ints.h(i - 1, j - 1), i, j, 0, 0);
    emit(ints.e_offset, 0, 0, 0, 0);
}

MolecularIntegrals build_hubbard(const HubbardSpec& spec) {
    if (spec.n_sites < 2) throw std::invalid_argument("hubbard: need at least 2 sites");
    if (spec.n_up < 0 || spec.n_down < 0 || spec.n_up > spec.n_sites || spec.n_down > spec.n_sites)
        throw std::invalid_argument("hubbard: filling out of range");

    const int n = spec.n_sites;
    Eigen::MatrixXd hop = Eigen::MatrixXd::Zero(n, n);
    for (int r = 0; r + 1 < n; ++r) {
        hop(r, r + 1) -= spec.t;
        hop(r + 1, r) -= spec.t;
    }
    if (spec.periodic && n > 2) {
        hop(n - 1, 0) -= spec.t;
        hop(0, n - 1) -= spec.t;
    } else if (spec.periodic && n == 2) {
        // The wrap bond coincides with the open bond on a 2-site ring.
        hop(0, 1) -= spec.t;
        hop(1, 0) -= spec.t;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hop);
    Eigen::MatrixXd v = es.eigenvectors();  // columns ascending by eigenvalue
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            if (std::abs(v(r, c)) > 1e-12) {
                if (v(r, c) < 0) v.col(c) *= -1.0;
                break;
            }
        }
    }

    MolecularIntegrals ints(n, spec.n_up, spec.n_down);
    ints.h = v.transpose() * hop * v;
    // U sum_x n_{x,up} n_{x,down} in the eigenbasis: <ps|g|qu> = U sum_x V_xp V_xq V_xs V_xu.
    for (int p = 0; p < n; ++p)
        for (int s = 0; s < n; ++s)
            for (int q = 0; q < n; ++q)
                for (int u = 0; u < n; ++u) {
                    double acc = 0.0;
                    for (int x = 0; x < n; ++x) acc += v(x, p) * v(x, q) * v(x, s) * v(x, u);
                    ints.g_at(p, s, q, u) = spec.u * acc;
                }
    ints.e_offset = 0.0;
    return ints;
}

MolecularIntegrals apply_frozen_core(const MolecularIntegrals& ints, const std::vector<int>& core) {
    for (int c : core) {
        if (c < 0 || c >= ints.n_orbitals) throw std::invalid_argument("frozen core: index out of range");
        if (c >= ints.n_alpha || c >= ints.n_beta)
            throw std::invalid_argument("frozen core: orbital " + std::to_string(c) +
                                        " is not doubly occupied in the reference");
    }
    std::vector<bool> is_core(ints.n_orbitals, false);
    for (int c : core) is_core[c] = true;
    std::vector<int> active;
    for (int r = 0; r < ints.n_orbitals; ++r)
        if (!is_core[r]) active.push_back(r);

    const int m = static_cast<int>(active.size());
    MolecularIntegrals out(m, ints.n_alpha - static_cast<int>(core.size()),
                           ints.n_beta - static_cast<int>(core.size()));

    double e_core = ints.e_offset;
    for (int i : core) {
        e_core += 2.0 * ints.h(i, i);
        for (int j : core) e_core += 2.0 * ints.g_at(i, j, i, j) - ints.g_at(i, j, j, i);
    }
    out.e_offset = e_core;

    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
            double v = ints.h(active[r], active[s]);
            for (int i : core)
                v += 2.0 * ints.g_at(active[r], i, active[s], i) - ints.g_at(active[r], i, i, active[s]);
            out.h(r, s) = v;
        }
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t)
                for (int u = 0; u < m; ++u)
                    out.g_at(r, s, t, u) = ints.g_at(active[r], active[s], active[t], active[u]);
    return out;
}

MolecularIntegrals rotate_integrals_matrix(const MolecularIntegrals& ints, const Eigen::MatrixXd& c) {
    const int n = ints.n_orbitals;
    if (c.rows() != n || c.cols() != n) throw std::invalid_argument("rotation dimension mismatch");

    MolecularIntegrals out(n, ints.n_alpha, ints.n_beta);
    out.e_offset = ints.e_offset;
    out.h = c.transpose() * ints.h * c;

    // Four successive one-index contractions, O(n^5).
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<double> t1(nn * nn * nn * nn, 0.0), t2(nn * nn * nn * nn, 0.0);
    auto at = [n](std::vector<double>& v, int a, int b, int cc, int d) -> double& {
        return v[((static_cast<std::size_t>(a) * n + b) * n + cc) * n + d];
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                for (int p = 0; p < n; ++p) {
                    double acc = 0.0;
                    for (int d = 0; d < n; ++d) acc += ints.g_at(a, b, cc, d) * c(d, p);
                    at(t1, a, b, cc, p) = acc;
                }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    double acc = 0.0;
                    for (int cc = 0; cc < n; ++cc) acc += at(t1, a, b, cc, q) * c(cc, p);
                    at(t2, a, b, p, q) = acc;
                }
    std::fill(t1.begin(), t1.end(), 0.0);
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r) {
                    double acc = 0.0;
                    for (int b = 0; b < n; ++b) acc += at(t2, a, b, q, r) * c(b, p);
                    at(t1, a, p, q, r) = acc;
                }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    double acc = 0.0;
                    for (int a = 0; a < n; ++a) acc += at(t1, a, q, r, s) * c(a, p);
                    out.g_at(p, q, r, s) = acc;
                }
    return out;
}

MolecularIntegrals rotate_integrals(const MolecularIntegrals& ints, const KappaMatrix& kappa) {
    if (kappa.dim() != ints.n_orbitals) throw std::invalid_argument("kappa dimension mismatch");
    Eigen::MatrixXd c = (-kappa.values).exp();
    return rotate_integrals_matrix(ints, c);
}

FermionOperator build_hamiltonian(const MolecularIntegrals& ints) {
    const int n = ints.n_orbitals;
    const int m = 2 * n;
    FermionOperator op(m);
    if (std::abs(ints.e_offset) > kCoefEps) op.add_term({}, ints.e_offset);

    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            double v = ints.h(r, s);
            if (std::abs(v) <= kCoefEps) continue;
            for (Spin sp : {Spin::up, Spin::down}) {
                int p = spin_orbital(r, sp, n), q = spin_orbital(s, sp, n);
                op.add_term({{p, true}, {q, false}}, v);
            }
        }

    // (1/2) sum_{rstu} <rs|g|tu> sum_{sigma,tau} a†_{r,sig} a†_{s,tau} a_{u,tau} a_{t,sig}
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                for (int u = 0; u < n; ++u) {
                    double v = 0.5 * ints.g_at(r, s, t, u);
                    if (std::abs(v) <= kCoefEps) continue;
                    for (Spin sig : {Spin::up, Spin::down})
                        for (Spin tau : {Spin::up, Spin::down}) {
                            int pr = spin_orbital(r, sig, n), ps = spin_orbital(s, tau, n);
                            int pu = spin_orbital(u, tau, n), pt = spin_orbital(t, sig, n);
                            op.add_term({{pr, true}, {ps, true}, {pu, false}, {pt, false}}, v);
                        }
                }
    return op;
}

}  // namespace qucc
