#include "qucc/ansatz.hpp"

#include <cstdio>
#include <stdexcept>

namespace qucc {

std::string ansatz_name(AnsatzKind kind) {
    switch (kind) {
        case AnsatzKind::uccsd: return "uccsd";
        case AnsatzKind::puccd: return "puccd";
        case AnsatzKind::uccd0: return "uccd0";
        case AnsatzKind::uccd0_full: return "uccd0_full";
    }
    return "?";
}

namespace {

void check_space(const ActiveSpace& space) {
    if (space.n_occ <= 0 || space.n_occ >= space.n_orbitals)
        throw std::invalid_argument("active space must have 0 < n_occ < n_orbitals");
}

/// a†_{a↑} a†_{b↓} a_{c↑} a_{d↓} over block-ordered spin orbitals.
LadderString mixed_double(int a, int b, int c, int d, int n) {
    return {{a, true}, {b + n, true}, {c, false}, {d + n, false}};
}

/// a†_{mσ} a†_{nσ} a_{jσ} a_{iσ}.
LadderString same_spin_double(Spin s, int m, int n_, int i, int j, int n) {
    int o = s == Spin::down ? n : 0;
    return {{m + o, true}, {n_ + o, true}, {j + o, false}, {i + o, false}};
}

LadderString single(Spin s, int m, int i, int n) {
    int o = s == Spin::down ? n : 0;
    return {{m + o, true}, {i + o, false}};
}

/// Singles with independent amplitudes per spin. Sharing them across spins
/// looks natural for a closed-shell reference but bars the spin-relaxed
/// solutions that carry stretched geometries; the per-spin freedom is what
/// the reference calculations used.
void append_singles(AnsatzSpec& spec, const ActiveSpace& space) {
    const int n = space.n_orbitals;
    for (int i = 0; i < space.n_occ; ++i)
        for (int m = space.n_occ; m < n; ++m)
            for (Spin sp : {Spin::up, Spin::down})
                spec.excitations.push_back({single(sp, m, i, n), spec.n_parameters++, 1.0});
}

}  // namespace

AnsatzSpec uccsd_excitations(const ActiveSpace& space) {
    check_space(space);
    const int n = space.n_orbitals, no = space.n_occ, nv = space.n_virt();
    AnsatzSpec spec;
    spec.kind = AnsatzKind::uccsd;
    spec.n_spin_orbitals = 2 * n;
    spec.include_singles = true;
    append_singles(spec, space);

    // Mixed-spin doubles: one parameter per unordered pair of (m,i) combos,
    // theta_{mnij} = theta_{nmji}.
    auto combo = [&](int k) { return std::pair<int, int>{no + k / no, k % no}; };  // (m, i)
    const int n_combo = no * nv;
    for (int k1 = 0; k1 < n_combo; ++k1)
        for (int k2 = k1; k2 < n_combo; ++k2) {
            auto [m1, i1] = combo(k1);
            auto [m2, i2] = combo(k2);
            int g = spec.n_parameters++;
            spec.excitations.push_back({mixed_double(m1, m2, i1, i2, n), g, 1.0});
            if (k1 != k2) spec.excitations.push_back({mixed_double(m2, m1, i2, i1, n), g, 1.0});
        }

    // Same-spin doubles, up/down sharing one parameter.
    for (int i = 0; i < no; ++i)
        for (int j = i + 1; j < no; ++j)
            for (int m = no; m < n; ++m)
                for (int p = m + 1; p < n; ++p) {
                    int g = spec.n_parameters++;
                    spec.excitations.push_back({same_spin_double(Spin::up, m, p, i, j, n), g, 1.0});
                    spec.excitations.push_back({same_spin_double(Spin::down, m, p, i, j, n), g, 1.0});
                }
    return spec;
}

AnsatzSpec puccd_excitations(const ActiveSpace& space, bool include_singles) {
    check_space(space);
    const int n = space.n_orbitals;
    AnsatzSpec spec;
    spec.kind = AnsatzKind::puccd;
    spec.n_spin_orbitals = 2 * n;
    spec.include_singles = include_singles;
    if (include_singles) append_singles(spec, space);
    for (int i = 0; i < space.n_occ; ++i)
        for (int m = space.n_occ; m < n; ++m) {
            int g = spec.n_parameters++;
            spec.excitations.push_back({mixed_double(m, m, i, i, n), g, 1.0});
        }
    return spec;
}

AnsatzSpec uccd0_excitations(const ActiveSpace& space, bool full, bool include_singles) {
    check_space(space);
    const int n = space.n_orbitals, no = space.n_occ;
    AnsatzSpec spec;
    spec.kind = full ? AnsatzKind::uccd0_full : AnsatzKind::uccd0;
    spec.n_spin_orbitals = 2 * n;
    spec.include_singles = include_singles;
    if (include_singles) append_singles(spec, space);

    // One parameter per unordered virtual pair {m,p} and occupied pair {i,j}.
    for (int m = no; m < n; ++m)
        for (int p = m; p < n; ++p)
            for (int i = 0; i < no; ++i)
                for (int j = i; j < no; ++j) {
                    int g = spec.n_parameters++;
                    spec.excitations.push_back({mixed_double(m, p, j, i, n), g, 1.0});
                    if (!full) continue;
                    if (m != p) spec.excitations.push_back({mixed_double(p, m, j, i, n), g, 1.0});
                    if (i != j) spec.excitations.push_back({mixed_double(m, p, i, j, n), g, 1.0});
                    if (m != p && i != j)
                        spec.excitations.push_back({mixed_double(p, m, i, j, n), g, 1.0});
                }
    return spec;
}

AnsatzSpec uccd1_excitations(const ActiveSpace& space) {
    check_space(space);
    const int n = space.n_orbitals, no = space.n_occ;
    AnsatzSpec spec;
    spec.kind = AnsatzKind::uccd0;  // carrier only; never shipped
    spec.n_spin_orbitals = 2 * n;
    for (int m = no; m < n; ++m)
        for (int p = m + 1; p < n; ++p)
            for (int i = 0; i < no; ++i)
                for (int j = i + 1; j < no; ++j) {
                    int g = spec.n_parameters++;
                    spec.excitations.push_back({same_spin_double(Spin::up, m, p, i, j, n), g, 1.0});
                    spec.excitations.push_back({same_spin_double(Spin::down, m, p, i, j, n), g, 1.0});
                    spec.excitations.push_back({mixed_double(p, m, j, i, n), g, -0.5});
                    spec.excitations.push_back({mixed_double(p, m, i, j, n), g, 0.5});
                    spec.excitations.push_back({mixed_double(m, p, j, i, n), g, 0.5});
                    spec.excitations.push_back({mixed_double(m, p, i, j, n), g, -0.5});
                }
    return spec;
}

FermionOperator cluster_operator(const AnsatzSpec& spec, const std::vector<double>& theta) {
    if (static_cast<int>(theta.size()) != spec.n_parameters)
        throw std::invalid_argument("cluster operator: parameter count mismatch");
    FermionOperator op(spec.n_spin_orbitals);
    for (const auto& exc : spec.excitations) {
        const double c = exc.weight * theta[exc.group];
        if (std::abs(c) <= kCoefEps) continue;
        op.add_term(exc.ops, c);
        LadderString rev(exc.ops.rbegin(), exc.ops.rend());
        for (auto& o : rev) o.dagger = !o.dagger;
        op.add_term(rev, -c);
    }
    return op;
}

std::string AnsatzSpec::dump() const {
    std::string out;
    char buf[48];
    for (const auto& e : excitations) {
        std::snprintf(buf, sizeof(buf), "g=%d w=%g [", e.group, e.weight);
        out += buf;
        bool first = true;
        for (const auto& op : e.ops) {
            if (!first) out += ' ';
            first = false;
            out += std::to_string(op.index);
            out += op.dagger ? '+' : '-';
        }
        out += "]\n";
    }
    return out;
}

}  // namespace qucc
