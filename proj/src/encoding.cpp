#include "qucc/encoding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qucc {

namespace {

std::uint64_t low_bits(int k) { return k >= 64 ? ~0ULL : (1ULL << k) - 1; }

/// Image of a single ladder operator as a two-string PauliOperator.
PauliOperator ladder_image(int p, bool dagger, int n_modes, Mapping mapping) {
    PauliOperator out(n_modes);
    const cplx half{0.5, 0.0};
    const cplx imag_half = dagger ? cplx{0.0, -0.5} : cplx{0.0, 0.5};
    if (mapping == Mapping::jordan_wigner) {
        // a†_p = (X_p - iY_p)/2 ⊗ Z_{p-1..0}
        std::uint64_t tail = low_bits(p);
        out.add_term(PauliString{1ULL << p, tail}, half);
        out.add_term(PauliString{1ULL << p, tail | (1ULL << p)}, imag_half);
    } else {
        // a†_p = X_{M-1..p+1} ⊗ (X_p Z_{p-1} - iY_p)/2
        std::uint64_t update = (low_bits(n_modes) & ~low_bits(p + 1)) | (1ULL << p);
        std::uint64_t zprev = p > 0 ? (1ULL << (p - 1)) : 0ULL;
        out.add_term(PauliString{update, zprev}, half);
        out.add_term(PauliString{update, 1ULL << p}, imag_half);
    }
    return out;
}

PauliOperator map_operator(const FermionOperator& op, Mapping mapping) {
    const int m = op.n_modes();
    PauliOperator out(m);
    for (const auto& [ops, coef] : op.terms()) {
        PauliOperator acc = PauliOperator::identity(m, coef);
        for (const auto& lad : ops) acc = acc * ladder_image(lad.index, lad.dagger, m, mapping);
        out += acc;
    }
    out.prune();
    return out;
}

/// Deletes the given (sorted ascending) qubit positions from a mask,
/// compressing the remaining bits downward.
std::uint64_t drop_bits(std::uint64_t mask, const std::vector<int>& positions) {
    std::uint64_t out = 0;
    int shift = 0;
    int next = 0;
    const int total = 64;
    for (int q = 0; q < total && mask >> q; ++q) {
        if (next < static_cast<int>(positions.size()) && positions[next] == q) {
            ++next;
            ++shift;
            continue;
        }
        if ((mask >> q) & 1) out |= 1ULL << (q - shift);
    }
    return out;
}

}  // namespace

std::uint64_t EncodingPlan::reference_occupations() const {
    const int n = n_spin_orbitals / 2;
    std::uint64_t occ = 0;
    for (int i = 0; i < n_alpha; ++i) occ |= 1ULL << i;
    for (int i = 0; i < n_beta; ++i) occ |= 1ULL << (n + i);
    return occ;
}

EncodingPlan make_plan(Mapping mapping, bool two_qubit_reduction, int n_spin_orbitals,
                       int n_alpha, int n_beta) {
    if (n_spin_orbitals <= 0 || n_spin_orbitals > 62 || n_spin_orbitals % 2 != 0)
        throw std::invalid_argument("encoding: spin-orbital count must be even and <= 62");
    if (two_qubit_reduction && mapping != Mapping::parity)
        throw std::invalid_argument("encoding: two-qubit reduction requires the parity mapping");
    EncodingPlan plan;
    plan.mapping = mapping;
    plan.two_qubit_reduction = two_qubit_reduction;
    plan.n_spin_orbitals = n_spin_orbitals;
    plan.n_alpha = n_alpha;
    plan.n_beta = n_beta;
    return plan;
}

PauliOperator jordan_wigner(const FermionOperator& op) {
    return map_operator(op, Mapping::jordan_wigner);
}

PauliOperator parity_map(const FermionOperator& op) {
    return map_operator(op, Mapping::parity);
}

PauliOperator parity_map_reduced(const FermionOperator& op, int n_alpha, int n_beta) {
    const int m = op.n_modes();
    if (m % 2 != 0) throw std::invalid_argument("parity reduction: odd spin-orbital count");
    PauliOperator full = parity_map(op);
    const int q_up = m / 2 - 1;   // stores the spin-up population parity
    const int q_tot = m - 1;      // stores the total population parity
    const double sign_up = (n_alpha % 2 == 0) ? 1.0 : -1.0;
    const double sign_tot = ((n_alpha + n_beta) % 2 == 0) ? 1.0 : -1.0;
    const std::vector<int> drop{q_up, q_tot};

    PauliOperator out(m - 2);
    for (const auto& [s, c] : full.terms()) {
        for (int q : drop)
            if ((s.x >> q) & 1)
                throw std::domain_error("parity reduction: term " + s.to_string(m) +
                                        " acts with X/Y on reduction qubit " + std::to_string(q));
        cplx coef = c;
        if ((s.z >> q_up) & 1) coef *= sign_up;
        if ((s.z >> q_tot) & 1) coef *= sign_tot;
        out.add_term(PauliString{drop_bits(s.x, drop), drop_bits(s.z, drop)}, coef);
    }
    out.prune();
    return out;
}

std::vector<SymmetryGenerator> find_z2_symmetries(const PauliOperator& op) {
    const int n = op.n_qubits();
    // A Z/I string with mask g commutes with a term of x-part x iff
    // popcount(x & g) is even, so the symmetry space is the GF(2) kernel of
    // the x-part rows.
    std::vector<std::uint64_t> rows;
    rows.reserve(op.size());
    for (const auto& [s, c] : op.terms())
        if (s.x) rows.push_back(s.x);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    // Reduced row echelon form with pivots at the lowest set bit, columns
    // 0..n-1; full reduction keeps the null-space construction valid.
    std::vector<int> pivot_cols;
    std::vector<std::uint64_t> echelon;
    for (std::uint64_t r : rows) {
        for (std::size_t i = 0; i < echelon.size(); ++i)
            if ((r >> pivot_cols[i]) & 1) r ^= echelon[i];
        if (!r) continue;
        const int c = __builtin_ctzll(r);
        for (std::size_t i = 0; i < echelon.size(); ++i)
            if ((echelon[i] >> c) & 1) echelon[i] ^= r;
        echelon.push_back(r);
        pivot_cols.push_back(c);
    }
    std::vector<int> pivot_of_col(n, -1);
    for (std::size_t i = 0; i < echelon.size(); ++i) pivot_of_col[pivot_cols[i]] = static_cast<int>(i);
    // Null-space basis: one vector per free column.
    std::vector<SymmetryGenerator> gens;
    for (int f = 0; f < n; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::uint64_t g = 1ULL << f;
        // Back-substitute: for every pivot column c whose row has bit f set,
        // flip bit c so row . g = 0.
        for (int c = 0; c < n; ++c)
            if (pivot_of_col[c] >= 0 && ((echelon[pivot_of_col[c]] >> f) & 1)) g |= 1ULL << c;
        SymmetryGenerator gen;
        gen.pauli = PauliString{0, g};
        gens.push_back(gen);
    }
    // Lowest qubit owned by this generator alone.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::uint64_t others = 0;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others |= gens[j].pauli.z;
        std::uint64_t eligible = gens[i].pauli.z & ~others;
        if (!eligible) throw std::logic_error("z2 symmetries: no private target qubit");
        gens[i].target_qubit = __builtin_ctzll(eligible);
    }
    return gens;
}

std::vector<int> sector_eigenvalues(const std::vector<SymmetryGenerator>& gens, std::uint64_t bits) {
    std::vector<int> sectors;
    sectors.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.pauli.x)
            throw std::domain_error("sector selection: reference is not an eigenstate of a non-diagonal generator");
        sectors.push_back(__builtin_parityll(bits & g.pauli.z) ? -1 : +1);
    }
    return sectors;
}

PauliOperator taper(const PauliOperator& op, const std::vector<SymmetryGenerator>& gens,
                    const std::vector<int>& sectors) {
    if (gens.size() != sectors.size()) throw std::invalid_argument("taper: sector count mismatch");
    if (gens.empty()) return op;
    const int n = op.n_qubits();

    PauliOperator conj = op;
    for (const auto& g : gens) {
        const PauliString a{1ULL << g.target_qubit, 0};  // X on the target
        const PauliString b = g.pauli;
        PauliOperator next(n);
        for (const auto& [s, c] : conj.terms()) {
            bool anti_a = !s.commutes_with(a);
            bool anti_b = !s.commutes_with(b);
            if (!anti_a && !anti_b) {
                next.add_term(s, c);
            } else if (anti_a && anti_b) {
                next.add_term(s, -c);
            } else {
                // (X_t + tau)/sqrt(2) conjugation sends P to ±P·X_t·tau.
                auto [sa, ph1] = pauli_product(s, a);
                auto [sab, ph2] = pauli_product(sa, b);
                next.add_term(sab, (anti_a ? -c : c) * ph1 * ph2);
            }
        }
        conj = std::move(next);
    }

    std::vector<int> targets;
    for (const auto& g : gens) targets.push_back(g.target_qubit);
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return targets[a] < targets[b];
    });
    std::vector<int> sorted_targets;
    std::vector<int> sorted_sectors;
    for (std::size_t i : order) {
        sorted_targets.push_back(targets[i]);
        sorted_sectors.push_back(sectors[i]);
    }

    PauliOperator out(n - static_cast<int>(gens.size()));
    for (const auto& [s, c] : conj.terms()) {
        cplx coef = c;
        for (std::size_t i = 0; i < sorted_targets.size(); ++i) {
            int q = sorted_targets[i];
            if ((s.z >> q) & 1)
                throw std::logic_error("taper: residual Y/Z on target qubit " + std::to_string(q));
            if ((s.x >> q) & 1) coef *= static_cast<double>(sorted_sectors[i]);
        }
        out.add_term(PauliString{drop_bits(s.x, sorted_targets), drop_bits(s.z, sorted_targets)}, coef);
    }
    out.prune();
    return out;
}

bool commutes_with_symmetries(const PauliOperator& op, const std::vector<SymmetryGenerator>& gens) {
    for (const auto& [s, c] : op.terms())
        for (const auto& g : gens)
            if (!s.commutes_with(g.pauli)) return false;
    return true;
}

EncodingPlan plan_with_tapering(const EncodingPlan& plan, const PauliOperator& encoded) {
    if (encoded.n_qubits() != plan.base_qubits())
        throw std::invalid_argument("tapering: operator does not match the plan's base register");
    EncodingPlan out = plan;
    out.taper_generators = find_z2_symmetries(encoded);
    std::uint64_t ref = encode_occupations_base(plan.reference_occupations(), plan);
    auto sectors = sector_eigenvalues(out.taper_generators, ref);
    for (std::size_t i = 0; i < sectors.size(); ++i)
        out.taper_generators[i].sector_eigenvalue = sectors[i];
    return out;
}

PauliOperator encode_base(const FermionOperator& op, const EncodingPlan& plan) {
    if (op.n_modes() != plan.n_spin_orbitals)
        throw std::invalid_argument("encoding: operator mode count does not match plan");
    if (plan.mapping == Mapping::jordan_wigner) return jordan_wigner(op);
    if (plan.two_qubit_reduction) return parity_map_reduced(op, plan.n_alpha, plan.n_beta);
    return parity_map(op);
}

PauliOperator encode_operator(const FermionOperator& op, const EncodingPlan& plan) {
    PauliOperator base = encode_base(op, plan);
    if (plan.taper_generators.empty()) return base;
    std::vector<int> sectors;
    for (const auto& g : plan.taper_generators) sectors.push_back(g.sector_eigenvalue);
    return taper(base, plan.taper_generators, sectors);
}

std::uint64_t encode_occupations_base(std::uint64_t occupations, const EncodingPlan& plan) {
    const int m = plan.n_spin_orbitals;
    std::uint64_t bits = occupations;
    if (plan.mapping == Mapping::parity) {
        // Cumulative prefix parity: bit j stores XOR of occupations 0..j.
        std::uint64_t prefix = 0;
        int running = 0;
        for (int j = 0; j < m; ++j) {
            running ^= static_cast<int>((occupations >> j) & 1);
            if (running) prefix |= 1ULL << j;
        }
        bits = prefix;
        if (plan.two_qubit_reduction) bits = drop_bits(bits, {m / 2 - 1, m - 1});
    }
    return bits;
}

std::uint64_t encode_determinant(std::uint64_t occupations, const EncodingPlan& plan) {
    std::uint64_t bits = encode_occupations_base(occupations, plan);
    if (plan.taper_generators.empty()) return bits;
    // Through the tapering Clifford a determinant stays a basis state on the
    // retained qubits; the target bits carry only the sector.
    std::vector<int> targets;
    for (const auto& g : plan.taper_generators) targets.push_back(g.target_qubit);
    std::sort(targets.begin(), targets.end());
    return drop_bits(bits, targets);
}

std::uint64_t decode_determinant(std::uint64_t index, const EncodingPlan& plan) {
    if (!plan.taper_generators.empty())
        throw std::domain_error("decode: tapered basis states are determinant superpositions");
    const int m = plan.n_spin_orbitals;
    std::uint64_t bits = index;
    if (plan.mapping == Mapping::jordan_wigner) return bits;
    if (plan.two_qubit_reduction) {
        // Reinsert the stored parity bits, then invert the prefix XOR.
        std::uint64_t full = 0;
        int pos = 0;
        for (int j = 0; j < m; ++j) {
            if (j == m / 2 - 1 || j == m - 1) continue;
            if ((bits >> pos) & 1) full |= 1ULL << j;
            ++pos;
        }
        // Parity of the up block: XOR of occupations 0..m/2-1 = n_alpha mod 2.
        if (plan.n_alpha % 2) full |= 1ULL << (m / 2 - 1);
        if ((plan.n_alpha + plan.n_beta) % 2) full |= 1ULL << (m - 1);
        bits = full;
    }
    std::uint64_t occ = 0;
    int prev = 0;
    for (int j = 0; j < m; ++j) {
        int pj = static_cast<int>((bits >> j) & 1);
        if (pj ^ prev) occ |= 1ULL << j;
        prev = pj;
    }
    return occ;
}

}  // namespace qucc
