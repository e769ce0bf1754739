#include "qucc/compiled_ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qucc {

CompiledAnsatz compile_ansatz(const AnsatzSpec& spec, const EncodingPlan& plan) {
    if (spec.n_spin_orbitals != plan.n_spin_orbitals)
        throw std::invalid_argument("compile: ansatz/plan spin-orbital mismatch");

    CompiledAnsatz out;
    out.n_qubits = plan.n_qubits();
    out.reference_index = encode_determinant(plan.reference_occupations(), plan);

    std::vector<int> group_map(spec.n_parameters, -1);
    for (const auto& exc : spec.excitations) {
        FermionOperator gen(spec.n_spin_orbitals);
        gen.add_term(exc.ops, 1.0);
        LadderString rev(exc.ops.rbegin(), exc.ops.rend());
        for (auto& o : rev) o.dagger = !o.dagger;
        gen.add_term(rev, -1.0);
        if (gen.empty()) continue;  // template annihilates identically

        PauliOperator image = encode_base(gen, plan);
        if (!plan.taper_generators.empty()) {
            if (!commutes_with_symmetries(image, plan.taper_generators)) continue;
            std::vector<int> sectors;
            for (const auto& g : plan.taper_generators) sectors.push_back(g.sector_eigenvalue);
            image = taper(image, plan.taper_generators, sectors);
        }
        if (image.empty()) continue;

        CompiledExcitation ce;
        ce.weight = exc.weight;
        for (const auto& [s, c] : image.terms()) {
            // Antihermitian generator: every coefficient is i * real.
            if (std::abs(c.real()) > 1e-10)
                throw std::logic_error("compile: generator image has a real coefficient");
            ce.strings.emplace_back(s, c.imag());
        }
        for (std::size_t a = 0; a < ce.strings.size(); ++a)
            for (std::size_t b = a + 1; b < ce.strings.size(); ++b)
                if (!ce.strings[a].first.commutes_with(ce.strings[b].first))
                    throw std::logic_error("compile: excitation image strings do not commute");

        if (group_map[exc.group] < 0) group_map[exc.group] = out.n_parameters++;
        ce.group = group_map[exc.group];
        out.entries.push_back(std::move(ce));
    }
    return out;
}

void apply_ansatz_trotter(Statevector& state, const CompiledAnsatz& ansatz,
                          const std::vector<double>& theta) {
    if (static_cast<int>(theta.size()) != ansatz.n_parameters)
        throw std::invalid_argument("ansatz: parameter count mismatch");
    if (state.n_qubits() != ansatz.n_qubits)
        throw std::invalid_argument("ansatz: qubit count mismatch");
    for (const auto& e : ansatz.entries) {
        const double t = e.weight * theta[e.group];
        if (t == 0.0) continue;
        // exp(i * (t*c_k) * P_k) factors commute within one excitation.
        for (const auto& [s, c] : e.strings) state.apply_pauli_exponential(s, t * c);
    }
}

void apply_ansatz_exact(Statevector& state, const CompiledAnsatz& ansatz,
                        const std::vector<double>& theta) {
    if (static_cast<int>(theta.size()) != ansatz.n_parameters)
        throw std::invalid_argument("ansatz: parameter count mismatch");
    PauliOperator gen(ansatz.n_qubits);
    for (const auto& e : ansatz.entries) {
        const double t = e.weight * theta[e.group];
        if (t == 0.0) continue;
        for (const auto& [s, c] : e.strings) gen.add_term(s, cplx{0.0, t * c});
    }
    apply_operator_exponential(state, gen);
}

ResourceEstimate estimate_resources(const CompiledAnsatz& ansatz) {
    ResourceEstimate r;
    r.n_parameters = ansatz.n_parameters;
    for (const auto& e : ansatz.entries)
        for (const auto& [s, c] : e.strings) {
            const int k = s.weight();
            if (k == 0) continue;
            r.parameterized_rotations += 1;
            r.two_qubit_gates += 2 * (k - 1);
            r.basis_change_gates += 2 * __builtin_popcountll(s.x);
        }
    return r;
}

}  // namespace qucc
