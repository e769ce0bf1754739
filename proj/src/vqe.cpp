#include "qucc/vqe.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qucc/statevector.hpp"

namespace qucc {

namespace {

MinimizeOptions to_minimize_options(const OptimizerConfig& c) {
    MinimizeOptions o;
    o.energy_tol = c.energy_tol;
    o.gradient_step = c.gradient_step;
    o.max_iterations = c.max_iterations;
    return o;
}

VqeResult run_fixed_hamiltonian(const PauliOperator& hamiltonian, const CompiledAnsatz& ansatz,
                                const OptimizerConfig& config, bool exact_exponential) {
    if (hamiltonian.n_qubits() != ansatz.n_qubits)
        throw std::invalid_argument("vqe: hamiltonian/ansatz qubit mismatch");
    CompiledExpectation energy_of(hamiltonian);

    CountingObjective objective([&](const std::vector<double>& theta) {
        Statevector state(ansatz.n_qubits, ansatz.reference_index);
        if (exact_exponential)
            apply_ansatz_exact(state, ansatz, theta);
        else
            apply_ansatz_trotter(state, ansatz, theta);
        state.assert_normalized();
        return energy_of.value(state);
    });

    std::vector<double> theta0(ansatz.n_parameters, config.initial_theta);
    MinimizeResult m = minimize_bfgs(std::ref(objective), std::move(theta0),
                                     to_minimize_options(config));
    if (objective.count() != m.n_evaluations)
        throw std::logic_error("vqe: evaluation counter disagrees with optimizer");

    VqeResult r;
    r.energy = m.f;
    r.theta = m.x;
    r.n_energy_evaluations = m.n_evaluations;
    r.n_iterations = m.n_iterations;
    r.converged = m.converged;
    for (auto& [e, x] : m.trace) r.trace.push_back({e, x, {}});
    return r;
}

}  // namespace

VqeResult vqe_minimize(const PauliOperator& hamiltonian, const CompiledAnsatz& ansatz,
                       const OptimizerConfig& config) {
    return run_fixed_hamiltonian(hamiltonian, ansatz, config, false);
}

VqeResult vqe_minimize_exact(const PauliOperator& hamiltonian, const CompiledAnsatz& ansatz,
                             const OptimizerConfig& config) {
    return run_fixed_hamiltonian(hamiltonian, ansatz, config, true);
}

VqeResult oo_vqe_minimize(const OoVqeProblem& problem, const OptimizerConfig& config) {
    const MolecularIntegrals& ints = problem.ints;
    if (ints.n_alpha != ints.n_beta)
        throw std::invalid_argument("oo-vqe: closed-shell reference required");
    const int n = ints.n_orbitals;
    const int n_kappa = KappaMatrix::n_free_parameters(n);

    ActiveSpace space{n, ints.n_alpha};
    AnsatzSpec spec;
    switch (problem.kind) {
        case AnsatzKind::uccsd: spec = uccsd_excitations(space); break;
        case AnsatzKind::puccd: spec = puccd_excitations(space, problem.include_singles); break;
        case AnsatzKind::uccd0: spec = uccd0_excitations(space, false, problem.include_singles); break;
        case AnsatzKind::uccd0_full:
            spec = uccd0_excitations(space, true, problem.include_singles);
            break;
    }
    EncodingPlan plan = make_plan(problem.mapping, problem.two_qubit_reduction,
                                  2 * n, ints.n_alpha, ints.n_beta);
    CompiledAnsatz ansatz = compile_ansatz(spec, plan);
    const int n_theta = ansatz.n_parameters;

    CountingObjective objective([&](const std::vector<double>& x) {
        std::vector<double> kappa_params(x.begin() + n_theta, x.end());
        KappaMatrix kappa = KappaMatrix::from_parameters(kappa_params, n);
        MolecularIntegrals rotated = rotate_integrals(ints, kappa);
        PauliOperator h = encode_base(build_hamiltonian(rotated), plan);
        CompiledExpectation energy_of(h, 0);  // one-shot: skip diagonal caches
        Statevector state(ansatz.n_qubits, ansatz.reference_index);
        std::vector<double> theta(x.begin(), x.begin() + n_theta);
        apply_ansatz_trotter(state, ansatz, theta);
        state.assert_normalized();
        return energy_of.value(state);
    });

    std::vector<double> x0(n_theta + n_kappa, config.initial_theta);
    for (int i = 0; i < n_kappa; ++i) x0[n_theta + i] = config.initial_kappa;
    MinimizeResult m = minimize_bfgs(std::ref(objective), std::move(x0),
                                     to_minimize_options(config));

    VqeResult r;
    r.energy = m.f;
    r.theta.assign(m.x.begin(), m.x.begin() + n_theta);
    r.kappa.assign(m.x.begin() + n_theta, m.x.end());
    r.n_energy_evaluations = m.n_evaluations;
    r.n_iterations = m.n_iterations;
    r.converged = m.converged;
    for (auto& [e, x] : m.trace)
        r.trace.push_back({e, std::vector<double>(x.begin(), x.begin() + n_theta),
                           std::vector<double>(x.begin() + n_theta, x.end())});
    return r;
}

std::string trace_csv(const VqeResult& result) {
    std::string out = "iteration,energy";
    const std::size_t nt = result.theta.size(), nk = result.kappa.size();
    for (std::size_t i = 0; i < nt; ++i) out += ",theta" + std::to_string(i);
    for (std::size_t i = 0; i < nk; ++i) out += ",kappa" + std::to_string(i);
    out += '\n';
    char buf[40];
    for (std::size_t it = 0; it < result.trace.size(); ++it) {
        out += std::to_string(it);
        std::snprintf(buf, sizeof(buf), ",%.12e", result.trace[it].energy);
        out += buf;
        for (double v : result.trace[it].theta) {
            std::snprintf(buf, sizeof(buf), ",%.12e", v);
            out += buf;
        }
        for (double v : result.trace[it].kappa) {
            std::snprintf(buf, sizeof(buf), ",%.12e", v);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace qucc
