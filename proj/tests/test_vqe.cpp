#include <doctest.h>

#include "oracles.hpp"
#include "qucc/exact.hpp"
#include "qucc/statevector.hpp"
#include "qucc/vqe.hpp"

using namespace qucc;

namespace {

struct Problem {
    MolecularIntegrals ints;
    EncodingPlan plan;
    PauliOperator h;
    double exact;
};

Problem hubbard_problem(int sites, double t, double u, int n_up, int n_dn, bool periodic) {
    HubbardSpec spec;
    spec.n_sites = sites;
    spec.t = t;
    spec.u = u;
    spec.periodic = periodic;
    spec.n_up = n_up;
    spec.n_down = n_dn;
    Problem p{build_hubbard(spec), {}, {}, 0.0};
    p.plan = make_plan(Mapping::parity, true, 2 * sites, n_up, n_dn);
    p.h = encode_operator(build_hamiltonian(p.ints), p.plan);
    p.exact = exact_ground(p.ints).energy;
    return p;
}

}  // namespace

TEST_CASE("uccsd reaches the exact dimer ground state (two electrons)") {
    Problem p = hubbard_problem(2, 1.0, 4.0, 1, 1, false);
    AnsatzSpec spec = uccsd_excitations(ActiveSpace{2, 1});
    CompiledAnsatz ansatz = compile_ansatz(spec, p.plan);
    OptimizerConfig config;
    VqeResult r = vqe_minimize(p.h, ansatz, config);
    CHECK(r.converged);
    CHECK(r.energy == doctest::Approx(p.exact).epsilon(1e-6));
    CHECK(r.energy >= p.exact - 1e-9);  // variational bound

    // returned energy equals a fresh objective evaluation
    Statevector s(ansatz.n_qubits, ansatz.reference_index);
    apply_ansatz_trotter(s, ansatz, r.theta);
    CHECK(expectation(s, p.h) == doctest::Approx(r.energy).epsilon(1e-10));

    // trace: every iterate obeys the variational bound
    for (const auto& t : r.trace) CHECK(t.energy >= p.exact - 1e-9);
    CHECK(r.trace.back().energy == doctest::Approx(r.energy));
}

TEST_CASE("U=0 chain: the reference is already optimal and amplitudes go to zero") {
    Problem p = hubbard_problem(4, 1.0, 0.0, 2, 2, false);
    AnsatzSpec spec = uccsd_excitations(ActiveSpace{4, 2});
    CompiledAnsatz ansatz = compile_ansatz(spec, p.plan);
    OptimizerConfig config;
    VqeResult r = vqe_minimize(p.h, ansatz, config);
    CHECK(r.energy == doctest::Approx(p.exact).epsilon(1e-7));
    for (double th : r.theta) CHECK(std::abs(th) < 2e-3);
}

TEST_CASE("determinism: identical runs give identical results") {
    Problem p = hubbard_problem(2, 1.0, 2.0, 1, 1, false);
    AnsatzSpec spec = uccsd_excitations(ActiveSpace{2, 1});
    CompiledAnsatz ansatz = compile_ansatz(spec, p.plan);
    OptimizerConfig config;
    VqeResult a = vqe_minimize(p.h, ansatz, config);
    VqeResult b = vqe_minimize(p.h, ansatz, config);
    CHECK(a.energy == b.energy);
    CHECK(a.theta == b.theta);
    CHECK(a.n_energy_evaluations == b.n_energy_evaluations);
}

TEST_CASE("evaluation counter matches the optimizer's accounting") {
    CountingObjective counter([](const std::vector<double>& x) {
        double s = 0.0;
        for (double v : x) s += (v - 0.3) * (v - 0.3);
        return s;
    });
    CHECK(counter({0.0}) == doctest::Approx(0.09));
    CHECK(counter.count() == 1);
    MinimizeOptions opts;
    MinimizeResult r = minimize_bfgs(std::ref(counter), {0.0, 0.0}, opts);
    CHECK(counter.count() == 1 + r.n_evaluations);
    CHECK(r.converged);
    CHECK(r.f == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("oo-vqe does not lose to plain vqe on the same ansatz") {
    Problem p = hubbard_problem(2, 1.0, 6.0, 1, 1, false);
    AnsatzSpec spec = puccd_excitations(ActiveSpace{2, 1});
    CompiledAnsatz ansatz = compile_ansatz(spec, p.plan);
    OptimizerConfig config;
    VqeResult base = vqe_minimize(p.h, ansatz, config);

    OoVqeProblem problem;
    problem.ints = p.ints;
    problem.kind = AnsatzKind::puccd;
    problem.mapping = Mapping::parity;
    problem.two_qubit_reduction = true;
    VqeResult oo = oo_vqe_minimize(problem, config);
    CHECK(oo.kappa.size() == 1);
    CHECK(oo.energy <= base.energy + 1e-7);
    CHECK(oo.energy >= p.exact - 1e-9);
}

TEST_CASE("reference energy is invariant under occ-occ and virt-virt rotations") {
    MolecularIntegrals ints = build_hubbard([] {
        HubbardSpec s;
        s.n_sites = 4;
        s.t = 1.0;
        s.u = 3.0;
        s.n_up = s.n_down = 2;
        return s;
    }());
    const double e_ref = determinant_energy(ints, 0b0011, 0b0011);
    auto gen = oracles::rng(4242);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (int trial = 0; trial < 5; ++trial) {
        KappaMatrix kappa(4);
        kappa.values(0, 1) = u(gen);  // occupied block
        kappa.values(1, 0) = -kappa.values(0, 1);
        kappa.values(2, 3) = u(gen);  // virtual block
        kappa.values(3, 2) = -kappa.values(2, 3);
        MolecularIntegrals rot = rotate_integrals(ints, kappa);
        CHECK(determinant_energy(rot, 0b0011, 0b0011) == doctest::Approx(e_ref).epsilon(1e-9));
    }
}

TEST_CASE("trace csv layout") {
    Problem p = hubbard_problem(2, 1.0, 2.0, 1, 1, false);
    AnsatzSpec spec = puccd_excitations(ActiveSpace{2, 1});
    CompiledAnsatz ansatz = compile_ansatz(spec, p.plan);
    OptimizerConfig config;
    VqeResult r = vqe_minimize(p.h, ansatz, config);
    std::string csv = trace_csv(r);
    CHECK(csv.rfind("iteration,energy,theta0\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.trace.size()) + 1);
}
