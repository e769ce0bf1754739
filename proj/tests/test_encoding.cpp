#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qucc/encoding.hpp"
#include "qucc/exact.hpp"
#include "qucc/hamiltonian.hpp"

using namespace qucc;

namespace {

/// Random particle-conserving hermitian operator, block spin ordering.
FermionOperator random_conserving_op(int n_orbitals, std::uint64_t seed) {
    auto gen = oracles::rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = n_orbitals;
    FermionOperator op(2 * n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s <= r; ++s) {
            double v = u(gen);
            for (Spin sp : {Spin::up, Spin::down}) {
                op.add_term({{spin_orbital(r, sp, n), true}, {spin_orbital(s, sp, n), false}}, v);
                if (r != s)
                    op.add_term({{spin_orbital(s, sp, n), true}, {spin_orbital(r, sp, n), false}}, v);
            }
        }
    // a mixed-spin pair hop keeps things two-body
    if (n >= 2) {
        double v = u(gen);
        op.add_term({{1, true}, {n + 1, true}, {n + 0, false}, {0, false}}, v);
        op.add_term({{0, true}, {n + 0, true}, {n + 1, false}, {1, false}}, v);
    }
    return op;
}

std::vector<double> sorted_eigs(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

}  // namespace

TEST_CASE("jordan-wigner: occupation image") {
    FermionOperator n0 = FermionOperator::term(2, {{0, true}, {0, false}});
    PauliOperator p = jordan_wigner(n0);
    CHECK(p.coefficient(PauliString{0, 0}) == cplx{0.5, 0.0});
    CHECK(p.coefficient(PauliString{0, 1}) == cplx{-0.5, 0.0});
    CHECK(p.size() == 2);
}

TEST_CASE("jordan-wigner: hopping image matches the dense oracle") {
    FermionOperator hop(2);
    hop.add_term({{1, true}, {0, false}}, 1.0);
    hop.add_term({{0, true}, {1, false}}, 1.0);
    PauliOperator p = jordan_wigner(hop);
    // (X0X1 + Y0Y1)/2
    CHECK(p.coefficient(PauliString{3, 0}) == cplx{0.5, 0.0});
    CHECK(p.coefficient(PauliString{3, 3}) == cplx{0.5, 0.0});
    oracles::Mat want = oracles::fermion_operator_dense(hop);
    oracles::Mat got = oracles::pauli_operator_dense(p);
    CHECK((want - got).norm() < 1e-13);
}

TEST_CASE("jordan-wigner preserves the operator for random ladder strings") {
    auto gen = oracles::rng(55);
    std::uniform_int_distribution<int> mode(0, 3), flag(0, 1), len(1, 4);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        FermionOperator op(4);
        LadderString ops;
        int l = len(gen);
        for (int k = 0; k < l; ++k) ops.push_back({mode(gen), flag(gen) == 1});
        op.add_term(ops, {coef(gen), coef(gen)});
        if (op.empty()) continue;
        oracles::Mat want = oracles::fermion_operator_dense(op);
        oracles::Mat got = oracles::pauli_operator_dense(jordan_wigner(op));
        CHECK((want - got).norm() < 1e-12);
    }
}

TEST_CASE("jordan-wigner: hermitian input gives real coefficients") {
    FermionOperator h = random_conserving_op(2, 4);
    CHECK(jordan_wigner(h).is_hermitian());
}

TEST_CASE("parity map is isospectral with jordan-wigner") {
    FermionOperator h = random_conserving_op(2, 9);
    auto s_jw = sorted_eigs(oracles::pauli_operator_dense(jordan_wigner(h)));
    auto s_par = sorted_eigs(oracles::pauli_operator_dense(parity_map(h)));
    REQUIRE(s_jw.size() == s_par.size());
    for (std::size_t i = 0; i < s_jw.size(); ++i)
        CHECK(s_jw[i] == doctest::Approx(s_par[i]).epsilon(1e-10));
}

TEST_CASE("parity map: canonical anticommutation survives the transform") {
    const int m = 4;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            FermionOperator ap(m), aq(m);
            ap.add_term({{p, false}}, 1.0);
            aq.add_term({{q, true}}, 1.0);
            oracles::Mat mp = oracles::pauli_operator_dense(parity_map(ap));
            oracles::Mat mq = oracles::pauli_operator_dense(parity_map(aq));
            oracles::Mat anti = mp * mq + mq * mp;
            oracles::Mat want = (p == q) ? oracles::Mat(oracles::Mat::Identity(16, 16))
                                         : oracles::Mat(oracles::Mat::Zero(16, 16));
            CHECK((anti - want).norm() < 1e-12);
        }
}

TEST_CASE("two-qubit reduction keeps the particle-sector spectrum") {
    FermionOperator h = random_conserving_op(2, 21);
    EncodingPlan jw = make_plan(Mapping::jordan_wigner, false, 4, 1, 1);
    EncodingPlan reduced = make_plan(Mapping::parity, true, 4, 1, 1);
    PauliOperator h_jw = encode_operator(h, jw);
    PauliOperator h_red = encode_operator(h, reduced);
    CHECK(h_red.n_qubits() == 2);
    auto s0 = exact_spectrum_sector(h_jw, sector_indices(jw, 1, 1));
    auto s1 = exact_spectrum_sector(h_red, sector_indices(reduced, 1, 1));
    REQUIRE(s0.size() == s1.size());
    for (std::size_t i = 0; i < s0.size(); ++i)
        CHECK(s0[i] == doctest::Approx(s1[i]).epsilon(1e-10));
}

TEST_CASE("two-qubit reduction: identity maps to identity on M-2 qubits") {
    FermionOperator id = FermionOperator::identity(4, 2.5);
    PauliOperator p = parity_map_reduced(id, 1, 1);
    CHECK(p.n_qubits() == 2);
    CHECK(p.coefficient(PauliString{}) == cplx{2.5, 0.0});
    CHECK(p.size() == 1);
}

TEST_CASE("two-qubit reduction rejects symmetry-violating terms") {
    FermionOperator bad(4);
    bad.add_term({{0, true}}, 1.0);  // creates a particle
    CHECK_THROWS_AS(parity_map_reduced(bad, 1, 1), std::domain_error);
}

TEST_CASE("z2 symmetries match a brute-force Z-string scan") {
    FermionOperator h = random_conserving_op(2, 33);
    PauliOperator p = jordan_wigner(h);
    auto gens = find_z2_symmetries(p);

    std::vector<std::uint64_t> brute;
    for (std::uint64_t z = 1; z < 16; ++z) {
        bool ok = true;
        for (const auto& [s, c] : p.terms())
            if (__builtin_parityll(s.x & z)) {
                ok = false;
                break;
            }
        if (ok) brute.push_back(z);
    }
    CHECK((1u << gens.size()) - 1 == brute.size());
    for (const auto& g : gens) {
        CHECK(g.pauli.x == 0);
        CHECK(std::find(brute.begin(), brute.end(), g.pauli.z) != brute.end());
    }
    CHECK(gens.size() >= 2);  // spin-up and total parity at least
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j)
                CHECK(((gens[i].pauli.z >> gens[i].target_qubit) & 1) == 1);
            else
                CHECK(((gens[j].pauli.z >> gens[i].target_qubit) & 1) == 0);
        }
}

TEST_CASE("z2 symmetries: single X0X1 term") {
    PauliOperator p(2);
    p.add_term(PauliString{3, 0}, 0.7);
    auto gens = find_z2_symmetries(p);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].pauli.z == 3);
    for (const auto& g : gens)
        for (const auto& [s, c] : p.terms()) CHECK(s.commutes_with(g.pauli));
}

TEST_CASE("z2 symmetries: dense random operator has none") {
    auto gen = oracles::rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PauliOperator p(2);
    for (std::uint64_t x = 0; x < 4; ++x)
        for (std::uint64_t z = 0; z < 4; ++z) p.add_term(PauliString{x, z}, u(gen));
    int n_sym = 0;
    for (std::uint64_t x = 0; x < 4; ++x)
        for (std::uint64_t z = 0; z < 4; ++z) {
            if (x == 0 && z == 0) continue;
            PauliString cand{x, z};
            bool ok = true;
            for (const auto& [s, c] : p.terms())
                if (!s.commutes_with(cand)) ok = false;
            if (ok) ++n_sym;
        }
    REQUIRE(n_sym == 0);
    CHECK(find_z2_symmetries(p).empty());
}

TEST_CASE("taper: no generators leaves the operator unchanged") {
    PauliOperator p(2);
    p.add_term(PauliString{1, 2}, 0.3);
    PauliOperator t = taper(p, {}, {});
    CHECK(t.terms() == p.terms());
}

TEST_CASE("taper: union over sectors reproduces the full spectrum") {
    FermionOperator h = random_conserving_op(3, 41);  // 6 spin orbitals
    PauliOperator p = jordan_wigner(h);
    auto gens = find_z2_symmetries(p);
    REQUIRE(!gens.empty());
    auto full = sorted_eigs(oracles::pauli_operator_dense(p));

    std::vector<double> collected;
    const int k = static_cast<int>(gens.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> sectors(k);
        for (int i = 0; i < k; ++i) sectors[i] = (mask >> i) & 1 ? -1 : +1;
        PauliOperator tp = taper(p, gens, sectors);
        auto eigs = sorted_eigs(oracles::pauli_operator_dense(tp));
        collected.insert(collected.end(), eigs.begin(), eigs.end());
    }
    std::sort(collected.begin(), collected.end());
    REQUIRE(collected.size() == full.size());
    for (std::size_t i = 0; i < full.size(); ++i)
        CHECK(collected[i] == doctest::Approx(full[i]).epsilon(1e-9));
}

TEST_CASE("taper: reference sector keeps the sector ground energy") {
    FermionOperator h = random_conserving_op(2, 52);
    EncodingPlan plan = make_plan(Mapping::jordan_wigner, false, 4, 1, 1);
    PauliOperator p = encode_operator(h, plan);
    EncodingPlan tapered = plan_with_tapering(plan, p);
    PauliOperator tp = encode_operator(h, tapered);
    CHECK(tp.n_qubits() == 4 - static_cast<int>(tapered.taper_generators.size()));

    auto s_full = exact_spectrum_sector(p, sector_indices(plan, 1, 1));
    auto s_tap = exact_spectrum_sector(tp, sector_indices(tapered, 1, 1));
    CHECK(s_tap.front() == doctest::Approx(s_full.front()).epsilon(1e-10));
}

TEST_CASE("sector eigenvalues follow the reference parity pattern") {
    EncodingPlan plan = make_plan(Mapping::jordan_wigner, false, 4, 1, 1);
    std::vector<SymmetryGenerator> gens(2);
    gens[0].pauli = PauliString{0, 0b0011};  // spin-up parity
    gens[1].pauli = PauliString{0, 0b1111};  // total parity
    auto sectors = sector_eigenvalues(gens, plan.reference_occupations());
    CHECK(sectors[0] == -1);  // one up electron
    CHECK(sectors[1] == +1);  // two electrons in total
    auto vac = sector_eigenvalues(gens, 0);
    CHECK(vac[0] == +1);
    CHECK(vac[1] == +1);
}

TEST_CASE("determinant encoding: jordan-wigner is the identity") {
    EncodingPlan plan = make_plan(Mapping::jordan_wigner, false, 4, 2, 0);
    CHECK(encode_determinant(0b0011, plan) == 0b0011);
    CHECK(encode_determinant(0, plan) == 0);
    CHECK(decode_determinant(0b0011, plan) == 0b0011);
}

TEST_CASE("determinant encoding: parity bits are prefix XOR") {
    EncodingPlan plan = make_plan(Mapping::parity, false, 4, 1, 1);
    auto prefix_xor = [](std::uint64_t occ, int m) {
        std::uint64_t out = 0;
        int acc = 0;
        for (int j = 0; j < m; ++j) {
            acc ^= static_cast<int>((occ >> j) & 1);
            out |= static_cast<std::uint64_t>(acc) << j;
        }
        return out;
    };
    for (std::uint64_t occ = 0; occ < 16; ++occ) {
        CHECK(encode_determinant(occ, plan) == prefix_xor(occ, 4));
        CHECK(decode_determinant(encode_determinant(occ, plan), plan) == occ);
    }
}

TEST_CASE("determinant encoding: reduction round-trips the sector determinants") {
    EncodingPlan plan = make_plan(Mapping::parity, true, 6, 2, 1);
    for (std::uint64_t occ = 0; occ < 64; ++occ) {
        const int na = __builtin_popcountll(occ & 0b000111);
        const int nb = __builtin_popcountll(occ >> 3);
        if (na != 2 || nb != 1) continue;  // reduction stores this sector's parities
        CHECK(decode_determinant(encode_determinant(occ, plan), plan) == occ);
    }
}

TEST_CASE("determinant encoding: tapered plans refuse to decode") {
    FermionOperator h = random_conserving_op(2, 99);
    EncodingPlan plan = make_plan(Mapping::jordan_wigner, false, 4, 1, 1);
    EncodingPlan tapered = plan_with_tapering(plan, encode_operator(h, plan));
    REQUIRE(!tapered.taper_generators.empty());
    CHECK_THROWS_AS(decode_determinant(0, tapered), std::domain_error);
}
