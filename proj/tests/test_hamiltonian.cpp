#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "qucc/encoding.hpp"
#include "qucc/exact.hpp"
#include "qucc/hamiltonian.hpp"

using namespace qucc;

namespace {

MolecularIntegrals random_integrals(int n, int na, int nb, std::uint64_t seed) {
    auto gen = oracles::rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    MolecularIntegrals ints(n, na, nb);
    for (int r = 0; r < n; ++r)
        for (int s = r; s < n; ++s) ints.h(r, s) = ints.h(s, r) = u(gen);
    // fill chemist-unique entries and expand the 8-fold symmetry
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= k; ++l) {
                    if (k == i && l > j) continue;
                    double v = 0.3 * u(gen);
                    const int idx[8][4] = {{i, j, k, l}, {j, i, k, l}, {i, j, l, k}, {j, i, l, k},
                                           {k, l, i, j}, {l, k, i, j}, {k, l, j, i}, {l, k, j, i}};
                    for (auto& t : idx) ints.g_at(t[0], t[2], t[1], t[3]) = v;
                }
    ints.e_offset = u(gen);
    return ints;
}

}  // namespace

TEST_CASE("fcidump: minimal single-orbital file") {
    std::istringstream in("&FCI NORB=1, NELEC=2, MS2=0,\n&END\n"
                          "-1.25 1 1 0 0\n"
                          "0.7 0 0 0 0\n");
    MolecularIntegrals ints = parse_fcidump(in);
    CHECK(ints.n_orbitals == 1);
    CHECK(ints.n_alpha == 1);
    CHECK(ints.n_beta == 1);
    CHECK(ints.h(0, 0) == doctest::Approx(-1.25));
    CHECK(ints.e_offset == doctest::Approx(0.7));
    for (double v : ints.g) CHECK(v == 0.0);
}

TEST_CASE("fcidump: chemist record expands to all 8 physicist entries") {
    std::istringstream in("&FCI NORB=2, NELEC=2, MS2=0,\n&END\n"
                          "0.5 1 2 1 1\n");
    MolecularIntegrals ints = parse_fcidump(in);
    // chemist (12|11) images land at 4 distinct physicist tuples here
    CHECK(ints.g_at(0, 0, 1, 0) == doctest::Approx(0.5));
    CHECK(ints.g_at(1, 0, 0, 0) == doctest::Approx(0.5));
    CHECK(ints.g_at(0, 1, 0, 0) == doctest::Approx(0.5));
    CHECK(ints.g_at(0, 0, 0, 1) == doctest::Approx(0.5));
    int nonzero = 0;
    for (double v : ints.g)
        if (v != 0.0) ++nonzero;
    CHECK(nonzero == 4);
}

TEST_CASE("fcidump: parse errors name the line") {
    std::istringstream bad_header("&FCI NELEC=2\n&END\n");
    CHECK_THROWS_AS(parse_fcidump(bad_header), ParseError);

    std::istringstream bad_index("&FCI NORB=1, NELEC=2, MS2=0,\n&END\n0.5 1 3 0 0\n");
    CHECK_THROWS_WITH_AS(parse_fcidump(bad_index), doctest::Contains("line 3"), ParseError);

    std::istringstream conflict("&FCI NORB=2, NELEC=2, MS2=0,\n&END\n"
                                "0.5 1 2 1 1\n0.25 2 1 1 1\n");
    CHECK_THROWS_WITH_AS(parse_fcidump(conflict), doctest::Contains("line 4"), ParseError);

    // duplicates carrying the same value are tolerated
    std::istringstream dup("&FCI NORB=2, NELEC=2, MS2=0,\n&END\n0.5 1 2 1 1\n0.5 2 1 1 1\n");
    CHECK_NOTHROW(parse_fcidump(dup));
}

TEST_CASE("fcidump: write/parse round trip reproduces values to 1e-12") {
    MolecularIntegrals ints = random_integrals(3, 2, 1, 42);
    std::ostringstream out;
    write_fcidump(out, ints);
    std::istringstream in(out.str());
    MolecularIntegrals back = parse_fcidump(in);
    REQUIRE(back.n_orbitals == 3);
    CHECK(back.n_alpha == 2);
    CHECK(back.n_beta == 1);
    CHECK((back.h - ints.h).norm() < 1e-12);
    for (std::size_t i = 0; i < ints.g.size(); ++i)
        CHECK(back.g[i] == doctest::Approx(ints.g[i]).epsilon(1e-12));
    CHECK(back.e_offset == doctest::Approx(ints.e_offset).epsilon(1e-12));
}

TEST_CASE("hubbard: dimer closed forms") {
    HubbardSpec spec;
    spec.n_sites = 2;
    spec.t = 1.0;
    spec.u = 0.0;
    spec.n_up = spec.n_down = 1;
    CHECK(exact_ground(build_hubbard(spec)).energy == doctest::Approx(-2.0).epsilon(1e-10));
    spec.u = 4.0;
    const double want = (4.0 - std::sqrt(16.0 + 16.0)) / 2.0;  // (U - sqrt(U^2+16t^2))/2
    CHECK(exact_ground(build_hubbard(spec)).energy == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("hubbard: U=0 reference determinant is exact") {
    HubbardSpec spec;
    spec.n_sites = 6;
    spec.t = -1.0;
    spec.u = 0.0;
    spec.periodic = true;
    spec.n_up = spec.n_down = 3;
    MolecularIntegrals ints = build_hubbard(spec);
    const double e_ref = determinant_energy(ints, 0b111, 0b111);
    CHECK(e_ref == doctest::Approx(exact_ground(ints).energy).epsilon(1e-12));
    CHECK(e_ref == doctest::Approx(-8.0).epsilon(1e-12));
}

TEST_CASE("frozen core: empty set is identity") {
    MolecularIntegrals ints = random_integrals(3, 2, 2, 7);
    MolecularIntegrals same = apply_frozen_core(ints, {});
    CHECK((same.h - ints.h).norm() == 0.0);
    CHECK(same.g == ints.g);
    CHECK(same.e_offset == ints.e_offset);
}

TEST_CASE("frozen core: rejects orbitals that are not doubly occupied") {
    MolecularIntegrals ints = random_integrals(3, 2, 1, 8);
    CHECK_THROWS_AS(apply_frozen_core(ints, {1}), std::invalid_argument);
}

TEST_CASE("frozen core: decoupled core leaves the correlated energy intact") {
    // block-diagonal integrals: orbital 0 couples to nothing
    auto gen = oracles::rng(123);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    MolecularIntegrals ints(3, 2, 2);
    ints.h(0, 0) = -4.0;
    for (int r = 1; r < 3; ++r)
        for (int s = 1; s <= r; ++s) ints.h(r, s) = ints.h(s, r) = u(gen);
    for (int i = 1; i < 3; ++i)
        for (int j = 1; j <= i; ++j)
            for (int k = 1; k <= i; ++k)
                for (int l = 1; l <= k; ++l) {
                    if (k == i && l > j) continue;
                    double v = 0.3 * u(gen);
                    const int idx[8][4] = {{i, j, k, l}, {j, i, k, l}, {i, j, l, k}, {j, i, l, k},
                                           {k, l, i, j}, {l, k, i, j}, {k, l, j, i}, {l, k, j, i}};
                    for (auto& t : idx) ints.g_at(t[0], t[2], t[1], t[3]) = v;
                }
    MolecularIntegrals frozen = apply_frozen_core(ints, {0});
    CHECK(frozen.n_orbitals == 2);
    CHECK(frozen.n_alpha == 1);
    CHECK(exact_ground(frozen).energy == doctest::Approx(exact_ground(ints).energy).epsilon(1e-10));
}

TEST_CASE("rotation: kappa = 0 is the identity") {
    MolecularIntegrals ints = random_integrals(3, 2, 1, 99);
    MolecularIntegrals rot = rotate_integrals(ints, KappaMatrix(3));
    CHECK((rot.h - ints.h).norm() < 1e-14);
    for (std::size_t i = 0; i < ints.g.size(); ++i)
        CHECK(rot.g[i] == doctest::Approx(ints.g[i]).epsilon(1e-13));
}

TEST_CASE("rotation: spectrum of the assembled hamiltonian is invariant") {
    MolecularIntegrals ints = random_integrals(2, 1, 1, 5);
    auto gen = oracles::rng(17);
    std::uniform_real_distribution<double> u(-0.1, 0.1);
    std::vector<double> params(KappaMatrix::n_free_parameters(2));
    for (int trial = 0; trial < 5; ++trial) {
        for (auto& p : params) p = u(gen);
        MolecularIntegrals rot = rotate_integrals(ints, KappaMatrix::from_parameters(params, 2));
        auto s0 = exact_spectrum_sector(jordan_wigner(build_hamiltonian(ints)));
        auto s1 = exact_spectrum_sector(jordan_wigner(build_hamiltonian(rot)));
        REQUIRE(s0.size() == s1.size());
        for (std::size_t i = 0; i < s0.size(); ++i)
            CHECK(s0[i] == doctest::Approx(s1[i]).epsilon(1e-9));
    }
}

TEST_CASE("rotation: two successive rotations compose as one basis change") {
    MolecularIntegrals ints = random_integrals(3, 2, 1, 31);
    auto gen = oracles::rng(32);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    std::vector<double> p1(3), p2(3);
    for (auto& p : p1) p = u(gen);
    for (auto& p : p2) p = u(gen);
    KappaMatrix k1 = KappaMatrix::from_parameters(p1, 3), k2 = KappaMatrix::from_parameters(p2, 3);
    MolecularIntegrals twice = rotate_integrals(rotate_integrals(ints, k1), k2);
    Eigen::MatrixXd c = Eigen::MatrixXd((-k1.values).exp()) * Eigen::MatrixXd((-k2.values).exp());
    MolecularIntegrals once = rotate_integrals_matrix(ints, c);
    CHECK((twice.h - once.h).norm() < 1e-12);
    for (std::size_t i = 0; i < once.g.size(); ++i)
        CHECK(twice.g[i] == doctest::Approx(once.g[i]).epsilon(1e-12));
}

TEST_CASE("build_hamiltonian: single-orbital transcription") {
    MolecularIntegrals ints(1, 1, 1);
    ints.h(0, 0) = -1.25;
    ints.e_offset = 0.5;
    FermionOperator h = build_hamiltonian(ints);
    CHECK(h.coefficient({{0, true}, {0, false}}) == cplx{-1.25, 0.0});
    CHECK(h.coefficient({{1, true}, {1, false}}) == cplx{-1.25, 0.0});
    CHECK(h.coefficient({}) == cplx{0.5, 0.0});
    CHECK(h.size() == 3);
}

TEST_CASE("build_hamiltonian: hermitian and spin-conserving for random integrals") {
    MolecularIntegrals ints = random_integrals(2, 1, 1, 77);
    FermionOperator h = build_hamiltonian(ints);
    CHECK(h.adjoint().terms() == h.terms());
    CHECK(fermion_commutator(h, number_operator(Spin::up, 2)).empty());
    CHECK(fermion_commutator(h, number_operator(Spin::down, 2)).empty());
}

TEST_CASE("build_hamiltonian: dense spectrum matches the determinant-basis oracle") {
    MolecularIntegrals ints = random_integrals(2, 1, 1, 202);
    FermionOperator h = build_hamiltonian(ints);
    oracles::Mat dense = oracles::fermion_operator_dense(h);
    // restrict to the (1,1) sector and compare with the Slater-Condon path
    std::vector<int> idx;
    for (int b = 0; b < 16; ++b)
        if (__builtin_popcount(b & 0b0011) == 1 && __builtin_popcount(b >> 2) == 1) idx.push_back(b);
    Eigen::MatrixXcd sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = dense(idx[i], idx[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sub);
    CHECK(es.eigenvalues()[0] == doctest::Approx(exact_ground(ints).energy).epsilon(1e-10));
}

TEST_CASE("h2 fixture reproduces the recorded ground energy") {
    const char* path = "data/h2_sto3g_0.735.fcidump";
    if (!std::filesystem::exists(path)) {
        MESSAGE("fixture not present; skipping");
        return;
    }
    MolecularIntegrals ints = parse_fcidump_file(path);
    CHECK(ints.n_orbitals == 2);
    CHECK(exact_ground(ints).energy == doctest::Approx(-1.137306).epsilon(2e-6));
}
