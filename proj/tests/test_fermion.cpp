#include <doctest.h>

#include "oracles.hpp"
#include "qucc/fermion.hpp"

using namespace qucc;

TEST_CASE("anticommutator rewrite: a0 a0† = 1 - a0† a0") {
    FermionOperator op = FermionOperator::term(2, {{0, false}, {0, true}});
    CHECK(op.coefficient({}) == cplx{1.0, 0.0});
    CHECK(op.coefficient({{0, true}, {0, false}}) == cplx{-1.0, 0.0});
    CHECK(op.size() == 2);
}

TEST_CASE("pauli exclusion: repeated creation vanishes") {
    FermionOperator op = FermionOperator::term(2, {{0, true}, {0, true}});
    CHECK(op.empty());
}

TEST_CASE("products reduce to canonical form and match the dense oracle") {
    // (a†_1 a_0) (a†_0 a_1)
    FermionOperator a = FermionOperator::term(2, {{1, true}, {0, false}});
    FermionOperator b = FermionOperator::term(2, {{0, true}, {1, false}});
    FermionOperator prod = a * b;
    oracles::Mat dense = oracles::fermion_operator_dense(prod);
    oracles::Mat want = oracles::fermion_operator_dense(a) * oracles::fermion_operator_dense(b);
    CHECK((dense - want).norm() < 1e-13);
    CHECK(prod.coefficient({{1, true}, {1, false}}) == cplx{1.0, 0.0});
    CHECK(prod.coefficient({{1, true}, {0, true}, {1, false}, {0, false}}) != cplx{0.0, 0.0});
}

TEST_CASE("normal ordering preserves the operator (dense equality)") {
    auto gen = oracles::rng(3);
    std::uniform_int_distribution<int> mode(0, 3);
    std::uniform_int_distribution<int> flag(0, 1);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        LadderString ops;
        int len = 1 + mode(gen);
        for (int k = 0; k < len; ++k) ops.push_back({mode(gen), flag(gen) == 1});
        cplx c{coef(gen), coef(gen)};
        FermionOperator op(4);
        op.add_term(ops, c);
        // oracle: multiply raw ladder matrices without any reordering
        Eigen::MatrixXcd want = c * Eigen::MatrixXcd::Identity(16, 16);
        for (const auto& lad : ops) {
            oracles::Mat ladder = oracles::creation_dense(lad.index, 4);
            want = want * (lad.dagger ? ladder : Eigen::MatrixXcd(ladder.adjoint()));
        }
        CHECK((oracles::fermion_operator_dense(op) - want).norm() < 1e-12);
    }
}

TEST_CASE("add_term is idempotent on canonical input") {
    FermionOperator op(4);
    op.add_term({{3, true}, {1, true}, {2, false}, {0, false}}, 0.7);
    FermionOperator again(4);
    for (const auto& [s, c] : op.terms()) again.add_term(s, c);
    CHECK(again.terms() == op.terms());
}

TEST_CASE("adjoint: (theta a†_2 a_0)† = theta* a†_0 a_2") {
    FermionOperator op = FermionOperator::term(3, {{2, true}, {0, false}}, cplx{0.3, 0.1});
    FermionOperator adj = op.adjoint();
    CHECK(adj.coefficient({{0, true}, {2, false}}) == cplx{0.3, -0.1});
    CHECK((oracles::fermion_operator_dense(adj) -
           Eigen::MatrixXcd(oracles::fermion_operator_dense(op).adjoint()))
              .norm() < 1e-14);
    // adjoint twice is the identity
    CHECK(adj.adjoint().terms() == op.terms());
}

TEST_CASE("commutator identities") {
    // [a†_1 a_0, a†_0 a_1] = a†_1 a_1 - a†_0 a_0
    FermionOperator a = FermionOperator::term(2, {{1, true}, {0, false}});
    FermionOperator b = FermionOperator::term(2, {{0, true}, {1, false}});
    FermionOperator comm = fermion_commutator(a, b);
    CHECK(comm.coefficient({{1, true}, {1, false}}) == cplx{1.0, 0.0});
    CHECK(comm.coefficient({{0, true}, {0, false}}) == cplx{-1.0, 0.0});
    oracles::Mat dense_a = oracles::fermion_operator_dense(a);
    oracles::Mat dense_b = oracles::fermion_operator_dense(b);
    CHECK((oracles::fermion_operator_dense(comm) - (dense_a * dense_b - dense_b * dense_a)).norm() <
          1e-13);
}

TEST_CASE("number operator") {
    FermionOperator n_up = number_operator(Spin::up, 2);
    CHECK(n_up.size() == 2);
    CHECK(n_up.coefficient({{0, true}, {0, false}}) == cplx{1.0, 0.0});
    CHECK(n_up.coefficient({{1, true}, {1, false}}) == cplx{1.0, 0.0});
    FermionOperator n_dn = number_operator(Spin::down, 2);
    CHECK(n_dn.coefficient({{2, true}, {2, false}}) == cplx{1.0, 0.0});
}

TEST_CASE("debug text form") {
    FermionOperator op(4);
    op.add_term({{3, true}, {1, true}, {0, false}, {2, false}}, -0.5);
    // canonical annihilation order is descending: expect [3+ 1+ 2- 0-] with
    // the sign from one transposition
    CHECK(op.to_text() == "(0.5+0j) * [3+ 1+ 2- 0-]\n");
}
