#include "doctest.h"
#include "hh/matrix.hpp"

#include <random>

using namespace hh;

namespace {
Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Field F, int spread = 3) {
    std::uniform_int_distribution<int> d(-spread, spread);
    Matrix M(r, c, F);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng() % 3 == 0) M.at(i, j) = F.from_int(d(rng));
    return M;
}
}  // namespace

TEST_CASE("field creation") {
    CHECK(Field::create(0).is_rational());
    CHECK(Field::create(2).characteristic() == 2);
    CHECK_THROWS_AS(Field::create(4), CompositeCharacteristic);
    CHECK_THROWS_AS(Field::create(1), CompositeCharacteristic);
}

TEST_CASE("residue arithmetic") {
    Field F = Field::create(5);
    Scalar a = F.from_int(3), b = F.from_int(4);
    CHECK((a + b).residue() == 2);
    CHECK((a * b).residue() == 2);
    CHECK((a / b * b) == a);
    CHECK((-a).residue() == 2);
    CHECK(F.from_int(-7).residue() == 3);
    CHECK(F.from_fraction(1, 2).residue() == 3);
    // integer literal of characteristic 0 mixes with residues
    CHECK((Scalar(6, 0) * a).residue() == 3);
    CHECK_THROWS_AS(Field::create(3).from_int(1) + a, FieldMismatch);
}

TEST_CASE("rational arithmetic") {
    Field Q = Field::create(0);
    Scalar h = Q.from_fraction(1, 2);
    CHECK((h + h).is_one());
    CHECK((h * Q.from_int(6)) == Q.from_int(3));
    CHECK(h.inverse() == Q.from_int(2));
    CHECK_THROWS(Q.zero().inverse());
}

TEST_CASE("rank and nullspace basics") {
    for (unsigned p : {0u, 2u, 7u}) {
        Field F = Field::create(p);
        auto I = rank_nullspace(Matrix::identity(2, F));
        CHECK(I.rank == 2);
        CHECK(I.nullspace.empty());
        auto Z = rank_nullspace(Matrix(2, 2, F));
        CHECK(Z.rank == 0);
        CHECK(Z.nullspace.size() == 2);
    }
}

TEST_CASE("rank-nullity, transpose rank, nullspace vectors") {
    std::mt19937 rng(7);
    for (unsigned p : {0u, 2u, 3u}) {
        Field F = Field::create(p);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
            Matrix A = random_matrix(rng, r, c, F);
            auto rn = rank_nullspace(A);
            CHECK(rn.rank + rn.nullspace.size() == c);
            CHECK(rank(A.transpose()) == rn.rank);
            for (const auto& v : rn.nullspace) CHECK(is_zero(A.apply(v)));
            if (!rn.nullspace.empty())
                CHECK(rank(Matrix::from_columns(rn.nullspace, c, F)) == rn.nullspace.size());
        }
    }
}

TEST_CASE("solve_linear") {
    Field Q = Field::create(0);
    Vector b{Q.from_int(3), Q.from_int(-2)};
    auto x = solve_linear(Matrix::identity(2, Q), b);
    REQUIRE(x);
    CHECK((*x)[0] == b[0]);
    CHECK((*x)[1] == b[1]);
    CHECK(!solve_linear(Matrix(2, 2, Q), b));
    CHECK_THROWS_AS(solve_linear(Matrix(3, 2, Q), b), DimensionMismatch);

    std::mt19937 rng(11);
    for (unsigned p : {0u, 5u}) {
        Field F = Field::create(p);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix A = random_matrix(rng, r, c, F);
            Vector x0(c, F.zero());
            for (auto& s : x0) s = F.from_int(static_cast<int>(rng() % 5) - 2);
            Vector b0 = A.apply(x0);
            auto x = solve_linear(A, b0);
            REQUIRE(x);
            Vector back = A.apply(*x);
            for (std::size_t k = 0; k < r; ++k) CHECK(back[k] == b0[k]);
            LinearSolver S(A);
            auto y = S.solve(b0);
            REQUIRE(y);
            for (std::size_t k = 0; k < c; ++k) CHECK((*y)[k] == (*x)[k]);
        }
    }
}

TEST_CASE("solver detects inconsistent systems") {
    Field F = Field::create(0);
    Matrix A(3, 2, F);
    A.at(0, 0) = F.one();
    A.at(1, 0) = F.one();
    A.at(2, 1) = F.one();
    LinearSolver S(A);
    CHECK(S.rank() == 2);
    CHECK(!S.solve({F.one(), F.zero(), F.zero()}));
    CHECK(S.solve({F.one(), F.one(), F.from_int(4)}));
}

TEST_CASE("sparse echelon rank agrees with dense rank") {
    std::mt19937 rng(3);
    for (unsigned p : {0u, 2u}) {
        Field F = Field::create(p);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
            Matrix A = random_matrix(rng, r, c, F);
            SparseEchelon E(c);
            for (std::size_t i = 0; i < r; ++i) {
                SparseEchelon::Row row;
                for (std::size_t j = 0; j < c; ++j)
                    if (!A.at(i, j).is_zero()) row.emplace_back(j, A.at(i, j));
                E.insert(row);
            }
            CHECK(E.rank() == rank(A));
        }
    }
}
