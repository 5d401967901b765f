#include "doctest.h"
#include "hh/formulas.hpp"
#include "hh/homcomplex.hpp"

#include <sstream>

using namespace hh;

TEST_CASE("degree decomposition") {
    auto d = DegreeDecomposition::of(11, 4);
    CHECK(d.p == 2);
    CHECK(d.t == 3);
    CHECK(d.p * 4 + d.t == 11);
    CHECK_THROWS_AS(DegreeDecomposition::of(-1, 3), InvalidParams);
}

TEST_CASE("hom dimension formula examples") {
    CHECK(hom_dim_formula(4, 1, 3) == 16);
    CHECK(hom_dim_formula(1, 2, 3) == 32);
    CHECK(hom_dim_formula(3, 1, 0) == 6);
    CHECK(hom_dim_formula(2, 3, 4) == 60);
}

TEST_CASE("kernel formula examples") {
    CHECK(kernel_dim_formula(4, 2, 0, 0) == 9);
    CHECK(kernel_dim_formula(4, 2, 2, 1) == 16);
    CHECK(kernel_dim_formula(4, 2, 0, 3) == 15);
    CHECK_THROWS_AS(kernel_dim_formula(2, 2, 0, 1), UnsupportedM);
    CHECK_THROWS_AS(kernel_dim_formula(1, 2, 0, 1), UnsupportedM);
}

TEST_CASE("HH dimension formula examples") {
    CHECK(hh_dim_formula(4, 2, 0, 1) == 6);
    CHECK(hh_dim_formula(3, 1, 5, 3) == 2);
    CHECK(hh_dim_formula(2, 1, 0, 5) == 12);
    CHECK(hh_dim_formula(4, 2, 2, 1) == 9);
    CHECK(hh_dim_formula(3, 2, 0, 0) == 7);
    CHECK(hh_dim_formula(1, 2, 0, 0) == 5);
    CHECK(hh_dim_formula(1, 1, 0, 0) == 4);
    CHECK_THROWS_AS(hh_dim_formula(1, 1, 0, 1), NoClosedForm);
}

TEST_CASE("rank-nullity consistency of the tables") {
    for (int m = 3; m <= 8; ++m)
        for (int N = 1; N <= 4; ++N)
            for (unsigned c : {0u, 2u, 3u, 5u, 7u})
                for (int n = 1; n <= 4 * m; ++n) {
                    long image = hom_dim_formula(m, N, n - 1) - kernel_dim_formula(m, N, c, n - 1);
                    CHECK_MESSAGE(hh_dim_formula(m, N, c, n) == kernel_dim_formula(m, N, c, n) - image,
                                  "m=" << m << " N=" << N << " char=" << c << " n=" << n);
                }
}

TEST_CASE("tables match computation on the grid") {
    for (int m = 3; m <= 6; ++m)
        for (int N = 1; N <= 3; ++N)
            for (unsigned c : {0u, 2u, 3u, 5u}) {
                Algebra A(m, N, Field::create(c));
                Resolution R(A);
                HomComplex H(R);
                for (int n = 0; n <= 2 * m + 3; ++n) {
                    std::ostringstream at;
                    at << "m=" << m << " N=" << N << " char=" << c << " n=" << n;
                    CHECK_MESSAGE(static_cast<long>(H.space(n).dimension()) == hom_dim_formula(m, N, n), at.str());
                    CHECK_MESSAGE(static_cast<long>(H.kernel_dimension(n)) == kernel_dim_formula(m, N, c, n),
                                  at.str());
                    CHECK_MESSAGE(static_cast<long>(H.hh_dimension(n)) == hh_dim_formula(m, N, c, n), at.str());
                }
            }
}

TEST_CASE("tables match computation for m = 1, 2") {
    for (int N = 1; N <= 3; ++N)
        for (unsigned c : {0u, 2u, 3u}) {
            for (int m : {1, 2}) {
                if (m == 1 && N == 1) continue;
                Algebra A(m, N, Field::create(c));
                Resolution R(A);
                HomComplex H(R);
                for (int n = 0; n <= 8; ++n) {
                    std::ostringstream at;
                    at << "m=" << m << " N=" << N << " char=" << c << " n=" << n;
                    CHECK_MESSAGE(static_cast<long>(H.space(n).dimension()) == hom_dim_formula(m, N, n), at.str());
                    CHECK_MESSAGE(static_cast<long>(H.hh_dimension(n)) == hh_dim_formula(m, N, c, n), at.str());
                }
            }
        }
}

TEST_CASE("centre basis formula") {
    {
        Algebra A(2, 1, Field::create(0));
        auto z = centre_basis_formula(A);
        REQUIRE(z.size() == 3);
        CHECK(z[1].value == A.element(A.socle(0)));
        CHECK(z[2].value == A.element(A.socle(1)));
    }
    CHECK(centre_basis_formula(Algebra(1, 2, Field::create(0))).size() == 5);
    CHECK(centre_basis_formula(Algebra(3, 2, Field::create(0))).size() == 7);
    for (unsigned c : {0u, 2u, 3u})
        for (int m = 1; m <= 5; ++m)
            for (int N = 1; N <= 3; ++N) {
                Algebra A(m, N, Field::create(c));
                auto z = centre_basis_formula(A);
                CHECK(z.size() == static_cast<std::size_t>(m == 1 ? N + 3 : m * N + 1));
                // central and independent; then it spans the centre by dimension count
                std::vector<Vector> cols;
                for (const auto& e : z) {
                    CHECK(A.is_central(e.value));
                    Vector v(A.dimension(), A.field().zero());
                    for (const auto& [p, s] : e.value.terms) v[p] = s;
                    cols.push_back(v);
                }
                CHECK(rank(Matrix::from_columns(cols, A.dimension(), A.field())) == z.size());
                CHECK(A.centre().size() == z.size());
            }
}
