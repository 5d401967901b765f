#include "doctest.h"
#include "hh/oracle.hpp"

#include <chrono>
#include <cstdlib>

using namespace hh;

TEST_CASE("bar cochain dimensions") {
    // m = 1, N = 1: a 4-dimensional local algebra with a 3-dimensional radical
    Algebra A(1, 1, Field::create(0));
    CHECK(bar_cochain_dimension(A, 0) == 4);
    CHECK(bar_cochain_dimension(A, 1) == 12);
    CHECK(bar_cochain_dimension(A, 3) == 27 * 4);
    // m = 3, N = 1: three radical paths leave each vertex
    Algebra B(3, 1, Field::create(0));
    CHECK(bar_cochain_dimension(B, 0) == 6);
}

TEST_CASE("bar differential squares to zero") {
    for (auto [m, N, c] : {std::tuple{1, 1, 0u}, std::tuple{1, 2, 3u}, std::tuple{2, 1, 0u}, std::tuple{3, 2, 2u}}) {
        Algebra A(m, N, Field::create(c));
        for (int n = 0; n <= 2; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(bar_square_zero(A, n));
        }
    }
}

TEST_CASE("oracle centre dimension for m = 1, N = 1") {
    Algebra A(1, 1, Field::create(0));
    CHECK(bar_hh_dimension(A, 0) == 4);
}

TEST_CASE("oracle agrees with the minimal resolution") {
    struct Case {
        int m, N, n_max;
    };
    for (Case k : {Case{1, 1, 5}, Case{1, 2, 4}, Case{2, 1, 4}, Case{3, 1, 3}})
        for (unsigned c : {0u, 2u}) {
            CAPTURE(k.m);
            CAPTURE(k.N);
            CAPTURE(c);
            Algebra A(k.m, k.N, Field::create(c));
            Resolution R(A);
            HomComplex H(R);
            BarReport r = bar_cross_check(H, k.n_max);
            for (const auto& d : r.degrees) {
                CAPTURE(d.n);
                CHECK(d.feasible);
                CHECK(d.bar == d.minimal);
            }
            CHECK(r.pass);
        }
}

TEST_CASE("bound and TooLarge") {
    Algebra A(1, 2, Field::create(0));
    CHECK_THROWS_AS(bar_hh_dimension(A, 3, 100), TooLarge);
    setenv("HH_MAX_COORDS", "50", 1);
    CHECK(max_bar_coordinates() == 50);
    CHECK_THROWS_AS(bar_hh_dimension(A, 2), TooLarge);
    Resolution R(A);
    HomComplex H(R);
    BarReport r = bar_cross_check(H, 3);
    CHECK(r.degrees[0].feasible);
    CHECK_FALSE(r.degrees[3].feasible);
    CHECK(r.pass);
    unsetenv("HH_MAX_COORDS");
    CHECK(max_bar_coordinates() == 100000);
}
