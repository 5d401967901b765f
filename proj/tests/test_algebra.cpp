#include "doctest.h"
#include "hh/algebra.hpp"
#include "hh/matrix.hpp"

using namespace hh;

namespace {
Field Q() { return Field::create(0); }

Arrow a(int i) { return {ArrowType::A, i}; }
Arrow ab(int i) { return {ArrowType::B, i}; }

// span dimension of a family of algebra elements
std::size_t span_dim(const Algebra& A, const std::vector<AlgebraElement>& xs) {
    Matrix M(A.dimension(), xs.size(), A.field());
    for (std::size_t c = 0; c < xs.size(); ++c)
        for (const auto& [p, v] : xs[c].terms) M.at(p, c) = v;
    return rank(M);
}

// commutant against every basis path (not only generators)
std::size_t brute_centre_dim(const Algebra& A) {
    const std::size_t B = A.dimension();
    Matrix M(B * B, B, A.field());
    for (std::size_t x = 0; x < B; ++x)
        for (std::size_t b = 0; b < B; ++b) {
            if (auto r = A.mul(int(b), int(x))) M.at(x * B + *r, b) += A.field().one();
            if (auto r = A.mul(int(x), int(b))) M.at(x * B + *r, b) -= A.field().one();
        }
    return B - rank(M);
}
}  // namespace

TEST_CASE("dimension") {
    CHECK(Algebra(3, 1, Q()).dimension() == 12);
    CHECK(Algebra(1, 2, Field::create(2)).dimension() == 8);
    CHECK_THROWS_AS(Algebra(0, 1, Q()), InvalidParams);
    CHECK_THROWS_AS(Algebra(2, 0, Q()), InvalidParams);
    for (int m = 1; m <= 6; ++m)
        for (int N = 1; N <= 3; ++N) CHECK(Algebra(m, N, Q()).dimension() == std::size_t(4 * m * N));
}

TEST_CASE("dimension table of e_i L e_j") {
    for (int m = 1; m <= 5; ++m)
        for (int N = 1; N <= 3; ++N) {
            Algebra A(m, N, Q());
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    std::size_t want = 0;
                    if (m == 1) want = 4 * N;
                    else if (m == 2) want = 2 * N;
                    else if (i == j) want = 2 * N;
                    else if (A.vertex(j - i) == 1 || A.vertex(i - j) == 1) want = N;
                    CHECK(A.basis(i, j).size() == want);
                }
        }
}

TEST_CASE("normal form") {
    Algebra A(3, 2, Q());
    CHECK(A.normal_form(0, {a(0), a(1)}).is_zero());
    CHECK(A.normal_form(1, {ab(0), ab(2)}).is_zero());
    CHECK(A.normal_form(2, {}) == A.element(A.idem(2)));
    // (abar_{m-1} a_{m-1})^N at vertex 0 is the socle (a_0 abar_0)^N
    CHECK(A.normal_form(0, {ab(2), a(2), ab(2), a(2)}) == A.element(A.socle(0)));
    CHECK(A.normal_form(0, {a(0), ab(0), a(0), ab(0)}) == A.element(A.socle(0)));
    CHECK(A.normal_form(0, {a(0), ab(0), a(0), ab(0), a(0)}).is_zero());
    CHECK(A.normal_form(0, {a(0), ab(0), a(0)}) == A.element(A.a_head(0, 1)));
    CHECK(A.normal_form(1, {ab(0), a(0)}) == A.element(A.pow_ba(1, 1)));
    CHECK_THROWS_AS(A.normal_form(0, {a(1)}), NonComposableWord);
    CHECK_THROWS_AS(A.normal_form(0, {ab(0)}), NonComposableWord);
}

TEST_CASE("multiplication rules") {
    for (int N = 1; N <= 3; ++N) {
        Algebra A(4, N, Q());
        CHECK(A.mul(A.idem(1), A.idem(1)) == A.idem(1));
        CHECK(!A.mul(A.idem(1), A.idem(2)));
        CHECK(A.mul(A.a_head(0, N - 1), A.b_head(1, 0)) == A.socle(0));
        CHECK(!A.mul(A.socle(0), A.a_head(0, 0)));
        CHECK(!A.mul(A.a_head(0, 0), A.a_head(1, 0)));
    }
}

TEST_CASE("associativity and unit") {
    for (int m = 1; m <= 3; ++m)
        for (int N = 1; N <= 2; ++N) {
            Algebra A(m, N, Q());
            const int B = int(A.dimension());
            for (int x = 0; x < B; ++x)
                for (int y = 0; y < B; ++y)
                    for (int z = 0; z < B; ++z) {
                        auto xy = A.mul(x, y), yz = A.mul(y, z);
                        std::optional<int> l, r;
                        if (xy) l = A.mul(*xy, z);
                        if (yz) r = A.mul(x, *yz);
                        CHECK(l == r);
                    }
            AlgebraElement one = A.unit();
            for (int x = 0; x < B; ++x) {
                CHECK(A.multiply(one, A.element(x)) == A.element(x));
                CHECK(A.multiply(A.element(x), one) == A.element(x));
            }
        }
}

TEST_CASE("centre") {
    for (int m = 1; m <= 6; ++m)
        for (int N = 1; N <= 3; ++N)
            for (unsigned p : {0u, 2u, 3u}) {
                Algebra A(m, N, Field::create(p));
                auto Z = A.centre();
                CHECK(Z.size() == std::size_t(m == 1 ? N + 3 : N * m + 1));
                for (const auto& z : Z) CHECK(A.is_central(z));
                if (m <= 3) CHECK(brute_centre_dim(A) == Z.size());
            }
    Algebra A(2, 1, Q());
    auto Z = A.centre();
    std::vector<AlgebraElement> expect{A.unit(), A.element(A.socle(0)), A.element(A.socle(1))};
    CHECK(span_dim(A, Z) == 3);
    auto both = Z;
    both.insert(both.end(), expect.begin(), expect.end());
    CHECK(span_dim(A, both) == 3);
}

TEST_CASE("radical membership") {
    Algebra A(3, 2, Q());
    CHECK(!A.radical_membership(A.element(A.idem(0))));
    CHECK(A.radical_membership(A.element(A.a_head(0, 0))));
    AlgebraElement x = A.element(A.idem(0));
    x += A.element(A.a_head(0, 0));
    CHECK(!A.radical_membership(x));
}

TEST_CASE("rendering") {
    Algebra A(3, 2, Q());
    CHECK(A.render(A.pow_ab(0, 1)) == "(a0 abar0)^1");
    CHECK(A.render(A.b_head(2, 1)) == "abar1(a1 abar1)^1");
    CHECK(A.render(A.socle(1)) == "(a1 abar1)^2");
    CHECK(A.render(A.idem(2)) == "e2");
    CHECK(A.render(A.b_head(0, 0)) == "abar2");
}
