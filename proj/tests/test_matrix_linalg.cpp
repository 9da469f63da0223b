#include <hcm/circulant.hpp>
#include <hcm/linalg.hpp>
#include <hcm/rng.hpp>

#include <doctest.h>

#include "support/helpers.hpp"

using namespace hcm;

TEST_CASE("hadamard product") {
    const Mat i3 = Mat::identity(3);
    CHECK(hadamard(i3, i3) == i3);
    SplitMix64 g(1);
    for (int t = 0; t < 20; ++t) {
        const Mat y = random_int_mat(g, 3, -4, 4);
        CHECK(hadamard(Mat::ones(3, 3), y) == y);
    }
    CHECK_THROWS_AS(hadamard(Mat(2, 2), Mat(3, 3)), std::invalid_argument);
}

TEST_CASE("trace inner product") {
    const Mat e12 = Mat::unit(3, 0, 1), e21 = Mat::unit(3, 1, 0);
    CHECK(trace_inner(e12, e12) == Rational(1));
    CHECK(trace_inner(e12, e21) == Rational(0));
    SplitMix64 g(2);
    for (int t = 0; t < 50; ++t) {
        const Mat x = random_int_mat(g, 3, -3, 3), y = random_int_mat(g, 3, -3, 3),
                  z = random_int_mat(g, 3, -3, 3);
        CHECK(trace_inner(hadamard(x, y), z) == trace_inner(x, hadamard(y, z)));
    }
}

TEST_CASE("product of circulant shifts, against permutation composition") {
    const std::size_t n = 3;
    // oracle: compose the cyclic maps directly
    Mat expected(n, n);
    for (std::size_t h = 0; h < n; ++h) expected(h, sigma(n, 2, sigma(n, 1, h))) = 1;
    CHECK(circulant_perm(n, 1) * circulant_perm(n, 2) == expected);
    CHECK(expected == circulant_perm(n, 3));  // C_1 C_2 = C_3 = I at n = 3
    CHECK(circulant_perm(4, 1) * circulant_perm(4, 3) == Mat::identity(4));
}

TEST_CASE("matrix arithmetic basics") {
    SplitMix64 g(3);
    const Mat a = random_int_mat(g, 3, -3, 3);
    CHECK(Mat::identity(3) * a == a);
    CHECK(Rational(0) * a == Mat(3, 3));
    CHECK(a - a == Mat(3, 3));
    CHECK((Rational(2) * a) == a + a);
    CHECK_THROWS_AS(Mat(2, 3) * Mat(2, 3), std::invalid_argument);
}

TEST_CASE("rank") {
    CHECK(rank(Mat(3, 3)) == 0);
    CHECK(rank(Mat::identity(3)) == 3);
    CHECK(rank(imat({{1, 2}, {2, 4}})) == 1);
    SplitMix64 g(4);
    for (int t = 0; t < 30; ++t) {
        const std::size_t inner = 1 + g.below(4);
        const Mat a = random_rational_mat(g, 4, inner, -3, 3, 2) * random_rational_mat(g, inner, 4, -3, 3, 2);
        CHECK(rank(a) == rref(a).rank);  // fraction-free route vs Gauss-Jordan route
        CHECK(rank(a) <= inner);
    }
    for (int t = 0; t < 200; ++t) {  // varied shapes and rank profiles
        const std::size_t rows = 1 + g.below(7), cols = 1 + g.below(7);
        Mat a = random_rational_mat(g, rows, cols, -5, 5, 3);
        if (g.below(2) == 0) {
            const std::size_t inner = 1 + g.below(3);
            a = random_rational_mat(g, rows, inner, -3, 3, 2) * random_rational_mat(g, inner, cols, -3, 3, 2);
        }
        if (g.below(3) == 0)
            for (std::size_t c = 0; c < cols; ++c) a(g.below(rows), c) = 0;
        CHECK(rank(a) == rref(a).rank);
        CHECK(rank(a.transpose()) == rank(a));
    }
    for (int t = 0; t < 30; ++t) {
        const Mat a = random_int_mat(g, 3, -3, 3), b = random_int_mat(g, 3, -3, 3);
        const std::size_t r = rank(a * b);
        CHECK(r <= rank(a));
        CHECK(r <= rank(b));
    }
}

TEST_CASE("solve") {
    SplitMix64 g(5);
    for (int t = 0; t < 30; ++t) {
        const Mat a = random_int_mat(g, 4, -3, 3);
        const Mat x0 = random_rational_mat(g, 4, 2, -3, 3, 2);
        const auto sol = solve(a, a * x0);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == a * x0);
    }
    CHECK(!solve(imat({{1}, {1}}), imat({{1}, {2}})).has_value());
    CHECK(solve(imat({{1}, {1}}), imat({{2}, {2}})).value() == imat({{2}}));
    CHECK_THROWS_AS(solve(Mat(2, 2), Mat(3, 1)), std::invalid_argument);
}

TEST_CASE("full rank factorization") {
    SUBCASE("identity") {
        const auto fr = full_rank_factorization(Mat::identity(2));
        CHECK(fr.f == Mat::identity(2));
        CHECK(fr.g == Mat::identity(2));
    }
    SUBCASE("rank one") {
        const auto fr = full_rank_factorization(imat({{1, 2}, {2, 4}}));
        CHECK(fr.rank == 1);
        CHECK(fr.f == imat({{1}, {2}}));
        CHECK(fr.g == imat({{1, 2}}));
        CHECK(fr.f * fr.g == imat({{1, 2}, {2, 4}}));
    }
    SUBCASE("zero matrix") {
        const auto fr = full_rank_factorization(Mat(2, 2));
        CHECK(fr.rank == 0);
        CHECK(fr.f.cols() == 0);
        CHECK(fr.g.rows() == 0);
        CHECK(fr.f * fr.g == Mat(2, 2));
    }
    SUBCASE("random") {
        SplitMix64 g(6);
        for (int t = 0; t < 30; ++t) {
            const std::size_t inner = 1 + g.below(3);
            const Mat a =
                random_int_mat(g, 4, -2, 2) * random_rational_mat(g, 4, 4, -1, 1, 1) * Mat::identity(4);
            const Mat low = random_rational_mat(g, 4, inner, -2, 2, 2) *
                            random_rational_mat(g, inner, 4, -2, 2, 2);
            for (const Mat& m : {a, low}) {
                const auto fr = full_rank_factorization(m);
                CHECK(fr.f * fr.g == m);
                CHECK(fr.rank == rank(m));
                CHECK(fr.f.cols() == fr.rank);
                CHECK(fr.g.rows() == fr.rank);
                CHECK(rank(fr.f) == fr.rank);
                CHECK(rank(fr.g) == fr.rank);
            }
        }
    }
}

TEST_CASE("inverse") {
    SplitMix64 g(7);
    int found = 0;
    for (int t = 0; t < 40 && found < 15; ++t) {
        const Mat a = random_int_mat(g, 3, -3, 3);
        if (rank(a) < 3) continue;
        ++found;
        CHECK(a * inverse(a) == Mat::identity(3));
        CHECK(inverse(a) * a == Mat::identity(3));
    }
    CHECK(found > 0);
    CHECK_THROWS_AS(inverse(imat({{1, 2}, {2, 4}})), std::domain_error);
    CHECK_THROWS_AS(inverse(Mat(2, 3)), std::invalid_argument);
}

TEST_CASE("vec round trip") {
    SplitMix64 g(8);
    const Mat a = random_rational_mat(g, 3, 5, -4, 4, 3);
    CHECK(unvec(vec(a), 3, 5) == a);
}
