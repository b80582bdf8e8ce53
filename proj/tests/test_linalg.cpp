#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace superalg;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("canonical rationals") {
        CHECK(to_string(Scalar(6) / 4) == "3/2");
        CHECK(to_string(Scalar(-4) / 2) == "-2");
        CHECK(to_string(Scalar(0)) == "0");
        CHECK(parse_scalar("3/2") == Scalar(3, 2));
        CHECK(parse_scalar("-7") == Scalar(-7));
        CHECK(parse_scalar("0") == Scalar(0));
        for (const char* bad : {"2/4", "+1", "01", "-0", "3/1", "1/-2", "1/0", "", "1.5", " 1", "0/5", "--1"})
            CHECK_MESSAGE(!parse_scalar(bad), bad);
    }

    TEST_CASE("rank and nullspace agree with the elimination oracle") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 40; ++t) {
            const std::size_t r = 1 + t % 5, c = 1 + (t * 7) % 6;
            Matrix m = random_matrix(rng, r, c);
            if (t % 3 == 0 && r > 1)
                for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;  // force a dependency
            CHECK(rank(m) == oracle::rank_of(oracle::rows_of(m)));
            const auto ns = nullspace(m);
            CHECK(ns.size() == c - rank(m));
            for (const auto& x : ns) CHECK(oracle::zero(oracle::apply(m, x)));
        }
    }

    TEST_CASE("determinant and inverse") {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = 1 + t % 5;
            const Matrix m = random_matrix(rng, n, n);
            CHECK(determinant(m) == oracle::det(m));
            const auto inv = inverse(m);
            CHECK(inv.has_value() == (oracle::det(m) != 0));
            if (inv) CHECK(m * *inv == Matrix::identity(n));
        }
    }

    TEST_CASE("solve returns a particular solution or nothing") {
        const Matrix m = fixture::mat(2, {{1, 2}, {2, 4}});
        const auto x = solve(m, {Scalar(3), Scalar(6)});
        REQUIRE(x);
        CHECK(oracle::apply(m, *x) == Vec{Scalar(3), Scalar(6)});
        CHECK_FALSE(solve(m, {Scalar(1), Scalar(0)}));
    }

    TEST_CASE("characteristic polynomial and rational roots") {
        // diag(1, 1, 2, 2): (x - 1)^2 (x - 2)^2 = x^4 - 6x^3 + 13x^2 - 12x + 4
        const Polynomial p = charpoly(fixture::diag({1, 1, 2, 2}));
        CHECK(p == Polynomial{4, -12, 13, -6, 1});
        const auto [roots, rest] = rational_roots(p);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].value == 1);
        CHECK(roots[0].multiplicity == 2);
        CHECK(roots[1].value == 2);
        CHECK(roots[1].multiplicity == 2);
        CHECK(poly_trim(rest) == Polynomial{1});

        // x^2 + 1 has no rational roots
        const Polynomial rot = charpoly(fixture::mat(2, {{0, -1}, {1, 0}}));
        CHECK(rot == Polynomial{1, 0, 1});
        CHECK(rational_roots(rot).first.empty());

        // Cayley-Hamilton on a random matrix
        std::mt19937_64 rng(3);
        const Matrix m = random_matrix(rng, 4, 4);
        CHECK(poly_eval(charpoly(m), m).is_zero());
    }

    TEST_CASE("roots with fractional values") {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        const auto [roots, rest] = rational_roots(Polynomial{-3, 5, 2});
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].value == Scalar(-3));
        CHECK(roots[1].value == Scalar(1, 2));
        CHECK(deflate(Polynomial{-3, 5, 2}, Scalar(-3)) == Polynomial{-1, 2});
    }
}
