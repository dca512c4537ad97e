#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greend4/exact_linalg.hpp"
#include "../src/polynomial.hpp"

#include <random>

using namespace greend4::linalg;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound = 3) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Rat(dist(rng), 1 + std::abs(dist(rng)));
            m(i, j).canonicalize();
        }
    return m;
}

}  // namespace

TEST_CASE("rref of a rank-deficient matrix") {
    const auto m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    const auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.form == RatMatrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
}

TEST_CASE("rank of zero and identity") {
    CHECK(rank(RatMatrix::zero(3, 4)) == 0);
    CHECK(rank(RatMatrix::identity(5)) == 5);
    CHECK(rank(RatMatrix(0, 0)) == 0);
}

TEST_CASE("kernel vectors are annihilated") {
    const auto m = RatMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, -1}});
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker)
        for (const auto& x : m * v) CHECK(x == 0);
}

TEST_CASE("solve detects inconsistency") {
    const auto a = RatMatrix::from_rows({{1, 1}, {2, 2}});
    CHECK_FALSE(solve(a, {1, 3}).has_value());
    const auto x = solve(a, {1, 2});
    REQUIRE(x.has_value());
    CHECK(a * *x == RatVector{1, 2});
    CHECK_THROWS_AS(solve(a, {1}), std::invalid_argument);
}

TEST_CASE("exact rationals survive inversion") {
    const auto m = RatMatrix::from_rows({{Rat(1, 3), Rat(2, 7)}, {Rat(-5, 2), 1}});
    const auto inv = inverse(m);
    CHECK(m * inv == RatMatrix::identity(2));
    CHECK(inv * m == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(RatMatrix::from_rows({{1, 2}, {2, 4}})), std::domain_error);
    CHECK_THROWS_AS(inverse(RatMatrix(2, 3)), std::domain_error);
}

TEST_CASE("kron follows the block convention") {
    const auto a = RatMatrix::from_rows({{1, 2}, {3, 4}});
    const auto b = RatMatrix::from_rows({{0, 1}, {1, 0}});
    const auto k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 1) == 1);
    CHECK(k(1, 0) == 1);
    CHECK(k(2, 1) == 3);
    CHECK(k(3, 2) == 4);
}

TEST_CASE("subspace helpers") {
    const auto u = RatMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}});
    const auto v = RatMatrix::from_rows({{1, 0}, {1, 0}, {0, 1}});
    const auto w = intersect(u, v);
    REQUIRE(w.cols() == 1);
    CHECK(rank(hstack(u, w)) == 2);
    CHECK(rank(hstack(v, w)) == 2);

    const auto picks = extend_basis(u, RatMatrix::identity(3));
    CHECK(picks == std::vector<std::size_t>{2});

    const auto coords = coordinates(u, RatMatrix::from_rows({{3}, {-2}, {0}}));
    CHECK(coords == RatMatrix::from_rows({{3}, {-2}}));
    CHECK_THROWS_AS(coordinates(u, RatMatrix::from_rows({{0}, {0}, {1}})), std::domain_error);

    CHECK(null_space(RatMatrix::identity(3)).cols() == 0);
    CHECK(column_space(RatMatrix::zero(3, 2)).cols() == 0);
}

TEST_CASE("block_diag, stacking and powers") {
    const auto j = RatMatrix::from_rows({{0, 1}, {0, 0}});
    CHECK(power(j, 2).is_zero());
    CHECK(power(j, 0) == RatMatrix::identity(2));
    const auto bd = block_diag({j, RatMatrix::identity(1)});
    CHECK(bd.rows() == 3);
    CHECK(bd(2, 2) == 1);
    CHECK(vstack(j, j).rows() == 4);
    CHECK(block_diag({}).rows() == 0);
}

TEST_CASE("property: rank-nullity and inverse round trip on random matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
        const auto m = random_matrix(rng, rows, cols);
        CHECK(rank(m) + kernel_basis(m).size() == cols);
        CHECK(rank(m) == rank(m.transpose()));
        if (rows == cols && is_invertible(m)) CHECK(inverse(inverse(m)) == m);
    }
}

TEST_CASE("property: products of low-rank factors have bounded rank") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto left = random_matrix(rng, 6, 2);
        const auto right = random_matrix(rng, 2, 6);
        CHECK(rank(left * right) <= 2);
    }
}

TEST_CASE("characteristic polynomial and rational eigenvalues") {
    using namespace greend4::poly;
    // diag(2, 2, -3) conjugated by an upper unitriangular matrix
    const auto p = RatMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    const auto d = RatMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, -3}});
    const auto m = p * d * inverse(p);
    const auto cp = charpoly(m);
    // (t-2)^2 (t+3) = t^3 - t^2 - 8t + 12
    CHECK(cp == RatPoly{12, -8, -1, 1});
    CHECK(rational_eigenvalues(m) == std::vector<Rat>{-3, 2});

    // rotation by 90 degrees has no rational eigenvalue
    CHECK(rational_eigenvalues(RatMatrix::from_rows({{0, -1}, {1, 0}})).empty());
    // fractional eigenvalues are recovered exactly
    CHECK(rational_eigenvalues(RatMatrix::from_rows({{Rat(1, 2), 0}, {0, Rat(-5, 3)}})) ==
          std::vector<Rat>{Rat(-5, 3), Rat(1, 2)});
}

TEST_CASE("integer roots through Hensel lifting") {
    using namespace greend4::poly;
    // (t - 40000)(t + 7)(t^2 + 1)
    const IntPoly g = [] {
        RatPoly acc{1};
        for (const RatPoly& factor : {RatPoly{-40000, 1}, RatPoly{7, 1}, RatPoly{1, 0, 1}}) {
            RatPoly next(acc.size() + factor.size() - 1);
            for (std::size_t i = 0; i < acc.size(); ++i)
                for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += acc[i] * factor[j];
            acc = next;
        }
        IntPoly out;
        for (const auto& c : acc) out.push_back(c.get_num());
        return out;
    }();
    CHECK(integer_roots(g) == std::vector<Integer>{-7, 40000});
    CHECK(integer_roots(IntPoly{0, 1}) == std::vector<Integer>{0});
}
