#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shw/matrix.hpp"

using namespace shw;

namespace {

template <class F>
Matrix<F> from_ints(F k, std::vector<std::vector<long long>> rows) {
    Matrix<F> m(k, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = k.from_int(rows[i][j]);
    return m;
}

template <class F>
Matrix<F> random_matrix(F k, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> dist(-4, 4);
    Matrix<F> m(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = k.from_int(dist(rng));
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    Rationals q;
    CHECK(rank(Matrix<Rationals>::identity(q, 3)) == 3);
    CHECK(rank(Matrix<Rationals>(q, 2, 5)) == 0);
    PrimeField f2(2);
    auto m = from_ints(f2, {{2, 4}, {1, 2}});
    CHECK(rank(m) == 1);  // reduces to [[0,0],[1,0]] over F_2
    // same matrix over Q has rank 1 as well, but e.g. [[2,4],[1,3]]
    auto m2 = from_ints(q, {{2, 4}, {1, 3}});
    CHECK(rank(m2) == 2);
    CHECK(rank(from_ints(f2, {{2, 4}, {1, 3}})) == 1);
}

TEST_CASE("kernel basics") {
    Rationals q;
    CHECK(kernel_basis(Matrix<Rationals>::identity(q, 4)).cols() == 0);
    CHECK(kernel_basis(Matrix<Rationals>(q, 2, 3)).cols() == 3);
    auto m = from_ints(q, {{1, 1}});
    auto kb = kernel_basis(m);
    REQUIRE(kb.cols() == 1);
    // one vector proportional to (1, -1)
    CHECK(q.eq(kb(0, 0), q.neg(kb(1, 0))));
    CHECK(!q.is_zero(kb(0, 0)));
}

TEST_CASE("quotient_dim") {
    Rationals q;
    auto big = from_ints(q, {{1, 0}, {0, 1}, {0, 0}});
    auto small = from_ints(q, {{1}, {0}, {0}});
    CHECK(quotient_dim(big, small) == 1);
    CHECK(quotient_dim(big, big) == 0);
    auto full = Matrix<Rationals>::identity(q, 3);
    auto plane = from_ints(q, {{1, 1}, {1, -1}, {1, 0}});
    CHECK(quotient_dim(full, plane) == 1);
    auto outside = from_ints(q, {{0}, {0}, {1}});
    auto small2 = from_ints(q, {{1, 0}, {0, 1}, {0, 0}});
    CHECK_THROWS_AS(quotient_dim(small2, outside), ContainmentViolation);
}

TEST_CASE("rank-nullity and permutation invariance, randomized") {
    std::mt19937_64 rng(20240811);
    Rationals q;
    PrimeField f5(5);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        auto m = random_matrix(q, r, c, rng);
        CHECK(rank(m) + kernel_basis(m).cols() == c);
        auto mp = random_matrix(f5, r, c, rng);
        CHECK(rank(mp) + kernel_basis(mp).cols() == c);

        // permute rows and columns
        auto perm = m;
        for (std::size_t i = 0; i + 1 < r; ++i) perm.swap_rows(i, i + rng() % (r - i));
        auto permt = perm.transpose();
        for (std::size_t i = 0; i + 1 < c; ++i) permt.swap_rows(i, i + rng() % (c - i));
        CHECK(rank(permt) == rank(m));
    }
}

TEST_CASE("rank over Q bounds rank mod p") {
    std::mt19937_64 rng(7);
    Rationals q;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        PrimeField fp(p);
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            auto m = random_matrix(q, r, c, rng);  // integer entries
            Matrix<PrimeField> red(fp, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) red(i, j) = fp.from_rat(m(i, j));
            CHECK(rank(m) >= rank(red));
        }
    }
}

TEST_CASE("kernel vectors are annihilated") {
    std::mt19937_64 rng(99);
    PrimeField f3(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix(f3, 4, 6, rng);
        auto kb = kernel_basis(m);
        CHECK((m * kb).is_zero());
        CHECK(rank(kb) == kb.cols());  // independent
    }
}

TEST_CASE("solve") {
    Rationals q;
    auto m = from_ints(q, {{2, 1}, {1, 1}});
    auto sol = solve(m, {q.from_int(3), q.from_int(2)});
    REQUIRE(sol.has_value());
    CHECK(q.eq((*sol)[0], q.one()));
    CHECK(q.eq((*sol)[1], q.one()));
    auto bad = solve(from_ints(q, {{1, 1}, {1, 1}}), {q.one(), q.zero()});
    CHECK(!bad.has_value());
}

TEST_CASE("rational canonical form") {
    CHECK(rat_to_string(Rat(4, 6)) == "2/3");
    CHECK(rat_to_string(Rat(-4, 6)) == "-2/3");
    CHECK(rat_to_string(Rat(8, 2)) == "4");
    CHECK(rat_parse("-7/21") == Rat(-1, 3));
    CHECK_THROWS_AS(rat_parse("1/0"), InputError);
    CHECK_THROWS_AS(rat_parse("abc"), InputError);
}

TEST_CASE("prime field sanity") {
    CHECK_THROWS_AS(PrimeField(6), InputError);
    PrimeField f7(7);
    CHECK(f7.eq(f7.mul(f7.from_int(3), f7.from_int(5)), f7.one()));
    CHECK(f7.eq(f7.inv(f7.from_int(3)), f7.from_int(5)));
    CHECK(f7.from_rat(Rat(1, 2)) == 4);  // 2 * 4 = 1 mod 7
}
