#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shw/abelian.hpp"

using namespace shw;

namespace {

ZMat zm(std::vector<std::vector<long long>> rows) {
    ZMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

Int gcd_of_minors(const ZMat& m, std::size_t k) {
    // brute-force k x k minor gcd, for the SNF oracle d_1...d_k = gcd
    std::vector<std::size_t> ri(k), ci(k);
    Int g = 0;
    std::vector<std::size_t> rows(m.rows), cols(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) rows[i] = i;
    for (std::size_t j = 0; j < m.cols; ++j) cols[j] = j;

    std::vector<bool> rsel(m.rows, false);
    auto det = [&](const std::vector<std::size_t>& rr, const std::vector<std::size_t>& cc) {
        std::size_t n = rr.size();
        std::vector<Int> a(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(rr[i], cc[j]);
        // Laplace by first row
        std::function<Int(std::vector<Int>, std::size_t)> rec =
            [&](std::vector<Int> mat, std::size_t nn) -> Int {
            if (nn == 1) return mat[0];
            Int s = 0;
            for (std::size_t j = 0; j < nn; ++j) {
                if (mat[j] == 0) continue;
                std::vector<Int> sub((nn - 1) * (nn - 1));
                for (std::size_t i = 1; i < nn; ++i) {
                    std::size_t cj = 0;
                    for (std::size_t jj = 0; jj < nn; ++jj) {
                        if (jj == j) continue;
                        sub[(i - 1) * (nn - 1) + cj] = mat[i * nn + jj];
                        ++cj;
                    }
                }
                Int term = mat[j] * rec(sub, nn - 1);
                s += (j % 2 == 0) ? term : -term;
            }
            return s;
        };
        return rec(a, n);
    };

    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> pick_rows;
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&,
                       const std::vector<std::size_t>&)>
        pick_cols;
    pick_cols = [&](std::size_t from, std::size_t left, std::vector<std::size_t>& cc,
                    const std::vector<std::size_t>& rr) {
        if (left == 0) {
            Int d = det(rr, cc);
            if (d < 0) d = -d;
            g = boost::multiprecision::gcd(g, d);
            return;
        }
        for (std::size_t j = from; j + left <= m.cols; ++j) {
            cc.push_back(j);
            pick_cols(j + 1, left - 1, cc, rr);
            cc.pop_back();
        }
    };
    pick_rows = [&](std::size_t from, std::size_t left, std::vector<std::size_t>& rr) {
        if (left == 0) {
            std::vector<std::size_t> cc;
            pick_cols(0, k, cc, rr);
            return;
        }
        for (std::size_t i = from; i + left <= m.rows; ++i) {
            rr.push_back(i);
            pick_rows(i + 1, left - 1, rr);
            rr.pop_back();
        }
    };
    std::vector<std::size_t> rr;
    pick_rows(0, k, rr);
    return g;
}

}  // namespace

TEST_CASE("smith normal form transforms and divisibility") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> dist(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        ZMat m(r, c);
        for (auto& x : m.a) x = dist(rng);
        SmithResult s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        auto diag = s.diag();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] != 0) {
                REQUIRE(diag[i] != 0);
                CHECK(diag[i + 1] % diag[i] == 0);
            }
        }
        for (std::size_t i = 0; i < s.d.rows; ++i)
            for (std::size_t j = 0; j < s.d.cols; ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
    }
}

TEST_CASE("smith diagonal matches gcd-of-minors oracle") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> dist(-4, 4);
    for (int trial = 0; trial < 12; ++trial) {
        ZMat m(3, 4);
        for (auto& x : m.a) x = dist(rng);
        auto diag = smith_normal_form(m).diag();
        Int prod = 1;
        for (std::size_t k = 1; k <= 3; ++k) {
            Int g = gcd_of_minors(m, k);
            prod *= (k <= diag.size() ? diag[k - 1] : Int(0));
            CHECK(prod == g);
            if (g == 0) break;
        }
    }
}

TEST_CASE("integer kernel and solve") {
    ZMat m = zm({{2, 4, 0}, {1, 2, 0}});
    ZMat k = z_kernel_basis(m);
    CHECK(k.cols == 2);
    CHECK((m * k).is_zero());
    auto sol = z_solve(zm({{2, 0}, {0, 3}}), {Int(4), Int(9)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 3);
    CHECK(!z_solve(zm({{2}}), {Int(3)}).has_value());
}

TEST_CASE("invariant factor normalization") {
    FgAbGroup g = group_from_orders({Int(0), Int(4), Int(6)});
    CHECK(g.rank == 1);
    REQUIRE(g.torsion.size() == 2);
    CHECK(g.torsion[0] == 2);
    CHECK(g.torsion[1] == 12);
    CHECK(g.to_string() == "Z + Z/2 + Z/12");

    FgAbGroup z6 = group_from_orders({Int(2), Int(3)});
    CHECK(z6 == FgAbGroup::cyclic(6));
    CHECK(FgAbGroup::trivial().to_string() == "0");
    CHECK(group_from_orders({}) == FgAbGroup::trivial());
}

TEST_CASE("presented cokernels") {
    // Z^2 / <(2,0),(0,3)> = Z/6 in invariant factors
    FgAbGroup g = group_from_presentation(2, zm({{2, 0}, {0, 3}}));
    CHECK(g == FgAbGroup::cyclic(6));
    // Z^2 / <(1,1)> = Z
    CHECK(group_from_presentation(2, zm({{1}, {1}})) == FgAbGroup::free(1));
}

TEST_CASE("hom checks") {
    AbGens z2(std::vector<Int>{Int(2)});
    AbGens z4(std::vector<Int>{Int(4)});
    ZMat one = zm({{1}});
    ZMat two = zm({{2}});
    CHECK(is_hom(z4, z2, two));   // Z/2 -> Z/4 by 1 |-> 2
    CHECK(!is_hom(z4, z2, one));  // 1 |-> 1 is not well-defined
    CHECK(is_hom(z2, z4, one));   // reduction Z/4 -> Z/2
    AbGens z(std::vector<Int>{Int(0)});
    CHECK(!is_hom(z, z2, one));  // no torsion into Z
}
