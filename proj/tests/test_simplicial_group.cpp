#include <catch2/catch_amalgamated.hpp>

#include "shw/simplicial_group.hpp"

using namespace shw;

namespace {
Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}
}  // namespace

TEST_CASE("surjection counts") {
    CHECK(surjections(3, 1).size() == 3);
    CHECK(surjections(4, 2).size() == 6);
    CHECK(surjections(2, 3).empty());
    CHECK(surjections(3, 0).size() == 1);
}

TEST_CASE("eilenberg_maclane levels") {
    auto k0 = eilenberg_maclane(FgAbGroup::free(1), 0, 4);
    k0.validate();
    for (int m = 0; m <= 4; ++m) CHECK(k0.level[m].group() == FgAbGroup::free(1));

    auto k1 = eilenberg_maclane(FgAbGroup::free(1), 1, 5);
    k1.validate();
    for (int m = 0; m <= 5; ++m) CHECK(k1.level[m].size() == static_cast<std::size_t>(m));

    auto k2 = eilenberg_maclane(FgAbGroup::cyclic(2), 2, 5);
    k2.validate();
    for (int m = 0; m <= 5; ++m) {
        CHECK(k2.level[m].size() == binom(m, 2).convert_to<std::size_t>());
        for (const Int& o : k2.level[m].orders) CHECK(o == 2);
    }
}

TEST_CASE("moore homotopy of EM objects") {
    auto cz = eilenberg_maclane(FgAbGroup::free(1), 0, 3);
    auto pi = homotopy_groups_moore(cz, 2);
    CHECK(pi[0] == FgAbGroup::free(1));
    CHECK(pi[1] == FgAbGroup::trivial());
    CHECK(pi[2] == FgAbGroup::trivial());

    auto k26 = eilenberg_maclane(FgAbGroup::cyclic(6), 2, 5);
    auto pi2 = homotopy_groups_moore(k26, 4);
    CHECK(pi2[0] == FgAbGroup::trivial());
    CHECK(pi2[1] == FgAbGroup::trivial());
    CHECK(pi2[2] == FgAbGroup::cyclic(6));
    CHECK(pi2[3] == FgAbGroup::trivial());
    CHECK(pi2[4] == FgAbGroup::trivial());

    auto k3 = eilenberg_maclane(FgAbGroup::free(1), 3, 5);
    auto pi3 = homotopy_groups_moore(k3, 4);
    CHECK(pi3[3] == FgAbGroup::free(1));
    CHECK(pi3[2] == FgAbGroup::trivial());
    CHECK(pi3[4] == FgAbGroup::trivial());

    CHECK_THROWS_AS(homotopy_groups_moore(k3, 5), RangeExceeded);
}

TEST_CASE("wbar_ab levels match the hockey-stick identity") {
    // levels of Wbar(Gamma(Z[1])) equal levels of Gamma(Z[2])
    auto k1 = eilenberg_maclane(FgAbGroup::free(1), 1, 5);
    auto w = wbar_ab(k1);
    w.validate();
    auto k2 = eilenberg_maclane(FgAbGroup::free(1), 2, 6);
    for (int m = 0; m <= 6; ++m) CHECK(w.level[m].size() == k2.level[m].size());
}

TEST_CASE("wbar_ab delooping shifts homotopy") {
    for (auto a : {FgAbGroup::free(1), FgAbGroup::cyclic(4)}) {
        auto k1 = eilenberg_maclane(a, 1, 4);
        auto w = wbar_ab(k1);
        w.validate();
        auto pi = homotopy_groups_moore(w, 3);
        CHECK(pi[0] == FgAbGroup::trivial());
        CHECK(pi[1] == FgAbGroup::trivial());
        CHECK(pi[2] == a);
        CHECK(pi[3] == FgAbGroup::trivial());
    }
    // and Wbar of a constant group gives a K(A,1)
    auto c = eilenberg_maclane(FgAbGroup::cyclic(3), 0, 4);
    auto w = wbar_ab(c);
    auto pi = homotopy_groups_moore(w, 3);
    CHECK(pi[1] == FgAbGroup::cyclic(3));
    CHECK(pi[2] == FgAbGroup::trivial());
}

TEST_CASE("kgm with trivial G factor") {
    // K(trivial, M, 1) = classifying(M)
    auto g = GroupTable::trivial();
    auto m = FgAbGroup::cyclic(2);
    auto x = kgm(g, m, trivial_action(g, m), 1, 3);
    x.validate();
    auto b = classifying(GroupTable::cyclic(2), 3);
    for (int d = 0; d <= 3; ++d) CHECK(x.ncells(d) == b.ncells(d));
}

TEST_CASE("kgm trivial action is a direct product") {
    auto g = GroupTable::cyclic(2);
    auto m = FgAbGroup::cyclic(2);
    auto x = kgm(g, m, trivial_action(g, m), 1, 3);
    x.validate();
    auto b = classifying(GroupTable::cyclic(2).direct_product(GroupTable::cyclic(2)), 3);
    for (int d = 0; d <= 3; ++d) CHECK(x.ncells(d) == b.ncells(d));
    CHECK(edge_path_group_ab(x) == FgAbGroup(0, {Int(2), Int(2)}));
}

TEST_CASE("kgm with inversion action") {
    auto g = GroupTable::cyclic(2);
    auto m = FgAbGroup::cyclic(3);
    std::vector<ZMat> action(2, ZMat::identity(1));
    action[1](0, 0) = -1;  // inversion
    auto x = kgm(g, m, action, 2, 3);
    x.validate();
    CHECK(x.ncells(0) == 1);
    // W-bar level 1 = H_0 = G, so one nondegenerate 1-cell
    CHECK(x.ncells(1) == 1);
    CHECK(edge_path_group_ab(x) == FgAbGroup::cyclic(2));

    // K(M,1) factor appears at level 2: |Wbar_2| = |H_1||H_0| = (2*3)*2
    CHECK(x.simplex_count(2) == 12);
}

TEST_CASE("kgm rejects non-automorphism actions") {
    auto g = GroupTable::cyclic(2);
    auto m = FgAbGroup::cyclic(4);
    std::vector<ZMat> action(2, ZMat::identity(1));
    action[1](0, 0) = 2;  // not invertible on Z/4
    CHECK_THROWS_AS(kgm(g, m, action, 2, 3), InvalidAction);
}

TEST_CASE("kgm needs finite coefficients for the cell model") {
    auto g = GroupTable::trivial();
    auto m = FgAbGroup::free(1);
    CHECK_THROWS_AS(kgm(g, m, trivial_action(g, m), 2, 3), UnsupportedError);
}
