#include <catch2/catch_amalgamated.hpp>

#include "shw/simplicial.hpp"

using namespace shw;

TEST_CASE("standard spaces cell counts") {
    auto d0 = delta(0, 3);
    d0.validate();
    CHECK(d0.ncells(0) == 1);
    CHECK(d0.ncells(1) == 0);

    auto d2 = delta(2, 4);
    d2.validate();
    CHECK(d2.ncells(0) == 3);
    CHECK(d2.ncells(1) == 3);
    CHECK(d2.ncells(2) == 1);

    auto b2 = boundary(2, 4);
    b2.validate();
    CHECK(b2.ncells(2) == 0);
    CHECK(b2.ncells(1) == 3);

    auto s1 = sphere(1, 4);
    s1.validate();
    CHECK(s1.ncells(0) == 1);
    CHECK(s1.ncells(1) == 1);
    // both faces of the 1-cell are the vertex
    CHECK(s1.face[1][0][0] == Simplex{{}, CellId{0, 0}});
    CHECK(s1.face[1][0][1] == Simplex{{}, CellId{0, 0}});

    auto s2 = sphere(2, 4);
    s2.validate();
    CHECK(s2.ncells(0) == 1);
    CHECK(s2.ncells(1) == 0);
    CHECK(s2.ncells(2) == 1);

    sphere(4, 6).validate();
    CHECK_THROWS_AS(sphere(3, 2), DimCapExceeded);
}

TEST_CASE("simplex counts including degeneracies") {
    auto s2 = sphere(2, 5);
    // level m count = 1 + C(m,2)
    CHECK(s2.simplex_count(0) == 1);
    CHECK(s2.simplex_count(1) == 1);
    CHECK(s2.simplex_count(2) == 2);
    CHECK(s2.simplex_count(3) == 4);
    CHECK(s2.simplex_count(4) == 7);
    CHECK(s2.simplices(3).size() == 4);
}

TEST_CASE("face and degeneracy rewriting") {
    auto s2 = sphere(2, 5);
    Simplex c{{}, CellId{2, 0}};
    Simplex s0c = s2.degenerate(c, 0);
    CHECK(s0c.dim() == 3);
    // d_0 s_0 = id
    CHECK(s2.face_of(s0c, 0) == c);
    CHECK(s2.face_of(s0c, 1) == c);
    // d_3 s_0 c = s_0 d_2 c, a degenerate simplex over the vertex
    Simplex f = s2.face_of(s0c, 3);
    CHECK(f.dim() == 2);
    CHECK(f.base == CellId{0, 0});
    // double degeneracy normal form: s_0 s_0 = s_1 s_0
    Simplex v{{}, CellId{0, 0}};
    Simplex ss = s2.degenerate(s2.degenerate(v, 0), 0);
    CHECK(ss.word == std::vector<int>{1, 0});
}

TEST_CASE("product unit law") {
    auto s2 = sphere(2, 4);
    auto pt = delta(0, 4);
    auto p = product(s2, pt);
    p.validate();
    for (int d = 0; d <= 4; ++d) CHECK(p.ncells(d) == s2.ncells(d));
}

TEST_CASE("square Delta1 x Delta1") {
    auto d1 = delta(1, 3);
    auto p = product(d1, d1);
    p.validate();
    CHECK(p.ncells(0) == 4);
    CHECK(p.ncells(1) == 5);
    CHECK(p.ncells(2) == 2);
    CHECK(p.ncells(3) == 0);
}

TEST_CASE("torus cell counts") {
    auto t = torus(4);
    t.validate();
    CHECK(t.ncells(0) == 1);
    CHECK(t.ncells(1) == 3);
    CHECK(t.ncells(2) == 2);
    CHECK(t.ncells(3) == 0);
    // Euler characteristic 0
    CHECK(1 - 3 + 2 == 0);
}

TEST_CASE("product projections are simplicial") {
    auto d1 = delta(1, 3);
    auto s1 = sphere(1, 3);
    auto pr = product_with_decomposition(d1, s1);
    pr.space.validate();
    for (int m = 1; m <= 3; ++m)
        for (std::size_t c = 0; c < pr.decomposition[m].size(); ++c)
            for (int i = 0; i <= m; ++i) {
                Simplex f = pr.space.face_of(Simplex{{}, CellId{m, static_cast<int>(c)}}, i);
                // project: apply the face in each factor and compare
                const auto& key = pr.decomposition[m][c];
                Simplex fa = d1.face_of(key.a, i);
                Simplex fb = s1.face_of(key.b, i);
                // reconstruct the projected pair from the face simplex
                const auto& fkey = pr.decomposition[f.base.dim][f.base.idx];
                Simplex pa = fkey.a, pb = fkey.b;
                for (auto w = f.word.rbegin(); w != f.word.rend(); ++w) {
                    pa = d1.degenerate(pa, *w);
                    pb = s1.degenerate(pb, *w);
                }
                CHECK(pa == fa);
                CHECK(pb == fb);
            }
}

TEST_CASE("classifying space counts") {
    auto bt = classifying(GroupTable::trivial(), 5);
    bt.validate();
    for (int m = 1; m <= 5; ++m) CHECK(bt.ncells(m) == 0);
    CHECK(bt.simplex_count(4) == 1);

    auto b2 = classifying(GroupTable::cyclic(2), 6);
    b2.validate();
    for (int m = 0; m <= 6; ++m) {
        CHECK(b2.ncells(m) == 1);
        CHECK(b2.simplex_count(m) == Int(1) << m);  // |G|^m
    }

    auto b3 = classifying(GroupTable::cyclic(3), 4);
    b3.validate();
    CHECK(b3.simplex_count(4) == 81);  // 3^4
    CHECK(b3.ncells(4) == 16);         // (3-1)^4
}

TEST_CASE("classifying space is reduced with correct pi_1") {
    for (int n : {2, 3, 4, 6}) {
        auto b = classifying(GroupTable::cyclic(n), 3);
        CHECK(b.ncells(0) == 1);
        CHECK(edge_path_group_ab(b) == FgAbGroup::cyclic(n));
    }
    auto v4 = GroupTable::cyclic(2).direct_product(GroupTable::cyclic(2));
    CHECK(edge_path_group_ab(classifying(v4, 3)) ==
          FgAbGroup(0, {Int(2), Int(2)}));
    CHECK(v4.as_fg_ab() == FgAbGroup(0, {Int(2), Int(2)}));
    CHECK(GroupTable::cyclic(6).as_fg_ab() == FgAbGroup::cyclic(6));
}

TEST_CASE("component count") {
    auto b1 = boundary(1, 2);  // two points, no edges
    CHECK(b1.component_count() == 2);
    CHECK(delta(3, 3).component_count() == 1);
}

TEST_CASE("group table validation") {
    GroupTable bad;
    bad.order = 2;
    bad.mult = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(classifying(bad, 2), InputError);
    GroupTable big;
    big.order = 65;
    CHECK_THROWS_AS(big.validate(), InputError);
}

TEST_CASE("truncated spaces refuse levels above the cap") {
    auto b2 = classifying(GroupTable::cyclic(2), 3);
    CHECK_THROWS_AS(b2.simplices(4), DimCapExceeded);
    auto s2 = sphere(2, 3);
    CHECK(s2.simplices(5).size() == 11);  // 1 + C(5,2), no cap for complete data
}
