#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "plumb/roots.hpp"

using namespace plumb;

namespace {

// box radius large enough that the superlevel set stays inside (checked)
oracle::BoxLevel box(const SpincSpace& sp, const SpincClass& k, const Rat& h, long B = 5) {
    auto r = oracle::box_superlevel(sp.M(), k.rep, h, B);
    REQUIRE_FALSE(r.touches_boundary);
    return r;
}

void compare_with_box(const PlumbingGraph& g, int depth) {
    SpincSpace sp(g);
    for (const auto& k : sp.enumerate()) {
        Rat top = max_hU(sp, k);
        auto root = graded_root(sp, k, depth);
        CHECK(root.top == top);
        for (int lv = 0; lv <= depth; ++lv) {
            Rat h = top - 2 * lv;
            auto cloud = enumerate_superlevel(sp, k, h);
            auto ref = box(sp, k, h);
            std::set<IVec> pts(cloud.points.begin(), cloud.points.end());
            CHECK(pts == ref.points);
            CHECK(cloud.ncomp == ref.components);
            CHECK(static_cast<int>(root.levels[lv].size()) == ref.components);
        }
    }
}

}  // namespace

TEST_CASE("h_U, h_V and the Alexander grading") {
    auto g = fixtures::trefoil();
    SpincSpace amb(g.ambient());
    IVec lam = g.lambda();
    SeededRng rng(31);
    for (int t = 0; t < 20; ++t) {
        IVec K{2 * (rng.below(5) - 2) + 1, 2 * (rng.below(5) - 2), 2 * (rng.below(5) - 2) + 1};
        CHECK(h_U(amb, K) == oracle::hU(amb.M(), K));
        IVec K2 = add(K, scale(2, lam));
        CHECK(h_V(amb, lam, K) == oracle::hU(amb.M(), K2));
        CHECK(alexander(amb, lam, K) == (h_U(amb, K) - h_V(amb, lam, K)) / 2);
    }
}

TEST_CASE("ellipsoid enumeration matches a box scan") {
    PlumbingGraph g({-3, -2, -2, -2}, {{0, 1}, {0, 2}, {0, 3}});
    SpincSpace sp(g);
    EllipsoidEnumerator en(sp.M());
    auto k = sp.enumerate()[0];
    QVec c(g.size(), Rat(0));
    c[0] = frac(1, 2);
    for (long R : {0L, 3L, 10L, 25L}) {
        auto pts = en.points(k.rep, c, Rat(R));
        std::set<IVec> got(pts.begin(), pts.end());
        std::set<IVec> want;
        IVec centre = oracle::box_centre(sp.M(), k.rep);
        oracle::InverseForm f(sp.M());
        oracle::for_box(g.size(), 7, [&](const IVec& y) {
            IVec x = add(y, centre);
            IVec K = oracle::lattice_point(sp.M(), k.rep, x);
            // (K - c)^T (-M^-1) (K - c) with c rational: expand
            Rat kc = 0, cc = 0;
            for (int i = 0; i < g.size(); ++i)
                for (int j = 0; j < g.size(); ++j) {
                    kc += f.inv[i][j] * K[i] * c[j];
                    cc += f.inv[i][j] * c[i] * c[j];
                }
            Rat val = -(f.pair(K, K) - 2 * kc + cc);
            if (val <= R) {
                want.insert(K);
                for (long t : y) REQUIRE(std::labs(t) < 7);
            }
        });
        CHECK(got == want);
    }
}

TEST_CASE("superlevel sets and graded roots match the box oracle") {
    compare_with_box(fixtures::lens(3), 4);
    compare_with_box(fixtures::two_three(), 4);
    compare_with_box(PlumbingGraph({-3, -2, -2, -2}, {{0, 1}, {0, 2}, {0, 3}}), 2);
    compare_with_box(PlumbingGraph({-2, -2, -2}, {{0, 1}, {1, 2}}), 3);
}

TEST_CASE("grading parity is enforced") {
    SpincSpace sp(fixtures::two_three());
    auto k = sp.enumerate()[0];
    Rat top = max_hU(sp, k);
    CHECK_THROWS_AS(enumerate_superlevel(sp, k, top - 1), GradingParity);
}

TEST_CASE("known roots") {
    // S^3: a single stem with top 0
    SpincSpace s3(fixtures::s3());
    auto r = graded_root(s3, s3.enumerate()[0], 5);
    CHECK(r.top == 0);
    for (const auto& lv : r.levels) CHECK(lv.size() == 1);
    CHECK(r.stabilized());
    // E8: K = 0 is the maximum, h_U = 8/4
    SpincSpace e8(fixtures::e8());
    CHECK(max_hU(e8, e8.enumerate()[0]) == 2);
    // Sigma(2,3,7): two leaves at the top that meet one level below
    SpincSpace s237(fixtures::sigma237());
    auto r237 = graded_root(s237, s237.enumerate()[0], 3);
    CHECK(r237.top == 0);
    CHECK(r237.levels[0].size() == 2);
    CHECK(r237.levels[1].size() == 1);
}

TEST_CASE("unknot bigraded root is the full grid") {
    auto g = fixtures::unknot();
    SpincSpace amb(g.ambient());
    auto br = bigraded_root(g, amb.enumerate()[0], 4);
    CHECK(br.rootU.top == 0);
    CHECK(br.rootV.top == 0);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) CHECK(br.cell[i][j].size() == 1);
}

TEST_CASE("trefoil bigraded root misses only the corner") {
    auto g = fixtures::trefoil();
    SpincSpace amb(g.ambient());
    auto br = bigraded_root(g, amb.enumerate()[0], 4);
    CHECK(br.cell[0][0].empty());
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j)
            if (i || j) CHECK(br.cell[i][j].size() == 1);
    // the collapsed roots are the two ambient roots once the other window is deep enough
    auto wu = bigraded_root_window(g, amb.enumerate()[0], Rat(-4), Rat(-24));
    CHECK(canonical_form(collapse_U(wu)) == canonical_form(wu.rootU));
    auto wv = bigraded_root_window(g, amb.enumerate()[0], Rat(-24), Rat(-4));
    CHECK(canonical_form(collapse_V(wv)) == canonical_form(wv.rootV));
}

TEST_CASE("canonical forms ignore node order and automorphisms") {
    PlumbingGraph g({-2, -3, -2}, {{0, 1}, {1, 2}});
    SpincSpace sp(g);
    auto autos = graph_automorphisms(g);
    REQUIRE(autos.size() == 2);
    for (const auto& k : sp.enumerate()) {
        auto k2 = apply_automorphism(sp, k, autos[1]);
        CHECK(canonical_form(graded_root(sp, k, 3)) == canonical_form(graded_root(sp, k2, 3)));
    }
}

TEST_CASE("DOT export ranks nodes by grading") {
    SpincSpace sp(fixtures::sigma237());
    auto r = graded_root(sp, sp.enumerate()[0], 2);
    auto dot = to_dot(r);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
    auto g = fixtures::trefoil();
    SpincSpace amb(g.ambient());
    auto bd = to_dot(bigraded_root(g, amb.enumerate()[0], 2));
    CHECK(bd.find("style=dashed") != std::string::npos);
}
