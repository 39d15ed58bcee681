#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "plumb/roots.hpp"
#include "plumb/spinc.hpp"

using namespace plumb;

namespace {

void check_enumeration(const PlumbingGraph& g) {
    SpincSpace sp(g);
    IMat M = g.adjacency_matrix();
    auto all = sp.enumerate();
    CHECK(Int(static_cast<long>(all.size())) == abs(oracle::det(M)));
    for (size_t i = 0; i < all.size(); ++i) {
        CHECK(sp.is_characteristic(all[i].rep));
        CHECK(sp.make(all[i].rep) == all[i]);
        for (size_t j = i + 1; j < all.size() && j < i + 40; ++j)
            CHECK_FALSE(oracle::same_coset(M, all[i].rep, all[j].rep));
    }
}

}  // namespace

TEST_CASE("enumeration: one canonical representative per coset") {
    check_enumeration(fixtures::lens(5));
    check_enumeration(fixtures::two_three());
    check_enumeration(fixtures::e8());
    check_enumeration(fixtures::sigma237());
    SeededRng rng(21);
    for (int t = 0; t < 10; ++t) check_enumeration(fixtures::random_tree(1 + rng.below(4), rng));
}

TEST_CASE("the four-legged star has 769 classes") {
    SpincSpace sp(fixtures::star_7_11_10_3());
    CHECK(sp.det_abs() == 769);
    CHECK(sp.enumerate().size() == 769);
    auto inv = sp.cosets().h1_invariants();
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == 769);
}

TEST_CASE("make reduces any characteristic vector in the coset") {
    auto g = fixtures::two_three();
    SpincSpace sp(g);
    IMat M = g.adjacency_matrix();
    SeededRng rng(22);
    for (int t = 0; t < 30; ++t) {
        IVec k{2 * (rng.below(9) - 4), 2 * (rng.below(9) - 4) + 1};
        IVec x{rng.below(7) - 3, rng.below(7) - 3};
        CHECK(sp.make(k) == sp.make(oracle::lattice_point(M, k, x)));
    }
    CHECK_THROWS_AS(sp.make({1, 1}), InvalidArgument);  // wrong parity at vertex 0
}

TEST_CASE("conjugation and the H1 action") {
    SpincSpace sp(fixtures::lens(7));
    auto all = sp.enumerate();
    for (const auto& k : all) {
        CHECK(sp.conjugate(sp.conjugate(k)) == k);
        std::set<SpincClass> orbit;
        for (long x = 0; x < 7; ++x) orbit.insert(sp.h1_action(k, {x}));
        CHECK(orbit.size() == 7);  // free and transitive
        CHECK(sp.h1_action(k, {7}) == sp.h1_action(k, {0}));
    }
}

TEST_CASE("psi is a bijection from delta cosets") {
    SpincSpace sp(fixtures::sigma237());
    SpincSpace lp(fixtures::two_three());
    for (const auto* s : {&sp, &lp})
        for (const auto& k : s->enumerate()) CHECK(s->psi(s->psi_inverse(k)) == k);
}

TEST_CASE("beta is a bijection preserving the top grading") {
    SeededRng rng(23);
    for (int t = 0; t < 12; ++t) {
        auto g = fixtures::random_tree(1 + rng.below(3), rng);
        SpincSpace sp(g);
        std::vector<NeumannMove> moves{{MoveKind::B, MoveDir::Up, rng.below(g.size()), -1},
                                       {MoveKind::C, MoveDir::Up, -1, -1}};
        if (!g.edges.empty()) moves.push_back({MoveKind::A, MoveDir::Up, g.edges[0].first, g.edges[0].second});
        for (const auto& mv : moves) {
            auto res = apply_neumann(g, mv);
            SpincSpace sp2(res.graph);
            std::set<SpincClass> image;
            for (const auto& k : sp.enumerate()) {
                auto k2 = beta_map(g, mv, k);
                image.insert(k2);
                CHECK(max_hU(sp, k) == max_hU(sp2, k2));
                // blowing the new vertex back down returns the class
                NeumannMove down{mv.kind, MoveDir::Down, g.size(), -1};
                CHECK(beta_map(res.graph, down, k2) == k);
                for (int sign : {1, -1}) {
                    IVec lift = beta_pm_lift(g, mv, k.rep, sign);
                    CHECK(sp2.make(lift) == k2);
                    CHECK(oracle::hU(res.graph.adjacency_matrix(), lift) == oracle::hU(g.adjacency_matrix(), k.rep));
                }
            }
            CHECK(image.size() == sp.enumerate().size());
        }
    }
}

TEST_CASE("alpha commutes with psi") {
    auto g = fixtures::two_three();
    SpincSpace sp(g);
    NeumannMove mv{MoveKind::B, MoveDir::Up, 1, -1};
    auto res = apply_neumann(g, mv);
    SpincSpace sp2(res.graph);
    for (const auto& k : sp.enumerate()) {
        auto a = sp.psi_inverse(k);
        CHECK(sp2.psi(alpha_map(g, mv, a)) == beta_map(g, mv, k));
    }
}

TEST_CASE("relative classes and the maps w_n, p_n") {
    auto g = fixtures::trefoil();
    RelSpincSpace rs(g);
    IVec b = rs.delta_hat();
    auto cls = rs.make(b);
    CHECK(rs.conjugate(rs.conjugate(cls)) == cls);
    for (long n : {1L, -1L, 3L}) {
        auto w = rs.w_n(cls, n);
        auto wbar = rs.w_n(rs.conjugate(cls), -n);
        CHECK(rs.ambient().conjugate(w) == wbar);
    }
    CHECK_THROWS_AS(rs.w_n(cls, 2), InvalidArgument);
    CHECK_THROWS_AS(rs.p_n(cls, 0), InvalidArgument);
    // moves carry relative classes compatibly with w_1
    NeumannMove mv{MoveKind::B0, MoveDir::Up, 0, -1};
    auto res = apply_neumann(g, mv);
    RelSpincSpace rs2(res.graph);
    auto moved = alpha_rel(g, mv, cls);
    CHECK(rs2.w_n(moved, 1) == beta_map(g, mv, rs.w_n(cls, 1)));
}
