#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "plumb/errors.hpp"
#include "plumb/weights.hpp"

using namespace plumb;

namespace {

// smallest depth whose window reaches `need` and ends in one node
template <class Build>
auto stable_root(const Rat& top, const Rat& need, Build build) {
    Rat span = (top - need) / 2;
    Int c = (span.get_num() + span.get_den() - 1) / span.get_den();
    int depth = static_cast<int>(c.get_si());
    if (depth < 1) depth = 1;
    for (;; ++depth) {
        auto r = build(depth);
        if (r.root.levels.back().size() == 1) return r;
        REQUIRE(depth < 60);
    }
}

}  // namespace

TEST_CASE("principal-value family satisfies the axioms") {
    auto rep = check_axioms(what_family(), 8, 20);
    CHECK(rep.ad1);
    CHECK(rep.ad2);
    CHECK(rep.ad3);
    CHECK(rep.forced);
}

TEST_CASE("family values against series convolution") {
    for (int n = 0; n <= 8; ++n)
        for (long i = -20; i <= 20; ++i) {
            INFO("n=" << n << " i=" << i);
            CHECK(what_value(n, i) == oracle::what(n, i));
            CHECK(what_family().W(n, i) == oracle::what(n, i));
        }
    // the low rows are polynomial
    CHECK(what_value(1, 1) == -1);
    CHECK(what_value(1, -1) == 1);
    CHECK(what_value(0, 2) == 1);
    CHECK(what_value(0, 0) == -2);
    CHECK(what_value(3, 1) == oracle::frac(1, 2));
    CHECK(what_value(3, -1) == oracle::frac(-1, 2));
}

TEST_CASE("table families") {
    // the principal-value family restricted to a window is admissible there
    std::string text = R"({"name":"pv3","ad3":true,"radius":3,"values":{"3":{"1":"1/2","-1":"-1/2","3":"1/2","-3":"-1/2"}}})";
    auto f = TableFamily::from_json_text(text);
    CHECK(f->tag() == "pv3");
    CHECK(f->W(3, 3) == oracle::frac(1, 2));
    CHECK(f->W(3, 5) == 0);
    CHECK(f->W(1, 1) == -1);
    CHECK_THROWS_AS(TableFamily::from_json_text(R"({"radius":1,"values":{"3":{"1":"1"}}, "ad3":true})"), AD3Violated);
    CHECK_THROWS_AS(TableFamily::from_json_text(R"({"radius":2,"values":{"2":{"0":"1"}}})"), SchemaError);
    CHECK_THROWS_AS(TableFamily::from_json_text("not json"), SchemaError);
    CHECK_THROWS_AS(TableFamily::from_json_text(R"({"radius":1,"values":{"3":{"4":"1"}}})"), SchemaError);
    // a family without AD3 is refused by the conjugation check
    auto g = TableFamily::from_json_text(R"({"radius":1,"values":{"3":{"1":"1"}}})");
    CHECK(check_axioms(*g, 3, 1).ad2);
    CHECK_FALSE(check_axioms(*g, 3, 1).ad3);
    SpincSpace sp(fixtures::two_three());
    CHECK_THROWS_AS(conjugation_symmetry_check(sp, sp.enumerate()[0], 1, *g, 2), AD3Violated);
}

TEST_CASE("closed series against the contour formula") {
    // the box scan is slow on elongated forms, so Sigma(2,3,7) gets a lower bound
    std::vector<std::pair<PlumbingGraph, long>> cases{
        {fixtures::s3(), 8}, {fixtures::lens(3), 8}, {fixtures::two_three(), 8}, {fixtures::sigma237(), 4}};
    for (const auto& [g, q_max] : cases) {
        SpincSpace sp(g);
        int nonzero = 0;
        for (const auto& k : sp.enumerate())
            for (int eps : {1, -1}) {
                auto a = zhat_closed(sp, k, eps, what_family(), q_max).truncate_q(q_max);
                auto b = oracle::zhat_contour(g, k.rep, eps, q_max);
                INFO(g.size() << " " << a.to_string() << " vs " << b.to_string());
                nonzero += !b.is_zero();
                CHECK(a == b);
            }
        CHECK(nonzero > 0);
    }
}

TEST_CASE("closed series does not depend on eps") {
    for (auto g : {fixtures::lens(5), fixtures::two_three(), fixtures::sigma237(), fixtures::e8()}) {
        SpincSpace sp(g);
        for (const auto& k : sp.enumerate())
            CHECK(zhat_closed(sp, k, 1, what_family(), 12) == zhat_closed(sp, k, -1, what_family(), 12));
    }
}

TEST_CASE("knot terms against the integral form") {
    SeededRng rng(5);
    for (auto g : {fixtures::unknot(), fixtures::trefoil(), fixtures::unknot_a0(), fixtures::lens_knot()}) {
        SpincSpace amb(g.ambient());
        for (int eps : {1, -1}) {
            KnotData kd(g, eps, what_family());
            for (int t = 0; t < 40; ++t) {
                auto k = amb.enumerate()[rng.below(amb.enumerate().size())];
                IVec x(amb.s());
                for (auto& c : x) c = rng.below(5) - 2;
                IVec K = oracle::lattice_point(amb.M(), k.rep, x);
                auto got = kd.term(K);
                auto want = oracle::knot_integral(g, K, eps);
                CHECK(got.W == want.W);
                if (want.W == 0) continue;
                CHECK(got.xi == want.q);
                CHECK(got.zeta == want.z);
                CHECK(got.theta == want.t);
            }
        }
    }
}

TEST_CASE("closed weights stabilize to the series") {
    for (auto g : {fixtures::two_three(), fixtures::lens(3), fixtures::sigma237()}) {
        SpincSpace sp(g);
        auto k = sp.enumerate()[0];
        Rat need = required_bottom_closed(sp, k, 1, what_family(), 10);
        auto r = stable_root(max_hU(sp, k), need,
                             [&](int d) { return weighted_graded_root_closed(sp, k, 1, what_family(), d); });
        CHECK(stabilization_check(sp, k, r, what_family(), 10));
        // a one-level window is too shallow
        auto shallow = weighted_graded_root_closed(sp, k, 1, what_family(), 0);
        if (shallow.root.level_grading(0) > need)
            CHECK_THROWS_AS(stabilization_check(sp, k, shallow, what_family(), 10), InsufficientDepth);
    }
}

TEST_CASE("knot weights stabilize to the series") {
    for (auto g : {fixtures::unknot(), fixtures::trefoil()}) {
        SpincSpace amb(g.ambient());
        auto k = amb.enumerate()[0];
        KnotData kd(g, 1, what_family());
        Rat need = required_bottom_knot(kd, k, 10);
        auto r = stable_root(max_hU(amb, k), need,
                             [&](int d) { return weighted_graded_root_knot(g, k, 1, what_family(), d); });
        CHECK(stabilization_check(kd, k, r, 10));
    }
}

TEST_CASE("conjugation symmetry") {
    for (auto g : {fixtures::two_three(), fixtures::lens(5), fixtures::sigma237()}) {
        SpincSpace sp(g);
        for (const auto& k : sp.enumerate())
            for (int eps : {1, -1}) CHECK(conjugation_symmetry_check(sp, k, eps, what_family(), 3));
    }
    for (auto g : {fixtures::unknot(), fixtures::trefoil(), fixtures::lens_knot()}) {
        SpincSpace amb(g.ambient());
        for (const auto& k : amb.enumerate())
            for (int eps : {1, -1}) CHECK(conjugation_symmetry_check(g, k, eps, what_family(), 3));
    }
}

TEST_CASE("thread count does not change results") {
    SpincSpace sp(fixtures::sigma237());
    auto k = sp.enumerate()[0];
    set_num_threads(1);
    auto a = canonical_form(weighted_graded_root_closed(sp, k, 1, what_family(), 4));
    set_num_threads(4);
    auto b = canonical_form(weighted_graded_root_closed(sp, k, 1, what_family(), 4));
    set_num_threads(1);
    CHECK(a == b);
}
