#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "plumb/errors.hpp"
#include "plumb/surgery.hpp"

#include <set>

using namespace plumb;

namespace {

const AdmissibleFamily& F = what_family();

LaurentQTZ surgery_weight_w() {
    return LaurentQTZ::monomial(oracle::frac(1, 2), oracle::frac(21, 2), 0, 0) -
           LaurentQTZ::monomial(oracle::frac(1, 2), oracle::frac(23, 2), 0, 0);
}

}  // namespace

TEST_CASE("surgery context") {
    auto ctx = surgery_context(fixtures::trefoil(), -7);
    CHECK(ctx.sf == -6);
    CHECK(ctx.p == -1);
    CHECK(ctx.surgered.size() == 4);
    CHECK(ctx.surgered.m[0] == -7);
    CHECK(ctx.sur->det_abs() == 1);
    // Sigma pairs to zero with the ambient vertices: Sigma = e_0 - M^-1 lambda
    auto M = ctx.surgered.adjacency_matrix();
    for (int i = 1; i < 4; ++i) {
        Rat s = 0;
        for (int j = 0; j < 4; ++j) s += Rat(M(i, j)) * ctx.Sigma[j];
        CHECK(s == 0);
    }
    auto ctx_u = surgery_context(fixtures::unknot(), -2);
    CHECK(ctx_u.p == -1);
}

TEST_CASE("unweighted assembly equals the direct root") {
    for (auto [g, m0] : std::vector<std::pair<MarkedGraph, long>>{
             {fixtures::unknot(), -2}, {fixtures::unknot(), -4}, {fixtures::trefoil(), -7},
             {fixtures::trefoil(), -9}, {fixtures::lens_knot(), -2}}) {
        auto ctx = surgery_context(g, m0);
        for (const auto& t : ctx.sur->enumerate()) {
            auto R = surgery_graded_root(ctx, t, 4);
            CHECK(canonical_form(R) == canonical_form(graded_root(*ctx.sur, t, 4)));
        }
    }
}

TEST_CASE("weighted assembly equals the direct root") {
    for (auto [g, m0] : std::vector<std::pair<MarkedGraph, long>>{
             {fixtures::unknot(), -2}, {fixtures::trefoil(), -7}, {fixtures::lens_knot(), -3}}) {
        auto ctx = surgery_context(g, m0);
        for (const auto& t : ctx.sur->enumerate())
            for (int eps : {1, -1}) {
                auto R = surgery_weighted_graded_root(ctx, t, eps, F, 3);
                CHECK(canonical_form(R) == canonical_form(weighted_graded_root_closed(*ctx.sur, t, eps, F, 3)));
            }
    }
}

TEST_CASE("per-point transform reproduces the surgered term") {
    SeededRng rng(17);
    for (auto [g, m0] : std::vector<std::pair<MarkedGraph, long>>{
             {fixtures::trefoil(), -7}, {fixtures::unknot(), -2}, {fixtures::lens_knot(), -3}}) {
        auto ctx = surgery_context(g, m0);
        auto classes = ctx.sur->enumerate();
        for (int eps : {1, -1}) {
            KnotData kd(g, eps, F);
            ClosedTerms ct(*ctx.sur, eps, F);
            for (int n = 0; n < 70; ++n) {
                const auto& t = classes[rng.below(classes.size())];
                IVec x(ctx.sur->s());
                for (auto& c : x) c = rng.below(7) - 3;
                IVec L = oracle::lattice_point(ctx.sur->M(), t.rep, x);
                IVec K(L.begin() + 1, L.end());
                auto lhs = ct.term(L);
                auto rhs = laplace_transform(ctx, alexander_of_L(ctx, L), eps, knot_weight(kd, {K}), F);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("transform of zero is zero") {
    auto ctx = surgery_context(fixtures::trefoil(), -7);
    CHECK(laplace_transform(ctx, 0, 1, KnotWeight(), F).is_zero());
    CHECK_THROWS_AS(laplace_transform(ctx, 0, 3, KnotWeight(), F), InvalidArgument);
}

TEST_CASE("transformed knot series sum to the surgered series") {
    {
        auto ctx = surgery_context(fixtures::trefoil(), -7);
        auto t = ctx.sur->enumerate()[0];
        for (int eps : {1, -1})
            CHECK(surgery_series(ctx, t, eps, F, 15) == zhat_closed(*ctx.sur, t, eps, F, 15).truncate_q(15));
    }
    {
        auto ctx = surgery_context(fixtures::unknot(), -2);
        auto t = ctx.sur->enumerate()[0];
        auto z = surgery_series(ctx, t, 1, F, 10);
        CHECK(z == zhat_closed(*ctx.sur, t, 1, F, 10).truncate_q(10));
        CHECK(z == oracle::zhat_contour(ctx.surgered, t.rep, 1, 10));
    }
    // lens space ambient: not an integer homology sphere
    auto ctx = surgery_context(fixtures::lens_knot(), -3);
    CHECK_THROWS_AS(surgery_series(ctx, ctx.sur->enumerate()[0], 1, F, 5), NotZHS);
}

TEST_CASE("trefoil -1 surgery: the weight w and the missing edge") {
    auto ctx = surgery_context(fixtures::trefoil(), -7);
    auto t = ctx.sur->enumerate()[0];
    auto R = surgery_weighted_graded_root(ctx, t, 1, F, 6);
    const auto w = surgery_weight_w();
    std::vector<std::pair<Rat, Rat>> carriers;
    for (size_t i = 0; i < R.pieces.size(); ++i)
        for (size_t n = 0; n < R.pieces[i].nodes.size(); ++n)
            if (R.piece_weights[i][n].at_t1() == w)
                carriers.emplace_back(R.a_values[i], R.pieces[i].grading(n) - sigma_shift(ctx, R.a_values[i]));
    REQUIRE(carriers.size() == 2);
    CHECK(carriers[0].second == carriers[1].second);

    // pieces a and a + p meeting at a surgered grading without being identified
    std::set<std::pair<Rat, Rat>> ident, missing;
    for (const auto& id : R.identifications) ident.insert({id.a, id.g});
    for (size_t i = 0; i < R.pieces.size(); ++i)
        for (size_t j = 0; j < R.pieces.size(); ++j) {
            if (R.a_values[j] != R.a_values[i] + ctx.p) continue;
            for (size_t n = 0; n < R.pieces[i].nodes.size(); ++n) {
                Rat gi = R.pieces[i].grading(n) - sigma_shift(ctx, R.a_values[i]);
                for (size_t m = 0; m < R.pieces[j].nodes.size(); ++m) {
                    Rat gj = R.pieces[j].grading(m) - sigma_shift(ctx, R.a_values[j]);
                    if (gi == gj && !ident.count({R.a_values[i], gi})) missing.insert({R.a_values[i], gi});
                }
            }
        }
    CHECK(missing == std::set<std::pair<Rat, Rat>>{{Rat(0), Rat(0)}});
}
