#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "plumb/arith.hpp"

using namespace plumb;

namespace {

IMat random_matrix(int n, SeededRng& rng, int span) {
    IMat m(n);
    for (auto& x : m.a) x = rng.below(2 * span + 1) - span;
    return m;
}

}  // namespace

TEST_CASE("determinant agrees with the permutation expansion") {
    SeededRng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng.below(5);
        IMat m = random_matrix(n, rng, 6);
        CHECK(determinant(m) == oracle::det(m));
    }
}

TEST_CASE("inverse times matrix is the identity") {
    SeededRng rng(12);
    int done = 0;
    while (done < 30) {
        int n = 1 + rng.below(5);
        IMat m = random_matrix(n, rng, 5);
        if (oracle::det(m) == 0) continue;
        ++done;
        QMat inv = inverse(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat s = 0;
                for (int k = 0; k < n; ++k) s += inv(i, k) * m(k, j);
                CHECK(s == (i == j ? 1 : 0));
            }
        IVec v(n);
        for (auto& x : v) x = rng.below(9) - 4;
        CHECK(quad(inv, v) == oracle::inv_pair(m, v, v));
    }
}

TEST_CASE("singular matrices are rejected") {
    IMat m(2);
    m(0, 0) = 1, m(0, 1) = 2, m(1, 0) = 2, m(1, 1) = 4;
    CHECK_THROWS_AS(inverse(m), InvalidArgument);
}

TEST_CASE("leading minors certify negative definiteness") {
    CHECK(is_negative_definite(fixtures::e8().adjacency_matrix()));
    CHECK(is_negative_definite(fixtures::sigma237().adjacency_matrix()));
    CHECK_FALSE(is_negative_definite(PlumbingGraph({-1, -1}, {{0, 1}}).adjacency_matrix()));
    CHECK_FALSE(is_negative_definite(PlumbingGraph({1}, {}).adjacency_matrix()));
    auto lm = leading_minors(fixtures::two_three().adjacency_matrix());
    REQUIRE(lm.size() == 2);
    CHECK(lm[0] == -2);
    CHECK(lm[1] == 5);
}

TEST_CASE("column HNF reduction is a canonical residue") {
    SeededRng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + rng.below(4);
        IMat m = random_matrix(n, rng, 4);
        if (oracle::det(m) == 0) continue;
        std::vector<IVec> gens;
        for (int j = 0; j < n; ++j) {
            IVec c(n);
            for (int i = 0; i < n; ++i) c[i] = 2 * m(i, j);
            gens.push_back(c);
        }
        auto h = column_hnf(n, gens);
        IVec v(n), x(n);
        for (auto& t : v) t = rng.below(21) - 10;
        for (auto& t : x) t = rng.below(7) - 3;
        IVec w = v;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += 2 * m(i, j) * x[j];
        CHECK(h.reduce(v) == h.reduce(w));
        CHECK(h.contains(sub(v, w)));
        CHECK(oracle::same_coset(m, v, h.reduce(v)));
    }
}

TEST_CASE("Smith invariants multiply to |det|") {
    SeededRng rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + rng.below(4);
        IMat m = random_matrix(n, rng, 5);
        Int d = oracle::det(m);
        if (d == 0) continue;
        Int p = 1;
        auto inv = smith_invariants(m);
        for (size_t i = 0; i < inv.size(); ++i) {
            p *= inv[i];
            if (i + 1 < inv.size()) CHECK(inv[i + 1] % inv[i] == 0);
        }
        CHECK(p == abs(d));
    }
}

TEST_CASE("rational strings round-trip") {
    for (const char* s : {"0", "1", "-1", "21/2", "-3/4", "7/3"}) CHECK(to_string(parse_rat(s)) == s);
    CHECK(parse_rat("4/8") == frac(1, 2));
    CHECK(to_string(frac(6, -4)) == "-3/2");
    CHECK(floor_int(frac(-3, 2)) == -2);
    CHECK(ceil_int(frac(-3, 2)) == -1);
    CHECK(is_integer(frac(4, 2)));
    CHECK_FALSE(is_integer(frac(1, 3)));
}
