#pragma once

// Graphs shared by the tests and the acceptance runner.

#include <cstdint>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/verify.hpp"

namespace fixtures {

using plumb::MarkedGraph;
using plumb::PlumbingGraph;

// single (-1) vertex: S^3
inline PlumbingGraph s3() { return PlumbingGraph({-1}, {}); }
// lens space L(p, 1)
inline PlumbingGraph lens(long p) { return PlumbingGraph({-p}, {}); }
inline PlumbingGraph two_three() { return PlumbingGraph({-2, -3}, {{0, 1}}); }
// E8, the Poincare sphere
inline PlumbingGraph e8() {
    return PlumbingGraph({-2, -2, -2, -2, -2, -2, -2, -2},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}});
}
// star with centre -1 and legs -2, -3, -7: Sigma(2,3,7)
inline PlumbingGraph sigma237() { return PlumbingGraph({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}}); }
// the star with centre -1 and legs -7, -11, -10, -3
inline PlumbingGraph star_7_11_10_3() {
    return PlumbingGraph({-1, -7, -11, -10, -3}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

inline MarkedGraph unknot() { return MarkedGraph({0, -1}, {{0, 1}}); }
inline MarkedGraph trefoil() { return MarkedGraph({0, -1, -2, -3}, {{0, 1}, {1, 2}, {1, 3}}); }
// unknot presentations related by A0 and B0 moves
inline MarkedGraph unknot_a0() { return MarkedGraph({0, -2, -1}, {{0, 2}, {1, 2}}); }
inline MarkedGraph unknot_b0() { return MarkedGraph({0, -1, -1}, {{0, 1}, {0, 2}}); }
// the (2,5) torus knot
inline MarkedGraph torus25() { return MarkedGraph({0, -1, -2, -5}, {{0, 1}, {1, 2}, {1, 3}}); }
// a knot in a lens space
inline MarkedGraph lens_knot() { return MarkedGraph({0, -3, -2}, {{0, 1}, {1, 2}}); }

// random negative definite tree on n vertices: diagonally dominant framings
inline PlumbingGraph random_tree(int n, plumb::SeededRng& rng) {
    std::vector<plumb::Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(rng.below(v), v);
    std::vector<long> deg(n, 0);
    for (auto [a, b] : e) ++deg[a], ++deg[b];
    std::vector<long> m(n);
    for (int v = 0; v < n; ++v) m[v] = -std::max<long>(2, deg[v]) - rng.below(3);
    // make the first vertex strictly dominant so the form is definite
    if (m[0] == -deg[0]) --m[0];
    return PlumbingGraph(m, e);
}

inline MarkedGraph random_marked(int s, plumb::SeededRng& rng) {
    std::vector<plumb::Edge> e;
    for (int v = 1; v <= s; ++v) e.emplace_back(v == 1 ? 0 : 1 + rng.below(v - 1), v);
    std::vector<long> deg(s + 1, 0);
    for (auto [a, b] : e) ++deg[a], ++deg[b];
    std::vector<long> m(s + 1, 0);
    for (int v = 1; v <= s; ++v) m[v] = -std::max<long>(2, deg[v]) - rng.below(3);
    if (m[1] == -deg[1]) --m[1];
    return MarkedGraph(m, e);
}

}  // namespace fixtures
