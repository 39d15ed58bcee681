#include "plumb/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "plumb/errors.hpp"

namespace plumb {

namespace {

std::vector<Edge> normalize_edges(std::vector<Edge> e, int n) {
    for (auto& [a, b] : e) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw SchemaError("edge endpoint out of range");
        if (a == b) throw SchemaError("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw SchemaError("duplicate edge");
    return e;
}

bool acyclic(int n, const std::vector<Edge>& e, int* components) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    for (auto [a, b] : e) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        p[ra] = rb;
    }
    if (components) {
        int c = 0;
        for (int i = 0; i < n; ++i) c += find(i) == i;
        *components = c;
    }
    return true;
}

std::vector<std::vector<int>> nbr_lists(int n, const std::vector<Edge>& e) {
    std::vector<std::vector<int>> nb(n);
    for (auto [a, b] : e) {
        nb[a].push_back(b);
        nb[b].push_back(a);
    }
    for (auto& l : nb) std::sort(l.begin(), l.end());
    return nb;
}

std::vector<Edge> drop_vertex(const std::vector<Edge>& e, int w) {
    std::vector<Edge> out;
    for (auto [a, b] : e) {
        if (a == w || b == w) continue;
        out.emplace_back(a > w ? a - 1 : a, b > w ? b - 1 : b);
    }
    return out;
}

std::vector<int> removal_relabel(int n, int w) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = i < w ? i : (i == w ? -1 : i - 1);
    return r;
}

std::vector<int> identity(int n) {
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- PlumbingGraph

PlumbingGraph::PlumbingGraph(std::vector<long> framings, std::vector<Edge> e)
    : m(std::move(framings)) {
    edges = normalize_edges(std::move(e), size());
    if (!acyclic(size(), edges, nullptr)) throw SchemaError("plumbing graph must be a forest");
}

bool PlumbingGraph::has_edge(int i, int j) const {
    Edge q{std::min(i, j), std::max(i, j)};
    return std::binary_search(edges.begin(), edges.end(), q);
}

std::vector<std::vector<int>> PlumbingGraph::neighbors() const { return nbr_lists(size(), edges); }

IVec PlumbingGraph::degrees() const {
    IVec d(size(), 0);
    for (auto [a, b] : edges) {
        ++d[a];
        ++d[b];
    }
    return d;
}

IMat PlumbingGraph::adjacency_matrix() const {
    IMat M(size());
    for (int i = 0; i < size(); ++i) M(i, i) = m[i];
    for (auto [a, b] : edges) M(a, b) = M(b, a) = 1;
    return M;
}

bool PlumbingGraph::is_forest() const { return acyclic(size(), edges, nullptr); }

bool PlumbingGraph::is_tree() const {
    int c = 0;
    return acyclic(size(), edges, &c) && c == 1;
}

// ---------------------------------------------------------------- MarkedGraph

MarkedGraph::MarkedGraph(std::vector<long> framings, std::vector<Edge> e) : m(std::move(framings)) {
    if (m.empty()) throw SchemaError("marked graph needs the marked vertex");
    m[0] = 0;
    edges = normalize_edges(std::move(e), static_cast<int>(m.size()));
    int c = 0;
    if (!acyclic(static_cast<int>(m.size()), edges, &c) || c != 1)
        throw SchemaError("marked plumbing graph must be a tree");
}

bool MarkedGraph::has_edge(int i, int j) const {
    Edge q{std::min(i, j), std::max(i, j)};
    return std::binary_search(edges.begin(), edges.end(), q);
}

std::vector<std::vector<int>> MarkedGraph::neighbors() const {
    return nbr_lists(static_cast<int>(m.size()), edges);
}

IVec MarkedGraph::degrees() const {
    IVec d(m.size(), 0);
    for (auto [a, b] : edges) {
        ++d[a];
        ++d[b];
    }
    return d;
}

IVec MarkedGraph::ambient_degrees() const { return ambient().degrees(); }

IVec MarkedGraph::lambda() const {
    IVec l(s(), 0);
    for (auto [a, b] : edges)
        if (a == 0) l[b - 1] = 1;
    return l;
}

PlumbingGraph MarkedGraph::ambient() const {
    std::vector<long> fr(m.begin() + 1, m.end());
    std::vector<Edge> e;
    for (auto [a, b] : edges)
        if (a != 0) e.emplace_back(a - 1, b - 1);
    return PlumbingGraph(fr, e);
}

PlumbingGraph MarkedGraph::surgered(long m0) const {
    std::vector<long> fr(m);
    fr[0] = m0;
    return PlumbingGraph(fr, edges);
}

IMat adjacency_matrix(const PlumbingGraph& g) { return g.adjacency_matrix(); }

bool is_negative_definite(const IMat& M) {
    auto minors = leading_minors(M);
    for (size_t k = 0; k < minors.size(); ++k) {
        // (-1)^(k+1) * minor_(k+1) > 0
        int want = (k % 2 == 0) ? -1 : 1;
        if (sgn(minors[k]) != want) return false;
    }
    return true;
}

IVec degree_vector(const PlumbingGraph& g) { return g.degrees(); }
IVec lambda_vector(const MarkedGraph& g) { return g.lambda(); }
PlumbingGraph ambient_graph(const MarkedGraph& g) { return g.ambient(); }
PlumbingGraph surgered_graph(const MarkedGraph& g, long m0) { return g.surgered(m0); }

// ---------------------------------------------------------------- moves

std::string to_string(MoveKind k) {
    switch (k) {
        case MoveKind::A: return "A";
        case MoveKind::B: return "B";
        case MoveKind::C: return "C";
        case MoveKind::A0: return "A0";
        case MoveKind::B0: return "B0";
    }
    return "?";
}

MoveKind parse_move_kind(const std::string& s) {
    if (s == "A") return MoveKind::A;
    if (s == "B") return MoveKind::B;
    if (s == "C") return MoveKind::C;
    if (s == "A0") return MoveKind::A0;
    if (s == "B0") return MoveKind::B0;
    throw SchemaError("unknown move kind '" + s + "'");
}

std::string to_string(const NeumannMove& mv) {
    std::string r = to_string(mv.kind) + (mv.dir == MoveDir::Up ? "+" : "-");
    if (mv.u >= 0) r += "@" + std::to_string(mv.u);
    if (mv.v >= 0) r += "," + std::to_string(mv.v);
    return r;
}

namespace {

struct RawGraph {
    std::vector<long> m;
    std::vector<Edge> e;
};

// blow-up / blow-down on a raw vertex/edge list; `marked` forbids framing
// changes at vertex 0 and governs which kinds are legal.
MoveResult<RawGraph> raw_move(const RawGraph& g, const NeumannMove& mv, bool marked) {
    const int n = static_cast<int>(g.m.size());
    auto nb = nbr_lists(n, g.e);
    MoveResult<RawGraph> out;
    auto has = [&](int a, int b) {
        return std::find(g.e.begin(), g.e.end(), Edge{std::min(a, b), std::max(a, b)}) != g.e.end();
    };
    auto bad = [&](const std::string& why) { throw NotApplicable(to_string(mv) + ": " + why); };
    auto in_range = [&](int x) { return x >= 0 && x < n; };

    if (mv.dir == MoveDir::Up) {
        RawGraph r = g;
        const int w = n;
        r.m.push_back(-1);
        switch (mv.kind) {
            case MoveKind::A:
            case MoveKind::A0: {
                int a = std::min(mv.u, mv.v), b = std::max(mv.u, mv.v);
                if (!in_range(a) || !in_range(b) || !has(a, b)) bad("no such edge");
                bool touches0 = marked && a == 0;
                if (mv.kind == MoveKind::A && touches0) bad("edge meets the marked vertex; use A0");
                if (mv.kind == MoveKind::A0 && !touches0) bad("A0 needs an edge at the marked vertex");
                r.e.erase(std::find(r.e.begin(), r.e.end(), Edge{a, b}));
                r.e.emplace_back(a, w);
                r.e.emplace_back(b, w);
                if (!touches0) r.m[a] -= 1;
                r.m[b] -= 1;
                break;
            }
            case MoveKind::B: {
                if (!in_range(mv.u) || (marked && mv.u == 0)) bad("bad vertex");
                r.m[mv.u] -= 1;
                r.e.emplace_back(mv.u, w);
                break;
            }
            case MoveKind::B0: {
                if (!marked) bad("B0 needs a marked graph");
                r.e.emplace_back(0, w);
                break;
            }
            case MoveKind::C: {
                if (marked) bad("C only applies to closed graphs");
                break;
            }
        }
        out.relabel = identity(n);
        out.graph = std::move(r);
        return out;
    }

    // blow-down
    const int w = mv.u;
    if (!in_range(w) || (marked && w == 0)) bad("bad vertex");
    if (g.m[w] != -1) bad("vertex framing is not -1");
    const auto& N = nb[w];
    RawGraph r;
    r.m = g.m;
    std::vector<Edge> e = g.e;
    switch (mv.kind) {
        case MoveKind::A:
        case MoveKind::A0: {
            if (N.size() != 2) bad("vertex is not of valence 2");
            bool touches0 = marked && N[0] == 0;
            if (mv.kind == MoveKind::A && touches0) bad("neighbour is the marked vertex; use A0");
            if (mv.kind == MoveKind::A0 && !touches0) bad("A0 needs the marked vertex as neighbour");
            if (!touches0) r.m[N[0]] += 1;
            r.m[N[1]] += 1;
            e.emplace_back(N[0], N[1]);
            break;
        }
        case MoveKind::B:
        case MoveKind::B0: {
            if (N.size() != 1) bad("vertex is not a leaf");
            bool at0 = marked && N[0] == 0;
            if (mv.kind == MoveKind::B && at0) bad("leaf hangs off the marked vertex; use B0");
            if (mv.kind == MoveKind::B0 && !at0) bad("B0 needs a leaf at the marked vertex");
            if (!at0) r.m[N[0]] += 1;
            break;
        }
        case MoveKind::C: {
            if (marked) bad("C only applies to closed graphs");
            if (!N.empty()) bad("vertex is not isolated");
            break;
        }
    }
    if (marked && n - 1 < 2) bad("would leave an empty ambient graph");
    r.m.erase(r.m.begin() + w);
    r.e = drop_vertex(e, w);
    out.graph = std::move(r);
    out.relabel = removal_relabel(n, w);
    out.removed = w;
    out.nbrs = N;
    return out;
}

}  // namespace

MoveResult<PlumbingGraph> apply_neumann(const PlumbingGraph& g, const NeumannMove& mv) {
    if (mv.kind == MoveKind::A0 || mv.kind == MoveKind::B0)
        throw NotApplicable(to_string(mv) + ": marked move on a closed graph");
    auto r = raw_move({g.m, g.edges}, mv, false);
    MoveResult<PlumbingGraph> out;
    out.graph = PlumbingGraph(r.graph.m, r.graph.e);
    if (!is_negative_definite(out.graph.adjacency_matrix()))
        throw LosesDefiniteness(to_string(mv));
    out.relabel = std::move(r.relabel);
    out.removed = r.removed;
    out.nbrs = std::move(r.nbrs);
    return out;
}

MoveResult<MarkedGraph> apply_neumann(const MarkedGraph& g, const NeumannMove& mv) {
    if (mv.kind == MoveKind::C) throw NotApplicable(to_string(mv) + ": C only applies to closed graphs");
    auto r = raw_move({g.m, g.edges}, mv, true);
    MoveResult<MarkedGraph> out;
    out.graph = MarkedGraph(r.graph.m, r.graph.e);
    if (!is_negative_definite(out.graph.ambient_matrix())) throw LosesDefiniteness(to_string(mv));
    out.relabel = std::move(r.relabel);
    out.removed = r.removed;
    out.nbrs = std::move(r.nbrs);
    return out;
}

NeumannMove induced_ambient_move(const MarkedGraph& g, const NeumannMove& mv) {
    NeumannMove a;
    a.dir = mv.dir;
    if (mv.dir == MoveDir::Up) {
        switch (mv.kind) {
            case MoveKind::A: a = {MoveKind::A, MoveDir::Up, mv.u - 1, mv.v - 1}; break;
            case MoveKind::B: a = {MoveKind::B, MoveDir::Up, mv.u - 1, -1}; break;
            case MoveKind::A0: a = {MoveKind::B, MoveDir::Up, std::max(mv.u, mv.v) - 1, -1}; break;
            case MoveKind::B0: a = {MoveKind::C, MoveDir::Up, -1, -1}; break;
            case MoveKind::C: throw NotApplicable("C on a marked graph");
        }
        return a;
    }
    switch (mv.kind) {
        case MoveKind::A: a = {MoveKind::A, MoveDir::Down, mv.u - 1, -1}; break;
        case MoveKind::B: a = {MoveKind::B, MoveDir::Down, mv.u - 1, -1}; break;
        case MoveKind::A0: a = {MoveKind::B, MoveDir::Down, mv.u - 1, -1}; break;
        case MoveKind::B0: a = {MoveKind::C, MoveDir::Down, mv.u - 1, -1}; break;
        case MoveKind::C: throw NotApplicable("C on a marked graph");
    }
    (void)g;
    return a;
}

std::vector<NeumannMove> blow_down_sites(const PlumbingGraph& g) {
    std::vector<NeumannMove> out;
    auto nb = g.neighbors();
    for (int w = 0; w < g.size(); ++w) {
        if (g.m[w] != -1) continue;
        MoveKind k = nb[w].size() == 0 ? MoveKind::C : nb[w].size() == 1 ? MoveKind::B : MoveKind::A;
        if (nb[w].size() > 2) continue;
        NeumannMove mv{k, MoveDir::Down, w, -1};
        try {
            apply_neumann(g, mv);
            out.push_back(mv);
        } catch (const PlumbError&) {
        }
    }
    return out;
}

std::vector<NeumannMove> blow_down_sites(const MarkedGraph& g) {
    std::vector<NeumannMove> out;
    auto nb = g.neighbors();
    for (int w = 1; w <= g.s(); ++w) {
        if (g.m[w] != -1 || nb[w].size() > 2 || nb[w].empty()) continue;
        bool at0 = nb[w][0] == 0;
        MoveKind k = nb[w].size() == 1 ? (at0 ? MoveKind::B0 : MoveKind::B)
                                       : (at0 ? MoveKind::A0 : MoveKind::A);
        NeumannMove mv{k, MoveDir::Down, w, -1};
        try {
            apply_neumann(g, mv);
            out.push_back(mv);
        } catch (const PlumbError&) {
        }
    }
    return out;
}

std::vector<std::vector<int>> graph_automorphisms(const PlumbingGraph& g) {
    const int n = g.size();
    auto M = g.adjacency_matrix();
    auto deg = g.degrees();
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(perm);
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[j] || g.m[j] != g.m[i] || deg[j] != deg[i]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k) ok = M(i, k) == M(j, perm[k]);
            if (!ok) continue;
            perm[i] = j;
            used[j] = 1;
            rec(i + 1);
            used[j] = 0;
            perm[i] = -1;
        }
    };
    rec(0);
    return out;
}

}  // namespace plumb
