#pragma once

// Plumbing graphs, marked plumbing graphs and Neumann moves.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumb/arith.hpp"

namespace plumb {

using Edge = std::pair<int, int>;

// Integer weighted forest.  Vertex i carries framing m[i].
struct PlumbingGraph {
    std::vector<long> m;
    std::vector<Edge> edges;  // normalized (lo, hi), sorted

    PlumbingGraph() = default;
    PlumbingGraph(std::vector<long> framings, std::vector<Edge> e);

    int size() const { return static_cast<int>(m.size()); }
    bool has_edge(int i, int j) const;
    std::vector<std::vector<int>> neighbors() const;
    IVec degrees() const;
    IMat adjacency_matrix() const;
    bool is_forest() const;
    bool is_tree() const;
    bool operator==(const PlumbingGraph& o) const { return m == o.m && edges == o.edges; }
};

// Plumbing tree with an unweighted vertex 0.  m[0] is unused (kept at 0).
struct MarkedGraph {
    std::vector<long> m;  // size s+1
    std::vector<Edge> edges;

    MarkedGraph() = default;
    MarkedGraph(std::vector<long> framings_with_slot0, std::vector<Edge> e);

    int s() const { return static_cast<int>(m.size()) - 1; }
    bool has_edge(int i, int j) const;
    std::vector<std::vector<int>> neighbors() const;
    IVec degrees() const;          // delta over all s+1 vertices
    IVec ambient_degrees() const;  // delta of the ambient graph (length s)
    IVec lambda() const;           // length s, 1 where adjacent to vertex 0
    PlumbingGraph ambient() const;
    PlumbingGraph surgered(long m0) const;  // vertex 0 keeps index 0
    IMat ambient_matrix() const { return ambient().adjacency_matrix(); }
    bool operator==(const MarkedGraph& o) const { return m == o.m && edges == o.edges; }
};

IMat adjacency_matrix(const PlumbingGraph& g);
bool is_negative_definite(const IMat& M);
IVec degree_vector(const PlumbingGraph& g);
IVec lambda_vector(const MarkedGraph& g);
PlumbingGraph ambient_graph(const MarkedGraph& g);
PlumbingGraph surgered_graph(const MarkedGraph& g, long m0);

// ---------------------------------------------------------------- Neumann moves

enum class MoveKind { A, B, C, A0, B0 };
enum class MoveDir { Up, Down };

// Location: Up-A/A0 use the edge (u, v); Up-B/B0 use vertex u; Up-C needs none.
// Every Down move names the (-1)-vertex u to be removed.
struct NeumannMove {
    MoveKind kind = MoveKind::B;
    MoveDir dir = MoveDir::Up;
    int u = -1;
    int v = -1;
};

std::string to_string(const NeumannMove& mv);
std::string to_string(MoveKind k);
MoveKind parse_move_kind(const std::string& s);

// Result of a move.  relabel[i] is the new index of old vertex i, or -1 if it was
// removed.  For blow-downs, `removed` is the removed vertex and `nbrs` its old
// neighbours; for blow-ups the new vertex is appended last.
template <class G>
struct MoveResult {
    G graph;
    std::vector<int> relabel;
    int removed = -1;
    std::vector<int> nbrs;
};

MoveResult<PlumbingGraph> apply_neumann(const PlumbingGraph& g, const NeumannMove& mv);
MoveResult<MarkedGraph> apply_neumann(const MarkedGraph& g, const NeumannMove& mv);

// The move induced on the ambient graph (indices shifted by one).
NeumannMove induced_ambient_move(const MarkedGraph& g, const NeumannMove& mv);

// All applicable blow-down locations, in increasing vertex order.
std::vector<NeumannMove> blow_down_sites(const PlumbingGraph& g);
std::vector<NeumannMove> blow_down_sites(const MarkedGraph& g);

// Framing-preserving automorphisms; perm[i] = image of vertex i.
std::vector<std::vector<int>> graph_automorphisms(const PlumbingGraph& g);

}  // namespace plumb
