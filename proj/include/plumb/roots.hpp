#pragma once

// Superlevel sets of h_U, graded roots and bigraded roots.

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "plumb/arith.hpp"
#include "plumb/graph.hpp"
#include "plumb/spinc.hpp"

namespace plumb {

struct IVecHash {
    size_t operator()(const IVec& v) const noexcept;
};

// Exact Fincke-Pohst enumeration of K in k + 2M Z^s with
// (K - c)^T (-M^{-1}) (K - c) <= R.   M negative definite.
class EllipsoidEnumerator {
public:
    explicit EllipsoidEnumerator(const IMat& M);
    std::vector<IVec> points(const IVec& k, const QVec& c, const Rat& R) const;
    void for_each(const IVec& k, const QVec& c, const Rat& R,
                  const std::function<void(const IVec&)>& f) const;

private:
    IMat M_;
    QMat Minv_;
    std::vector<Rat> d_;  // LDL^T of -M
    QMat L_;
};

Rat h_U(const SpincSpace& sp, const IVec& K);
Rat h_V(const SpincSpace& amb, const IVec& lambda, const IVec& K);
Rat alexander(const SpincSpace& amb, const IVec& lambda, const IVec& K);

// max of h_U over a spin^c class (exact shortest-vector search)
Rat max_hU(const SpincSpace& sp, const SpincClass& k);

struct LatticeCloud {
    std::vector<IVec> points;
    std::vector<Rat> h;
    std::vector<int> component;  // union-find label, 0..ncomp-1
    int ncomp = 0;
};

// {K in [k] : h_U(K) >= h}; throws GradingParity if h is not in 2Z + h_U(k)
LatticeCloud enumerate_superlevel(const SpincSpace& sp, const SpincClass& k, const Rat& h);

// Downward graded root truncated to the window top, top-2, ..., top-2*depth.
struct GradedRoot {
    struct Node {
        int level = 0;  // 0 = top
        int parent = -1;
        std::vector<int> children;
        std::vector<int> members;  // point indices (empty for assembled roots)
    };
    Rat top;
    int depth = 0;
    std::vector<Node> nodes;
    std::vector<std::vector<int>> levels;
    // lattice data (absent for roots assembled by surgery)
    std::vector<IVec> points;
    std::vector<Rat> h;
    std::vector<std::vector<int>> node_of_point;  // [level][point] -> node or -1
    std::unordered_map<IVec, int, IVecHash> index;

    Rat grading(int node) const { return top - 2 * nodes[node].level; }
    Rat level_grading(int level) const { return top - 2 * level; }
    int level_of(const Rat& g) const;  // -1 if outside window / off-parity
    int find_point(const IVec& K) const;
    int node_containing(const IVec& K, int level) const;
    bool stabilized() const { return !levels.empty() && levels.back().size() == 1; }
};

GradedRoot graded_root(const SpincSpace& sp, const SpincClass& k, int depth);
// window down to (at least) the absolute grading h_min
GradedRoot graded_root_to(const SpincSpace& sp, const SpincClass& k, const Rat& h_min);

struct BigradedRoot {
    struct Node {
        int iu = 0, jv = 0;  // level indices in the U and V windows
        int down_u = -1, down_v = -1;
        int coord_u = -1, coord_v = -1;  // nodes of rootU / rootV
        std::vector<int> members;        // indices into rootU.points
    };
    GradedRoot rootU;  // R(Gamma, [k])
    GradedRoot rootV;  // R(Gamma, [k + 2 lambda])
    IVec lambda;
    int depthU = 0, depthV = 0;
    std::vector<Node> nodes;
    std::vector<std::vector<std::vector<int>>> cell;  // [iu][jv] -> node ids

    Rat gradingU(int node) const { return rootU.top - 2 * nodes[node].iu; }
    Rat gradingV(int node) const { return rootV.top - 2 * nodes[node].jv; }
};

BigradedRoot bigraded_root(const MarkedGraph& g, const SpincClass& k, int depth);
// window down to absolute gradings (i_min, j_min); optional prebuilt roots must
// reach those gradings
BigradedRoot bigraded_root_window(const MarkedGraph& g, const SpincClass& k, const Rat& i_min,
                                  const Rat& j_min, const GradedRoot* rootU = nullptr,
                                  const GradedRoot* rootV = nullptr);

GradedRoot collapse_U(const BigradedRoot& r);
GradedRoot collapse_V(const BigradedRoot& r);

// phi_*[k] for a framing preserving automorphism perm (perm[i] = image of i)
SpincClass apply_automorphism(const SpincSpace& sp, const SpincClass& k, const std::vector<int>& perm);

// ---------------------------------------------------------------- canonical forms

std::string hash_hex(const std::string& s);

// Isomorphism-invariant string of a graded root window; `label(node)` adds a payload.
std::string canonical_form(const GradedRoot& r,
                           const std::function<std::string(int)>& label = nullptr);
// Position labels of nodes (subtree shape plus path to the bottom), used for
// bigraded coordinates.
std::vector<std::string> position_labels(const GradedRoot& r,
                                         const std::function<std::string(int)>& label = nullptr);
std::string canonical_form(const BigradedRoot& r,
                           const std::function<std::string(int)>& label = nullptr);

std::string to_dot(const GradedRoot& r, const std::function<std::string(int)>& label = nullptr);
std::string to_dot(const BigradedRoot& r, const std::function<std::string(int)>& label = nullptr);

}  // namespace plumb
