#pragma once

// Integer surgery along the marked vertex: Alexander slicing of the surgered
// lattice, assembly of the surgered (weighted) graded root from the bigraded
// roots of the knot complement, and the Laplace transform of knot weights.

#include <memory>
#include <vector>

#include "plumb/weights.hpp"

namespace plumb {

struct SurgeryContext {
    MarkedGraph graph;
    long m0 = 0;
    PlumbingGraph surgered;  // vertex 0 is the former marked vertex
    std::shared_ptr<SpincSpace> amb, sur;
    QVec Sigma;  // length s+1, Sigma_0 = 1
    Rat p;       // Sigma^2 = m0 - sf
    Rat sf;      // lambda^T M^-1 lambda
};

SurgeryContext surgery_context(const MarkedGraph& g, long m0);

// a(L) = (L(Sigma) + p) / 2
Rat alexander_of_L(const SurgeryContext& ctx, const IVec& L);

// Alexander values of a surgered class form a0 + pZ; t_{a0 + n p} = [L|_Gamma + 2 n lambda].
struct Slices {
    Rat a0;
    IVec base;  // L|_Gamma for the canonical representative L of the class
};
Slices slices(const SurgeryContext& ctx, const SpincClass& t);
SpincClass slice_class(const SurgeryContext& ctx, const Slices& sl, const Rat& a);

Rat sigma_shift(const SurgeryContext& ctx, const Rat& a);
Rat level(const SurgeryContext& ctx, const Rat& h, const Rat& a);  // h + sigma(a)

struct Identification {
    Rat a;      // the pair joins piece a and piece a + p
    Rat g;      // surgered grading
    int node_a, node_ap;  // nodes of R(Gamma, t_a) and R(Gamma, t_{a+p})
};

struct SurgeryResult {
    GradedRoot root;                    // assembled surgered root (no lattice data)
    std::vector<LaurentQTZ> weights;    // filled by the weighted variant
    Rat top, h_min;
    std::vector<Rat> a_values;          // pieces that meet the window
    std::vector<GradedRoot> pieces;     // R(Gamma, t_a) for each a, ambient gradings
    std::vector<std::vector<LaurentQTZ>> piece_weights;  // transformed weights per piece node
    std::vector<std::vector<std::pair<int, int>>> members;  // node -> (piece, ambient node)
    std::vector<Identification> identifications;
    // surgered node of (piece, ambient node), or -1 below the window
    std::vector<std::vector<int>> node_of;
};

SurgeryResult surgery_graded_root(const SurgeryContext& ctx, const SpincClass& t, int depth);
SurgeryResult surgery_weighted_graded_root(const SurgeryContext& ctx, const SpincClass& t, int eps,
                                           const AdmissibleFamily& f, int depth);

// L_p^{(a, eps)} applied to a knot weight
LaurentQTZ laplace_transform(const SurgeryContext& ctx, const Rat& a, int eps, const KnotWeight& w,
                             const AdmissibleFamily& f);

// sum over a of the transformed knot series, truncated at q_max (integer
// homology sphere ambient only)
LaurentQTZ surgery_series(const SurgeryContext& ctx, const SpincClass& t, int eps, const AdmissibleFamily& f,
                           const Rat& q_max);

std::string canonical_form(const SurgeryResult& r);  // with weights when present

}  // namespace plumb
