#pragma once

// Spin^c structures as cosets of 2M Z^s, relative spin^c structures on marked
// graphs, and the maps attached to Neumann moves.

#include <memory>
#include <vector>

#include "plumb/arith.hpp"
#include "plumb/graph.hpp"

namespace plumb {

// Canonical residues of Z^n modulo 2 M Z^n (M nonsingular).
class CosetSpace {
public:
    CosetSpace() = default;
    explicit CosetSpace(const IMat& M);

    int dim() const { return M_.n; }
    const IMat& matrix() const { return M_; }
    IVec reduce(const IVec& v) const { return hnf_.reduce(v); }
    bool same(const IVec& a, const IVec& b) const { return hnf_.contains(sub(a, b)); }
    Int order() const;  // |det M|
    // every class of the given parity (mod 2), as canonical representatives
    std::vector<IVec> enumerate(const IVec& parity) const;
    std::vector<Int> h1_invariants() const;  // nontrivial Smith factors of M

private:
    IMat M_;
    ColumnHNF hnf_;
};

struct SpincClass {
    IVec rep;  // canonical, rep in m + 2Z^s
    bool operator==(const SpincClass& o) const { return rep == o.rep; }
    bool operator!=(const SpincClass& o) const { return rep != o.rep; }
    bool operator<(const SpincClass& o) const { return rep < o.rep; }
};

// a-coset (a in delta + 2Z^s) used by the psi description
struct DeltaClass {
    IVec rep;
    bool operator==(const DeltaClass& o) const { return rep == o.rep; }
    bool operator<(const DeltaClass& o) const { return rep < o.rep; }
};

struct RelSpincClass {
    IVec rep;  // canonical charge, length s+1
    bool operator==(const RelSpincClass& o) const { return rep == o.rep; }
    bool operator<(const RelSpincClass& o) const { return rep < o.rep; }
};

// Spin^c data of a negative definite closed plumbing graph.  Immutable.
class SpincSpace {
public:
    explicit SpincSpace(const PlumbingGraph& g);

    const PlumbingGraph& graph() const { return g_; }
    const IMat& M() const { return M_; }
    const QMat& Minv() const { return Minv_; }
    const CosetSpace& cosets() const { return cos_; }
    int s() const { return g_.size(); }
    Int det_abs() const { return cos_.order(); }

    bool is_characteristic(const IVec& K) const;
    SpincClass make(const IVec& k) const;  // validates k in Char
    DeltaClass make_delta(const IVec& a) const;
    std::vector<SpincClass> enumerate() const;
    SpincClass conjugate(const SpincClass& c) const;
    SpincClass h1_action(const SpincClass& c, const IVec& x) const;
    SpincClass psi(const DeltaClass& a) const;
    DeltaClass psi_inverse(const SpincClass& c) const;

private:
    PlumbingGraph g_;
    IMat M_;
    QMat Minv_;
    CosetSpace cos_;
};

// Relative spin^c structures on a marked graph: charges in delta_hat + 2Z^{s+1}
// modulo 2 M_{v0} (0 x Z^s).
class RelSpincSpace {
public:
    explicit RelSpincSpace(const MarkedGraph& g);

    const MarkedGraph& graph() const { return g_; }
    const SpincSpace& ambient() const { return *amb_; }
    const IVec& delta_hat() const { return delta_hat_; }
    RelSpincClass make(const IVec& b) const;
    RelSpincClass conjugate(const RelSpincClass& c) const;
    RelSpincClass h1_action(const RelSpincClass& c, const IVec& x) const;
    // w_n([b]) = [b|_Gamma + n(lambda + M u)], n odd
    SpincClass w_n(const RelSpincClass& b, long n) const;
    // p_n([b]) = [b|_Gamma + n lambda], n odd
    DeltaClass p_n(const RelSpincClass& b, long n) const;

private:
    MarkedGraph g_;
    std::shared_ptr<SpincSpace> amb_;
    ColumnHNF hnf_;
    IVec delta_hat_;
};

std::vector<SpincClass> enumerate_spinc(const PlumbingGraph& g);

// beta: spin^c(G) -> spin^c(G') for a move on a closed graph (either direction).
IVec beta_rep(const PlumbingGraph& g, const NeumannMove& mv, const IVec& K);
SpincClass beta_map(const PlumbingGraph& g, const NeumannMove& mv, const SpincClass& k);
// lifts beta_+/- of a characteristic vector (blow-ups only)
IVec beta_pm_lift(const PlumbingGraph& g, const NeumannMove& mv, const IVec& K, int sign);
// alpha on delta-cosets (closed graphs)
DeltaClass alpha_map(const PlumbingGraph& g, const NeumannMove& mv, const DeltaClass& a);
// beta on the ambient spin^c structures for a marked move
SpincClass beta_map(const MarkedGraph& g, const NeumannMove& mv, const SpincClass& k);
IVec beta_rep(const MarkedGraph& g, const NeumannMove& mv, const IVec& K);
// alpha_rel on relative classes
RelSpincClass alpha_rel(const MarkedGraph& g, const NeumannMove& mv, const RelSpincClass& b);

}  // namespace plumb
