#pragma once

// Admissible families, weighted graded roots (closed and knot complement case)
// and truncated BPS q-series.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "plumb/laurent.hpp"
#include "plumb/roots.hpp"

namespace plumb {

// ---------------------------------------------------------------- families

class AdmissibleFamily {
public:
    virtual ~AdmissibleFamily() = default;
    // W_n(i); n >= 0
    virtual Rat W(int n, long i) const = 0;
    virtual std::string tag() const = 0;
    // W_n(-i) = (-1)^n W_n(i) is asserted by the family
    virtual bool claims_ad3() const { return false; }
};

// The principal-value family: one half of the two geometric expansions of
// (z - z^-1)^(2-n).  W_n(i) is the coefficient of z^(-i).
class WHatFamily : public AdmissibleFamily {
public:
    Rat W(int n, long i) const override;
    std::string tag() const override { return "what"; }
    bool claims_ad3() const override { return true; }
};

// User family from a JSON table.  W_0, W_1, W_2 are fixed by the axioms; the
// table lists W_n for n >= 3 on a window, values outside the window are 0.
class TableFamily : public AdmissibleFamily {
public:
    static std::shared_ptr<TableFamily> from_json_text(const std::string& text);
    Rat W(int n, long i) const override;
    std::string tag() const override { return name_; }
    bool claims_ad3() const override { return ad3_; }
    long radius() const { return radius_; }
    int max_n() const { return max_n_; }

private:
    std::string name_ = "table";
    bool ad3_ = false;
    long radius_ = 0;
    int max_n_ = 2;
    std::vector<std::vector<Rat>> vals_;  // [n-3][i + radius]
};

const AdmissibleFamily& what_family();
Rat what_value(int n, long i);

struct AxiomReport {
    bool ad1 = true, ad2 = true, ad3 = true, forced = true;
    std::string first_failure;
    bool ok(bool need_ad3) const { return ad1 && ad2 && forced && (!need_ad3 || ad3); }
};
// AD1, AD2 and the forced W_1/W_0 values on n <= max_n, |i| <= max_i
AxiomReport check_axioms(const AdmissibleFamily& f, int max_n, long max_i);

// Coefficients of (t^(-1/2) z - t^(1/2) z^-1)^e for z-exponents in [lo, hi].
LaurentQTZ expand_binomial(long e, const AdmissibleFamily& f, long z_lo, long z_hi);
// coefficient of z^j (a monomial in t) in the family expansion of X^e
LaurentQTZ binomial_z_coefficient(long e, const AdmissibleFamily& f, const Rat& j);

// Evaluation of per-point terms may run on several threads; results do not
// depend on the thread count.
void set_num_threads(int n);
int num_threads();

// ---------------------------------------------------------------- closed case

struct ClosedTerms {
    explicit ClosedTerms(const SpincSpace& sp, int eps, const AdmissibleFamily& f);
    const SpincSpace& sp;
    int eps;
    const AdmissibleFamily& fam;
    IVec Mu;       // M u
    IVec deg;      // delta
    Rat q0, t0;    // global monomial q^q0 t^t0
    Rat W(const IVec& K) const;
    Rat qexp(const IVec& K) const;  // without q0
    Rat texp(const IVec& K) const;  // without t0
    LaurentQTZ term(const IVec& K) const;  // includes the global monomial
};

LaurentQTZ closed_vertex_term(const SpincSpace& sp, const IVec& K, int eps, const AdmissibleFamily& f);
LaurentQTZ closed_weight(const SpincSpace& sp, const std::vector<IVec>& points, int eps,
                         const AdmissibleFamily& f);

struct WeightedGradedRoot {
    GradedRoot root;
    std::vector<LaurentQTZ> weights;
    int eps = 1;
    std::string family;
};

WeightedGradedRoot weighted_graded_root_closed(const SpincSpace& sp, const SpincClass& k, int eps,
                                               const AdmissibleFamily& f, int depth);
WeightedGradedRoot weigh_closed(const SpincSpace& sp, GradedRoot root, int eps, const AdmissibleFamily& f);

// two-variable series, all K in [k] with q-exponent <= q_max (exact prefix)
LaurentQTZ zhat_closed(const SpincSpace& sp, const SpincClass& k, int eps, const AdmissibleFamily& f,
                       const Rat& q_max);

// ---------------------------------------------------------------- knot case

struct KnotTerm {
    Rat W, xi, zeta, theta;
};

class KnotData {
public:
    KnotData(const MarkedGraph& g, int eps, const AdmissibleFamily& f);
    const MarkedGraph& graph() const { return g_; }
    const SpincSpace& ambient() const { return amb_; }
    const IVec& lambda() const { return lambda_; }
    long delta0() const { return delta0_; }
    int eps() const { return eps_; }
    const AdmissibleFamily& family() const { return fam_; }
    const IVec& center() const { return center_; }  // eps (lambda + M u)
    Rat sf() const { return sf_; }                   // lambda^T M^-1 lambda

    KnotTerm term(const IVec& K) const;
    LaurentQTZ monomial(const IVec& K) const;  // W q^xi z^zeta t^theta
    // xi(K) = qconst - (K - center)^T M^-1 (K - center) / 4
    Rat qconst() const { return qconst_; }

private:
    MarkedGraph g_;
    SpincSpace amb_;
    int eps_;
    const AdmissibleFamily& fam_;
    IVec lambda_, delta_, Mu_, center_;
    long delta0_ = 0;
    QVec Minv_lambda_;
    Rat sf_, xi0_, theta0_, qconst_;
};

KnotTerm knot_vertex_term(const MarkedGraph& g, const IVec& K, int eps, const AdmissibleFamily& f);
KnotWeight knot_weight(const KnotData& kd, const std::vector<IVec>& points);

struct WeightedKnotRoot {
    GradedRoot root;
    std::vector<KnotWeight> weights;
    int eps = 1;
    std::string family;
};

struct WeightedBigradedRoot {
    BigradedRoot root;
    std::vector<KnotWeight> weights;   // per bigraded node (from its U coordinate)
    std::vector<KnotWeight> u_weights; // per node of root.rootU
    int eps = 1;
    std::string family;
};

WeightedKnotRoot weighted_graded_root_knot(const MarkedGraph& g, const SpincClass& k, int eps,
                                           const AdmissibleFamily& f, int depth);
WeightedKnotRoot weigh_knot(const KnotData& kd, GradedRoot root);
WeightedBigradedRoot weighted_bigraded_root(const MarkedGraph& g, const SpincClass& k, int eps,
                                            const AdmissibleFamily& f, int depth);
WeightedBigradedRoot weigh_bigraded(const KnotData& kd, BigradedRoot root);
// Weights obtained by summing over each node's own intersection component
// (not an invariant; kept to reproduce that observation).
std::vector<KnotWeight> intersection_weights(const KnotData& kd, const BigradedRoot& r);

KnotWeight zhat_knot(const MarkedGraph& g, const SpincClass& k, int eps, const AdmissibleFamily& f,
                     const Rat& q_max);

// ---------------------------------------------------------------- checks

// lowest grading a root must reach so that every point with q-exponent <= q_max
// is materialized
Rat required_bottom_closed(const SpincSpace& sp, const SpincClass& k, int eps, const AdmissibleFamily& f,
                           const Rat& q_max);
Rat required_bottom_knot(const KnotData& kd, const SpincClass& k, const Rat& q_max);

// lowest node weight truncated at q_max equals the truncated series; throws
// InsufficientDepth if the window is too shallow or does not end in one node
bool stabilization_check(const SpincSpace& sp, const SpincClass& k, const WeightedGradedRoot& r,
                         const AdmissibleFamily& f, const Rat& q_max);
bool stabilization_check(const KnotData& kd, const SpincClass& k, const WeightedKnotRoot& r,
                         const Rat& q_max);

// R_{-eps}(G, [-k]) equals R_eps(G, [k]) after t -> 1/t (closed), and after
// t -> 1/t, z -> 1/z and negation (knot).  Throws AD3Violated for families
// without AD3.
bool conjugation_symmetry_check(const SpincSpace& sp, const SpincClass& k, int eps,
                                const AdmissibleFamily& f, int depth);
bool conjugation_symmetry_check(const MarkedGraph& g, const SpincClass& k, int eps,
                                const AdmissibleFamily& f, int depth);

// canonical weighted forms
std::string canonical_form(const WeightedGradedRoot& r);
std::string canonical_form(const WeightedKnotRoot& r);
std::string canonical_form(const WeightedBigradedRoot& r);

}  // namespace plumb
