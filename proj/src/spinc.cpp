#include "plumb/spinc.hpp"

#include <algorithm>
#include <functional>

#include "plumb/errors.hpp"

namespace plumb {

namespace {

long mod2(long x) { return ((x % 2) + 2) % 2; }

bool parity_matches(const IVec& v, const IVec& p) {
    for (size_t i = 0; i < v.size(); ++i)
        if (mod2(v[i]) != mod2(p[i])) return false;
    return true;
}

std::vector<IVec> columns_of(const IMat& M, long factor) {
    std::vector<IVec> cols(M.n, IVec(M.n));
    for (int j = 0; j < M.n; ++j)
        for (int i = 0; i < M.n; ++i) cols[j][i] = factor * M(i, j);
    return cols;
}

}  // namespace

// ---------------------------------------------------------------- CosetSpace

CosetSpace::CosetSpace(const IMat& M) : M_(M), hnf_(column_hnf(M.n, columns_of(M, 2))) {}

Int CosetSpace::order() const { return abs(determinant(M_)); }

std::vector<IVec> CosetSpace::enumerate(const IVec& parity) const {
    // the Hermite form of 2M is square lower triangular, so residues are a box
    const int n = dim();
    std::vector<IVec> out;
    IVec cur(n);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(reduce(cur));
            return;
        }
        long H = checked_ll(hnf_.col[k][hnf_.pivot_row[k]]);
        for (long y = mod2(parity[k]); y < H; y += 2) {
            cur[k] = y;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> CosetSpace::h1_invariants() const {
    std::vector<Int> out;
    for (auto& d : smith_invariants(M_))
        if (d != 1) out.push_back(d);
    return out;
}

// ---------------------------------------------------------------- SpincSpace

SpincSpace::SpincSpace(const PlumbingGraph& g) : g_(g), M_(g.adjacency_matrix()) {
    if (g_.size() == 0) throw InvalidArgument("empty plumbing graph");
    if (!is_negative_definite(M_)) throw NotNegativeDefinite("adjacency matrix is not negative definite");
    Minv_ = inverse(M_);
    cos_ = CosetSpace(M_);
}

bool SpincSpace::is_characteristic(const IVec& K) const {
    return static_cast<int>(K.size()) == s() && parity_matches(K, g_.m);
}

SpincClass SpincSpace::make(const IVec& k) const {
    if (!is_characteristic(k)) throw InvalidArgument("not a characteristic vector: " + to_string(k));
    return {cos_.reduce(k)};
}

DeltaClass SpincSpace::make_delta(const IVec& a) const {
    if (static_cast<int>(a.size()) != s() || !parity_matches(a, g_.degrees()))
        throw InvalidArgument("not in delta + 2Z^s: " + to_string(a));
    return {cos_.reduce(a)};
}

std::vector<SpincClass> SpincSpace::enumerate() const {
    std::vector<SpincClass> out;
    for (auto& r : cos_.enumerate(g_.m)) out.push_back({r});
    return out;
}

SpincClass SpincSpace::conjugate(const SpincClass& c) const { return {cos_.reduce(neg(c.rep))}; }

SpincClass SpincSpace::h1_action(const SpincClass& c, const IVec& x) const {
    return {cos_.reduce(add(c.rep, scale(2, x)))};
}

SpincClass SpincSpace::psi(const DeltaClass& a) const {
    return make(add(a.rep, mul(M_, ones(s()))));
}

DeltaClass SpincSpace::psi_inverse(const SpincClass& c) const {
    return make_delta(sub(c.rep, mul(M_, ones(s()))));
}

std::vector<SpincClass> enumerate_spinc(const PlumbingGraph& g) { return SpincSpace(g).enumerate(); }

// ---------------------------------------------------------------- RelSpincSpace

RelSpincSpace::RelSpincSpace(const MarkedGraph& g)
    : g_(g), amb_(std::make_shared<SpincSpace>(g.ambient())) {
    const int s = g_.s();
    IMat full = g_.surgered(0).adjacency_matrix();  // framing at 0 is irrelevant below
    std::vector<IVec> gens;
    for (int i = 1; i <= s; ++i) {
        IVec c(s + 1);
        for (int r = 0; r <= s; ++r) c[r] = 2 * full(r, i);
        gens.push_back(c);
    }
    hnf_ = column_hnf(s + 1, gens);
    delta_hat_ = g_.degrees();
    delta_hat_[0] += 1;
}

RelSpincClass RelSpincSpace::make(const IVec& b) const {
    if (static_cast<int>(b.size()) != g_.s() + 1 || !parity_matches(b, delta_hat_))
        throw InvalidArgument("charge not in delta_hat + 2Z^(s+1): " + to_string(b));
    return {hnf_.reduce(b)};
}

RelSpincClass RelSpincSpace::conjugate(const RelSpincClass& c) const { return {hnf_.reduce(neg(c.rep))}; }

RelSpincClass RelSpincSpace::h1_action(const RelSpincClass& c, const IVec& x) const {
    return {hnf_.reduce(add(c.rep, scale(2, x)))};
}

SpincClass RelSpincSpace::w_n(const RelSpincClass& b, long n) const {
    if (mod2(n) != 1) throw InvalidArgument("w_n needs odd n");
    IVec r(b.rep.begin() + 1, b.rep.end());
    IVec lm = add(g_.lambda(), mul(amb_->M(), ones(g_.s())));
    return amb_->make(add(r, scale(n, lm)));
}

DeltaClass RelSpincSpace::p_n(const RelSpincClass& b, long n) const {
    if (mod2(n) != 1) throw InvalidArgument("p_n needs odd n");
    IVec r(b.rep.begin() + 1, b.rep.end());
    return amb_->make_delta(add(r, scale(n, g_.lambda())));
}

// ---------------------------------------------------------------- move maps

namespace {

// Undo a blow-up: shift K' along 2M'e_w until K'_w == target, drop coordinate w,
// add `corr` at the neighbours, relabel.
IVec blow_down_rep(const IMat& Mold, const IVec& Kold, int w, long target,
                   const std::vector<int>& corr_at, long corr) {
    IVec K = Kold;
    long d = K[w] - target;  // M'_ww = -1, so one step changes K_w by -2
    if (mod2(d) != 0) throw InvalidArgument("parity mismatch in blow-down");
    long t = d / 2;
    for (int i = 0; i < Mold.n; ++i) K[i] += 2 * t * Mold(i, w);
    for (int j : corr_at) K[j] += corr;
    K.erase(K.begin() + w);
    return K;
}

}  // namespace

IVec beta_rep(const PlumbingGraph& g, const NeumannMove& mv, const IVec& K) {
    const int n = g.size();
    if (mv.dir == MoveDir::Up) {
        IVec Kp = K;
        Kp.push_back(0);
        switch (mv.kind) {
            case MoveKind::A:
                Kp[mv.u] -= 1;
                Kp[mv.v] -= 1;
                Kp[n] += 1;
                break;
            case MoveKind::B:
                Kp[mv.u] -= 1;
                Kp[n] += 1;
                break;
            case MoveKind::C: Kp[n] = -1; break;
            default: throw NotApplicable("marked move on a closed graph");
        }
        return Kp;
    }
    auto res = apply_neumann(g, mv);  // validates the pattern
    IMat Mold = g.adjacency_matrix();
    switch (mv.kind) {
        case MoveKind::A: return blow_down_rep(Mold, K, res.removed, 1, res.nbrs, 1);
        case MoveKind::B: return blow_down_rep(Mold, K, res.removed, 1, res.nbrs, 1);
        case MoveKind::C: return blow_down_rep(Mold, K, res.removed, -1, {}, 0);
        default: throw NotApplicable("marked move on a closed graph");
    }
}

SpincClass beta_map(const PlumbingGraph& g, const NeumannMove& mv, const SpincClass& k) {
    auto res = apply_neumann(g, mv);
    SpincSpace sp(res.graph);
    return sp.make(beta_rep(g, mv, k.rep));
}

IVec beta_pm_lift(const PlumbingGraph& g, const NeumannMove& mv, const IVec& K, int sign) {
    if (mv.dir != MoveDir::Up) throw NotApplicable("beta lifts are defined for blow-ups");
    if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
    const int n = g.size();
    IVec Kp = K;
    Kp.push_back(0);
    switch (mv.kind) {
        case MoveKind::A:
            Kp[mv.u] -= sign;
            Kp[mv.v] -= sign;
            Kp[n] += sign;
            break;
        case MoveKind::B:
            Kp[mv.u] -= sign;
            Kp[n] += sign;
            break;
        case MoveKind::C: Kp[n] = sign; break;
        default: throw NotApplicable("marked move on a closed graph");
    }
    return Kp;
}

DeltaClass alpha_map(const PlumbingGraph& g, const NeumannMove& mv, const DeltaClass& a) {
    auto res = apply_neumann(g, mv);
    SpincSpace sp(res.graph);
    if (mv.dir == MoveDir::Up) {
        IVec ap = a.rep;
        ap.push_back(0);
        if (mv.kind == MoveKind::B) {
            ap[mv.u] -= 1;
            ap[g.size()] += 1;
        }
        return sp.make_delta(ap);
    }
    // inverse through psi: alpha = psi'^{-1} o beta o psi
    SpincSpace old(g);
    SpincClass k = old.psi(a);
    return sp.psi_inverse(sp.make(beta_rep(g, mv, k.rep)));
}

IVec beta_rep(const MarkedGraph& g, const NeumannMove& mv, const IVec& K) {
    return beta_rep(g.ambient(), induced_ambient_move(g, mv), K);
}

SpincClass beta_map(const MarkedGraph& g, const NeumannMove& mv, const SpincClass& k) {
    auto res = apply_neumann(g, mv);
    SpincSpace sp(res.graph.ambient());
    return sp.make(beta_rep(g, mv, k.rep));
}

RelSpincClass alpha_rel(const MarkedGraph& g, const NeumannMove& mv, const RelSpincClass& b) {
    auto res = apply_neumann(g, mv);
    RelSpincSpace sp(res.graph);
    const int n = g.s() + 1;
    if (mv.dir == MoveDir::Up) {
        IVec bp = b.rep;
        bp.push_back(0);
        if (mv.kind == MoveKind::B) {
            bp[mv.u] += 1;
            bp[n] -= 1;
        } else if (mv.kind == MoveKind::B0) {
            bp[0] += 1;
            bp[n] -= 1;
        }
        return sp.make(bp);
    }
    IMat full = g.surgered(0).adjacency_matrix();
    const int w = res.removed;
    IVec bb = b.rep;
    long target = (mv.kind == MoveKind::A || mv.kind == MoveKind::A0) ? 0 : -1;
    long d = bb[w] - target;
    if (mod2(d) != 0) throw InvalidArgument("parity mismatch in blow-down");
    long t = d / 2;
    for (int i = 0; i < n; ++i) bb[i] += 2 * t * full(i, w);  // full(0, w) = lambda_w
    if (mv.kind == MoveKind::B) bb[res.nbrs[0]] -= 1;
    if (mv.kind == MoveKind::B0) bb[0] -= 1;
    bb.erase(bb.begin() + w);
    return sp.make(bb);
}

}  // namespace plumb
