#include "plumb/surgery.hpp"

#include <map>
#include <numeric>

#include "plumb/errors.hpp"

namespace plumb {

SurgeryContext surgery_context(const MarkedGraph& g, long m0) {
    SurgeryContext ctx;
    ctx.graph = g;
    ctx.m0 = m0;
    ctx.surgered = g.surgered(m0);
    PlumbingGraph amb = g.ambient();
    if (!is_negative_definite(amb.adjacency_matrix()))
        throw NotNegativeDefinite("ambient graph is not negative definite");
    if (!is_negative_definite(ctx.surgered.adjacency_matrix()))
        throw LosesDefiniteness("surgered graph with m0 = " + std::to_string(m0) + " is not negative definite");
    ctx.amb = std::make_shared<SpincSpace>(amb);
    ctx.sur = std::make_shared<SpincSpace>(ctx.surgered);
    const QMat& Si = ctx.sur->Minv();
    const int n = ctx.surgered.size();
    Rat e0e0 = Si(0, 0);
    ctx.p = 1 / e0e0;
    ctx.Sigma.resize(n);
    for (int i = 0; i < n; ++i) ctx.Sigma[i] = Si(i, 0) / e0e0;
    IVec lam = g.lambda();
    ctx.sf = quad(ctx.amb->Minv(), lam);
    if (ctx.p != Rat(m0) - ctx.sf || ctx.Sigma[0] != 1)
        throw InvalidArgument("inconsistent surgery data");
    return ctx;
}

Rat alexander_of_L(const SurgeryContext& ctx, const IVec& L) { return (dot(ctx.Sigma, L) + ctx.p) / 2; }

Slices slices(const SurgeryContext& ctx, const SpincClass& t) {
    Slices sl;
    sl.a0 = alexander_of_L(ctx, t.rep);
    sl.base.assign(t.rep.begin() + 1, t.rep.end());
    return sl;
}

SpincClass slice_class(const SurgeryContext& ctx, const Slices& sl, const Rat& a) {
    Rat n = (a - sl.a0) / ctx.p;
    if (!is_integer(n)) throw InvalidArgument("Alexander value " + to_string(a) + " not in a0 + pZ");
    return ctx.amb->make(add(sl.base, scale(2 * checked_ll(n), ctx.graph.lambda())));
}

Rat sigma_shift(const SurgeryContext& ctx, const Rat& a) {
    Rat d = a - ctx.p / 2;
    return -(d * d) / ctx.p - Rat(1, 4);
}

Rat level(const SurgeryContext& ctx, const Rat& h, const Rat& a) { return h + sigma_shift(ctx, a); }

namespace {

struct UF {
    std::vector<int> p;
    int add() {
        p.push_back(static_cast<int>(p.size()));
        return p.back();
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

// Alexander values a in a0 + pZ with Tstar - sigma(a) >= bound (an interval,
// since sigma is a convex parabola with minimum at p/2)
std::vector<Rat> a_interval(const SurgeryContext& ctx, const Rat& a0, const Rat& Tstar, const Rat& bound) {
    long nc = checked_ll(floor_int((ctx.p / 2 - a0) / ctx.p + Rat(1, 2)));
    auto in = [&](long n) { return Tstar - sigma_shift(ctx, a0 + n * ctx.p) >= bound; };
    long lo = nc, hi = nc;
    if (!in(nc)) {
        if (in(nc - 1)) lo = hi = nc - 1;
        else if (in(nc + 1)) lo = hi = nc + 1;
        else return {};
    }
    while (in(lo - 1)) --lo;
    while (in(hi + 1)) ++hi;
    std::vector<Rat> out;
    for (long n = lo; n <= hi; ++n) out.push_back(a0 + n * ctx.p);
    std::sort(out.begin(), out.end());
    return out;
}

SurgeryResult assemble(const SurgeryContext& ctx, const SpincClass& t, int depth, const KnotData* kd,
                       const AdmissibleFamily* fam) {
    if (depth < 0) throw InvalidArgument("depth must be non-negative");
    const SpincSpace& amb = *ctx.amb;
    Slices sl = slices(ctx, t);
    // tops over the (finite) orbit of slice classes
    std::map<IVec, Rat> top_cache;
    auto top_of = [&](const SpincClass& c) -> Rat {
        auto it = top_cache.find(c.rep);
        if (it != top_cache.end()) return it->second;
        Rat v = max_hU(amb, c);
        top_cache.emplace(c.rep, v);
        return v;
    };
    Rat Tstar;
    {
        SpincClass c0 = slice_class(ctx, sl, sl.a0);
        Tstar = top_of(c0);
        for (long n = 1;; ++n) {
            SpincClass c = slice_class(ctx, sl, sl.a0 + n * ctx.p);
            if (c == c0) break;
            Tstar = std::max(Tstar, top_of(c));
        }
    }
    auto stop = [&](const Rat& a) -> Rat { return top_of(slice_class(ctx, sl, a)) - sigma_shift(ctx, a); };
    // exact top of the surgered root: the candidates near the minimum of sigma bound it below
    Rat best = stop(sl.a0);
    for (auto& a : a_interval(ctx, sl.a0, Tstar, best)) best = std::max(best, stop(a));
    SurgeryResult R;
    R.top = best;
    R.h_min = best - 2 * depth;
    for (auto& a : a_interval(ctx, sl.a0, Tstar, R.h_min))
        if (stop(a) >= R.h_min) R.a_values.push_back(a);

    const size_t np = R.a_values.size();
    std::map<Rat, int> piece_of;
    for (size_t i = 0; i < np; ++i) piece_of[R.a_values[i]] = static_cast<int>(i);
    std::vector<SpincClass> cls;
    for (auto& a : R.a_values) {
        cls.push_back(slice_class(ctx, sl, a));
        R.pieces.push_back(graded_root_to(amb, cls.back(), level(ctx, R.h_min, a)));
    }
    UF uf;
    std::vector<std::vector<int>> gid(np);
    for (size_t i = 0; i < np; ++i)
        for (size_t n = 0; n < R.pieces[i].nodes.size(); ++n) gid[i].push_back(uf.add());
    auto sgrade = [&](size_t i, int n) -> Rat { return R.pieces[i].grading(n) - sigma_shift(ctx, R.a_values[i]); };

    // identifications through the bigraded roots of the knot complement
    for (size_t i = 0; i < np; ++i) {
        const Rat& a = R.a_values[i];
        auto jt = piece_of.find(a + ctx.p);
        if (jt == piece_of.end()) continue;
        const size_t j = jt->second;
        BigradedRoot bi = bigraded_root_window(ctx.graph, cls[i], level(ctx, R.h_min, a),
                                               level(ctx, R.h_min, a + ctx.p), &R.pieces[i], &R.pieces[j]);
        const Rat sa = sigma_shift(ctx, a), sb = sigma_shift(ctx, a + ctx.p);
        for (size_t n = 0; n < bi.nodes.size(); ++n) {
            Rat g = bi.gradingU(static_cast<int>(n)) - sa;
            if (g < R.h_min || bi.gradingV(static_cast<int>(n)) != g + sb) continue;
            const auto& nd = bi.nodes[n];
            uf.unite(gid[i][nd.coord_u], gid[j][nd.coord_v]);
            R.identifications.push_back({a, g, nd.coord_u, nd.coord_v});
        }
    }

    // surgered nodes: identification classes, ordered by (grading desc, first member)
    std::map<int, int> cls_to_node;
    R.node_of.assign(np, {});
    R.root.top = R.top;
    R.root.depth = depth;
    R.root.levels.assign(depth + 1, {});
    for (size_t i = 0; i < np; ++i) R.node_of[i].assign(R.pieces[i].nodes.size(), -1);
    for (int lv = 0; lv <= depth; ++lv) {
        Rat g = R.top - 2 * lv;
        for (size_t i = 0; i < np; ++i) {
            int plv = R.pieces[i].level_of(g + sigma_shift(ctx, R.a_values[i]));
            if (plv < 0) continue;
            for (int n : R.pieces[i].levels[plv]) {
                int c = uf.find(gid[i][n]);
                auto [it, fresh] = cls_to_node.emplace(c, static_cast<int>(R.root.nodes.size()));
                if (fresh) {
                    GradedRoot::Node nd;
                    nd.level = lv;
                    R.root.nodes.push_back(nd);
                    R.root.levels[lv].push_back(it->second);
                    R.members.emplace_back();
                }
                R.node_of[i][n] = it->second;
                R.members[it->second].emplace_back(static_cast<int>(i), n);
            }
        }
    }
    // edges, after all identifications; duplicate edges collapse
    for (size_t id = 0; id < R.root.nodes.size(); ++id) {
        int par = -1;
        for (auto [i, n] : R.members[id]) {
            int pn = R.pieces[i].nodes[n].parent;
            if (pn < 0 || sgrade(i, pn) < R.h_min) continue;
            int q = R.node_of[i][pn];
            if (par >= 0 && q != par) throw InvalidArgument("surgery assembly is not a tree");
            par = q;
        }
        if (par >= 0) {
            R.root.nodes[id].parent = par;
            R.root.nodes[par].children.push_back(static_cast<int>(id));
        } else if (R.root.nodes[id].level < depth) {
            throw InvalidArgument("surgery assembly left a node without parent");
        }
    }

    if (kd) {
        R.weights.assign(R.root.nodes.size(), {});
        R.piece_weights.assign(np, {});
        for (size_t i = 0; i < np; ++i) {
            auto wk = weigh_knot(*kd, R.pieces[i]);
            for (size_t n = 0; n < R.pieces[i].nodes.size(); ++n) {
                R.piece_weights[i].push_back(
                    laplace_transform(ctx, R.a_values[i], kd->eps(), wk.weights[n], *fam));
                int id = R.node_of[i][n];
                if (id >= 0) R.weights[id] += R.piece_weights[i].back();
            }
        }
    }
    return R;
}

}  // namespace

SurgeryResult surgery_graded_root(const SurgeryContext& ctx, const SpincClass& t, int depth) {
    return assemble(ctx, t, depth, nullptr, nullptr);
}

SurgeryResult surgery_weighted_graded_root(const SurgeryContext& ctx, const SpincClass& t, int eps,
                                           const AdmissibleFamily& f, int depth) {
    KnotData kd(ctx.graph, eps, f);
    return assemble(ctx, t, depth, &kd, &f);
}

LaurentQTZ laplace_transform(const SurgeryContext& ctx, const Rat& a, int eps, const KnotWeight& w,
                             const AdmissibleFamily& f) {
    if (eps != 1 && eps != -1) throw InvalidArgument("epsilon must be +1 or -1");
    Rat c = a - (1 + eps) * ctx.p / 2;
    Rat qs = -(c * c) / ctx.p + (Rat(-3) - ctx.p) / 4;
    Rat zc = -2 * c;
    const long e = w.e() + 1;
    LaurentQTZ out;
    if (e >= 0) {
        out = (LaurentQTZ::X().pow(static_cast<int>(e)) * w.P()).z_coefficient(zc);
    } else {
        for (auto& [m, coef] : w.P().terms()) {
            LaurentQTZ b = binomial_z_coefficient(e, f, zc - m.z);
            out += b.shift(m.q, m.t, 0) * coef;
        }
    }
    return out.shift(qs, 0, 0);
}

LaurentQTZ surgery_series(const SurgeryContext& ctx, const SpincClass& t, int eps, const AdmissibleFamily& f,
                           const Rat& q_max) {
    if (ctx.amb->det_abs() != 1) throw NotZHS("ambient manifold is not an integer homology sphere");
    KnotData kd(ctx.graph, eps, f);
    Slices sl = slices(ctx, t);
    auto shift = [&](const Rat& a) -> Rat {
        Rat c = a - (1 + eps) * ctx.p / 2;
        return -(c * c) / ctx.p + (Rat(-3) - ctx.p) / 4;
    };
    LaurentQTZ out;
    // shift is convex in a; its minimum sits at c = 0
    long nc = checked_ll(floor_int(((1 + eps) * ctx.p / 2 - sl.a0) / ctx.p + Rat(1, 2)));
    auto visit = [&](long n) {
        Rat a = sl.a0 + n * ctx.p;
        Rat room = q_max - shift(a);
        if (room < kd.qconst()) return false;
        KnotWeight z = zhat_knot(ctx.graph, slice_class(ctx, sl, a), eps, f, room);
        out += laplace_transform(ctx, a, eps, z, f).truncate_q(q_max);
        return true;
    };
    for (long n = nc; visit(n) || n > nc - 2; --n) {
    }
    for (long n = nc + 1; visit(n) || n < nc + 2; ++n) {
    }
    return out;
}

std::string canonical_form(const SurgeryResult& r) {
    if (r.weights.empty()) return canonical_form(r.root);
    return canonical_form(r.root, [&](int n) { return r.weights[n].to_string(); });
}

}  // namespace plumb
