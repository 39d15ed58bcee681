#include "plumb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "plumb/errors.hpp"

namespace plumb {

size_t IVecHash::operator()(const IVec& v) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (long x : v) {
        h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

// integers t with (t - c)^2 <= r2
std::pair<long, long> int_range(const Rat& c, const Rat& r2) {
    if (r2 < 0) return {1, 0};
    double cd = c.get_d(), rd = std::sqrt(std::max(0.0, r2.get_d()));
    long lo = static_cast<long>(std::floor(cd - rd));
    long hi = static_cast<long>(std::ceil(cd + rd));
    auto inside = [&](long t) {
        Rat d = Rat(t) - c;
        return d * d <= r2;
    };
    while (inside(lo - 1)) --lo;
    while (lo <= hi && !inside(lo)) ++lo;
    while (inside(hi + 1)) ++hi;
    while (hi >= lo && !inside(hi)) --hi;
    return {lo, hi};
}

std::vector<IVec> step_vectors(const IMat& M) {
    std::vector<IVec> st;
    for (int j = 0; j < M.n; ++j) {
        IVec c(M.n);
        for (int i = 0; i < M.n; ++i) c[i] = 2 * M(i, j);
        st.push_back(c);
        st.push_back(neg(c));
    }
    return st;
}

// Build the root from a point list whose h values are >= the bottom grading.
GradedRoot build_root(const IMat& M, const Rat& top, int depth, std::vector<IVec> pts,
                      std::vector<Rat> hs) {
    GradedRoot r;
    r.top = top;
    r.depth = depth;
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (hs[a] != hs[b]) return hs[a] > hs[b];
        return pts[a] < pts[b];
    });
    for (int i : order) {
        r.points.push_back(pts[i]);
        r.h.push_back(hs[i]);
    }
    const int n = static_cast<int>(r.points.size());
    for (int i = 0; i < n; ++i) r.index.emplace(r.points[i], i);
    auto steps = step_vectors(M);
    UnionFind uf(n);
    int added = 0;
    r.levels.resize(depth + 1);
    r.node_of_point.assign(depth + 1, std::vector<int>(n, -1));
    for (int lv = 0; lv <= depth; ++lv) {
        Rat g = top - 2 * lv;
        while (added < n && r.h[added] >= g) {
            for (auto& st : steps) {
                auto it = r.index.find(add(r.points[added], st));
                if (it != r.index.end() && it->second < added) uf.unite(added, it->second);
            }
            ++added;
        }
        std::map<int, int> root_to_node;
        for (int p = 0; p < added; ++p) {
            int rt = uf.find(p);
            auto [it, fresh] = root_to_node.emplace(rt, static_cast<int>(r.nodes.size()));
            if (fresh) {
                GradedRoot::Node nd;
                nd.level = lv;
                r.nodes.push_back(nd);
                r.levels[lv].push_back(it->second);
            }
            r.nodes[it->second].members.push_back(p);
            r.node_of_point[lv][p] = it->second;
        }
        if (lv > 0)
            for (int id : r.levels[lv - 1]) {
                int par = r.node_of_point[lv][r.nodes[id].members.front()];
                r.nodes[id].parent = par;
                r.nodes[par].children.push_back(id);
            }
    }
    return r;
}

int levels_to(const Rat& top, const Rat& h_min) {
    if (h_min >= top) return 0;
    return static_cast<int>(checked_ll(ceil_int((top - h_min) / 2)));
}

}  // namespace

// ---------------------------------------------------------------- enumeration

EllipsoidEnumerator::EllipsoidEnumerator(const IMat& M) : M_(M), Minv_(inverse(M)), d_(M.n), L_(M.n) {
    const int n = M.n;
    QMat A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = -M(i, j);
    for (int j = 0; j < n; ++j) {
        Rat dj = A(j, j);
        for (int k = 0; k < j; ++k) dj -= L_(j, k) * L_(j, k) * d_[k];
        if (dj <= 0) throw NotNegativeDefinite("enumerator: matrix not negative definite");
        d_[j] = dj;
        L_(j, j) = 1;
        for (int i = j + 1; i < n; ++i) {
            Rat v = A(i, j);
            for (int k = 0; k < j; ++k) v -= L_(i, k) * L_(j, k) * d_[k];
            L_(i, j) = v / dj;
        }
    }
}

void EllipsoidEnumerator::for_each(const IVec& k, const QVec& c, const Rat& R,
                                   const std::function<void(const IVec&)>& f) const {
    const int n = M_.n;
    if (R < 0) return;
    // K = k + 2 M x, centre in x-coordinates y = M^{-1}(c - k)/2
    QVec diff(n);
    for (int i = 0; i < n; ++i) diff[i] = c[i] - k[i];
    QVec y = mul(Minv_, diff);
    for (auto& v : y) v /= 2;
    Rat B = R / 4;
    std::vector<long> x(n, 0);
    std::function<void(int, const Rat&)> rec = [&](int j, const Rat& budget) {
        if (j < 0) {
            IVec K = k;
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) K[i] += 2 * M_(i, l) * x[l];
            f(K);
            return;
        }
        Rat cen = y[j];
        for (int i = j + 1; i < n; ++i) cen -= L_(i, j) * (Rat(x[i]) - y[i]);
        auto [lo, hi] = int_range(cen, budget / d_[j]);
        for (long t = lo; t <= hi; ++t) {
            x[j] = t;
            Rat dd = Rat(t) - cen;
            rec(j - 1, budget - d_[j] * dd * dd);
        }
        x[j] = 0;
    };
    rec(n - 1, B);
}

std::vector<IVec> EllipsoidEnumerator::points(const IVec& k, const QVec& c, const Rat& R) const {
    std::vector<IVec> out;
    for_each(k, c, R, [&](const IVec& K) { out.push_back(K); });
    return out;
}

Rat h_U(const SpincSpace& sp, const IVec& K) { return (quad(sp.Minv(), K) + sp.s()) / 4; }

Rat h_V(const SpincSpace& amb, const IVec& lambda, const IVec& K) {
    return h_U(amb, add(K, scale(2, lambda)));
}

Rat alexander(const SpincSpace& amb, const IVec& lambda, const IVec& K) {
    return (h_U(amb, K) - h_V(amb, lambda, K)) / 2;
}

Rat max_hU(const SpincSpace& sp, const SpincClass& k) {
    const int n = sp.s();
    const IMat& M = sp.M();
    auto f = [&](const IVec& K) -> Rat { return -quad(sp.Minv(), K); };
    // start near the real minimiser x = -M^{-1}k/2, then descend greedily
    QVec y = mul(sp.Minv(), k.rep);
    IVec x(n);
    for (int i = 0; i < n; ++i) {
        Rat yi = -y[i] / 2;
        x[i] = checked_ll(floor_int(yi + Rat(1, 2)));
    }
    IVec K = add(k.rep, scale(2, mul(M, x)));
    Rat best = f(K);
    auto steps = step_vectors(M);
    for (bool improved = true; improved;) {
        improved = false;
        for (auto& st : steps) {
            IVec K2 = add(K, st);
            Rat v = f(K2);
            if (v < best) {
                best = v;
                K = K2;
                improved = true;
            }
        }
    }
    EllipsoidEnumerator en(M);
    en.for_each(k.rep, QVec(n, Rat(0)), best, [&](const IVec& P) {
        Rat v = f(P);
        if (v < best) best = v;
    });
    return (Rat(n) - best) / 4;
}

LatticeCloud enumerate_superlevel(const SpincSpace& sp, const SpincClass& k, const Rat& h) {
    Rat diff = h - h_U(sp, k.rep);
    if (!is_integer(diff) || Int(diff.get_num()) % 2 != 0)
        throw GradingParity("level " + to_string(h) + " is not in 2Z + h_U(k)");
    LatticeCloud c;
    EllipsoidEnumerator en(sp.M());
    Rat R = Rat(sp.s()) - 4 * h;
    c.points = en.points(k.rep, QVec(sp.s(), Rat(0)), R);
    std::sort(c.points.begin(), c.points.end());
    for (auto& K : c.points) c.h.push_back(h_U(sp, K));
    std::unordered_map<IVec, int, IVecHash> idx;
    for (size_t i = 0; i < c.points.size(); ++i) idx.emplace(c.points[i], static_cast<int>(i));
    UnionFind uf(c.points.size());
    for (size_t i = 0; i < c.points.size(); ++i)
        for (auto& st : step_vectors(sp.M())) {
            auto it = idx.find(add(c.points[i], st));
            if (it != idx.end()) uf.unite(static_cast<int>(i), it->second);
        }
    std::map<int, int> lab;
    for (size_t i = 0; i < c.points.size(); ++i) {
        auto [it, fresh] = lab.emplace(uf.find(static_cast<int>(i)), c.ncomp);
        if (fresh) ++c.ncomp;
        c.component.push_back(it->second);
    }
    return c;
}

// ---------------------------------------------------------------- graded roots

int GradedRoot::level_of(const Rat& g) const {
    Rat d = (top - g) / 2;
    if (!is_integer(d)) return -1;
    long l = checked_ll(d);
    if (l < 0 || l > depth) return -1;
    return static_cast<int>(l);
}

int GradedRoot::find_point(const IVec& K) const {
    auto it = index.find(K);
    return it == index.end() ? -1 : it->second;
}

int GradedRoot::node_containing(const IVec& K, int level) const {
    int p = find_point(K);
    if (p < 0 || level < 0 || level > depth) return -1;
    return node_of_point[level][p];
}

GradedRoot graded_root(const SpincSpace& sp, const SpincClass& k, int depth) {
    if (depth < 0) throw InvalidArgument("depth must be non-negative");
    Rat top = max_hU(sp, k);
    Rat bottom = top - 2 * depth;
    EllipsoidEnumerator en(sp.M());
    auto pts = en.points(k.rep, QVec(sp.s(), Rat(0)), Rat(sp.s()) - 4 * bottom);
    std::vector<Rat> hs;
    for (auto& K : pts) hs.push_back(h_U(sp, K));
    return build_root(sp.M(), top, depth, std::move(pts), std::move(hs));
}

GradedRoot graded_root_to(const SpincSpace& sp, const SpincClass& k, const Rat& h_min) {
    Rat top = max_hU(sp, k);
    return graded_root(sp, k, levels_to(top, h_min));
}

// ---------------------------------------------------------------- bigraded roots

BigradedRoot bigraded_root(const MarkedGraph& g, const SpincClass& k, int depth) {
    SpincSpace amb(g.ambient());
    Rat tu = max_hU(amb, k);
    Rat tv = max_hU(amb, amb.make(add(k.rep, scale(2, g.lambda()))));
    return bigraded_root_window(g, k, tu - 2 * depth, tv - 2 * depth);
}

BigradedRoot bigraded_root_window(const MarkedGraph& g, const SpincClass& k, const Rat& i_min,
                                  const Rat& j_min, const GradedRoot* rootU, const GradedRoot* rootV) {
    SpincSpace amb(g.ambient());
    BigradedRoot b;
    b.lambda = g.lambda();
    SpincClass kv = amb.make(add(k.rep, scale(2, b.lambda)));
    b.rootU = rootU ? *rootU : graded_root_to(amb, k, i_min);
    b.rootV = rootV ? *rootV : graded_root_to(amb, kv, j_min);
    b.depthU = std::min(levels_to(b.rootU.top, i_min), b.rootU.depth);
    b.depthV = std::min(levels_to(b.rootV.top, j_min), b.rootV.depth);
    if (b.rootU.level_grading(b.depthU) > i_min && b.rootU.top >= i_min)
        throw InsufficientDepth("U root does not reach grading " + to_string(i_min));
    if (b.rootV.level_grading(b.depthV) > j_min && b.rootV.top >= j_min)
        throw InsufficientDepth("V root does not reach grading " + to_string(j_min));

    const GradedRoot& U = b.rootU;
    const Rat ibot = U.level_grading(b.depthU);
    int np = 0;
    while (np < static_cast<int>(U.points.size()) && U.h[np] >= ibot) ++np;
    std::vector<Rat> hv(np);
    std::vector<IVec> shifted(np);
    for (int p = 0; p < np; ++p) {
        shifted[p] = add(U.points[p], scale(2, b.lambda));
        hv[p] = h_U(amb, shifted[p]);
    }
    auto steps = step_vectors(amb.M());
    b.cell.assign(b.depthU + 1, std::vector<std::vector<int>>(b.depthV + 1));
    // node_at[iu][jv][p]
    std::vector<std::vector<std::vector<int>>> node_at(
        b.depthU + 1, std::vector<std::vector<int>>(b.depthV + 1, std::vector<int>(np, -1)));
    for (int jv = 0; jv <= b.depthV; ++jv) {
        Rat j = b.rootV.level_grading(jv);
        UnionFind uf(np);
        std::vector<char> active(np, 0);
        int cursor = 0;
        for (int iu = 0; iu <= b.depthU; ++iu) {
            Rat i = U.level_grading(iu);
            while (cursor < np && U.h[cursor] >= i) {
                if (hv[cursor] >= j) {
                    active[cursor] = 1;
                    for (auto& st : steps) {
                        int q = U.find_point(add(U.points[cursor], st));
                        if (q >= 0 && q < cursor && active[q]) uf.unite(cursor, q);
                    }
                }
                ++cursor;
            }
            std::map<int, int> root_to_node;
            for (int p = 0; p < cursor; ++p) {
                if (!active[p]) continue;
                auto [it, fresh] = root_to_node.emplace(uf.find(p), static_cast<int>(b.nodes.size()));
                if (fresh) {
                    BigradedRoot::Node nd;
                    nd.iu = iu;
                    nd.jv = jv;
                    nd.coord_u = U.node_of_point[iu][p];
                    nd.coord_v = b.rootV.node_containing(shifted[p], jv);
                    if (nd.coord_v < 0) throw InsufficientDepth("V coordinate outside the V window");
                    b.nodes.push_back(nd);
                    b.cell[iu][jv].push_back(it->second);
                }
                b.nodes[it->second].members.push_back(p);
                node_at[iu][jv][p] = it->second;
            }
        }
    }
    for (auto& nd : b.nodes) {
        int p = nd.members.front();
        if (nd.iu + 1 <= b.depthU) nd.down_u = node_at[nd.iu + 1][nd.jv][p];
        if (nd.jv + 1 <= b.depthV) nd.down_v = node_at[nd.iu][nd.jv + 1][p];
    }
    return b;
}

GradedRoot collapse_U(const BigradedRoot& r) {
    // at the lowest V level every U superlevel set must already be inside S^V
    const GradedRoot& U = r.rootU;
    Rat ibot = U.level_grading(r.depthU);
    std::set<int> inV;
    for (int id : r.cell[r.depthU][r.depthV])
        for (int m : r.nodes[id].members) inV.insert(m);
    for (size_t p = 0; p < U.points.size() && U.h[p] >= ibot; ++p)
        if (!inV.count(static_cast<int>(p)))
            throw InsufficientDepth("S^U not contained in the lowest S^V of the window");
    GradedRoot out;
    out.top = U.top;
    out.depth = r.depthU;
    out.levels.resize(r.depthU + 1);
    std::map<int, int> id;
    for (int iu = 0; iu <= r.depthU; ++iu)
        for (int n : r.cell[iu][r.depthV]) {
            id[n] = static_cast<int>(out.nodes.size());
            GradedRoot::Node nd;
            nd.level = iu;
            nd.members = r.nodes[n].members;
            out.nodes.push_back(nd);
            out.levels[iu].push_back(id[n]);
        }
    for (auto [n, m] : id) {
        int d = r.nodes[n].down_u;
        if (d >= 0) {
            out.nodes[m].parent = id.at(d);
            out.nodes[id.at(d)].children.push_back(m);
        }
    }
    return out;
}

GradedRoot collapse_V(const BigradedRoot& r) {
    // every point of the V window, shifted back by -2 lambda, must lie in the lowest S^U
    const GradedRoot& V = r.rootV;
    Rat jbot = V.level_grading(r.depthV);
    std::set<IVec> inU;
    for (int id : r.cell[r.depthU][r.depthV])
        for (int m : r.nodes[id].members) inU.insert(r.rootU.points[m]);
    for (size_t p = 0; p < V.points.size(); ++p) {
        if (V.h[p] < jbot) break;
        if (!inU.count(sub(V.points[p], scale(2, r.lambda))))
            throw InsufficientDepth("S^V not contained in the lowest S^U of the window");
    }
    GradedRoot out;
    out.top = V.top;
    out.depth = r.depthV;
    out.levels.resize(r.depthV + 1);
    std::map<int, int> id;
    for (int jv = 0; jv <= r.depthV; ++jv)
        for (int n : r.cell[r.depthU][jv]) {
            id[n] = static_cast<int>(out.nodes.size());
            GradedRoot::Node nd;
            nd.level = jv;
            nd.members = r.nodes[n].members;
            out.nodes.push_back(nd);
            out.levels[jv].push_back(id[n]);
        }
    for (auto [n, m] : id) {
        int d = r.nodes[n].down_v;
        if (d >= 0) {
            out.nodes[m].parent = id.at(d);
            out.nodes[id.at(d)].children.push_back(m);
        }
    }
    return out;
}

SpincClass apply_automorphism(const SpincSpace& sp, const SpincClass& k, const std::vector<int>& perm) {
    const int n = sp.s();
    const auto& g = sp.graph();
    if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation has wrong size");
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || seen[perm[i]]) throw InvalidArgument("not a permutation");
        seen[perm[i]] = 1;
        if (g.m[perm[i]] != g.m[i]) throw InvalidArgument("permutation does not preserve framings");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sp.M()(i, j) != sp.M()(perm[i], perm[j]))
                throw InvalidArgument("permutation is not a graph automorphism");
    IVec out(n);
    for (int i = 0; i < n; ++i) out[perm[i]] = k.rep[i];
    return sp.make(out);
}

// ---------------------------------------------------------------- canonical forms

std::string hash_hex(const std::string& s) {
    uint64_t h1 = 1469598103934665603ull, h2 = 0x84222325cbf29ce4ull;
    for (unsigned char ch : s) {
        h1 ^= ch;
        h1 *= 1099511628211ull;
        h2 += ch + 0x9e3779b97f4a7c15ull;
        h2 ^= h2 >> 29;
        h2 *= 0xbf58476d1ce4e5b9ull;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%016lx%016lx", static_cast<unsigned long>(h1),
                  static_cast<unsigned long>(h2));
    return buf;
}

namespace {

std::vector<std::string> subtree_labels(const GradedRoot& r, const std::function<std::string(int)>& label) {
    std::vector<std::string> sub(r.nodes.size());
    for (int lv = 0; lv <= r.depth; ++lv)
        for (int id : r.levels[lv]) {
            std::vector<std::string> ch;
            for (int c : r.nodes[id].children) ch.push_back(sub[c]);
            std::sort(ch.begin(), ch.end());
            std::string s = "(" + to_string(r.grading(id));
            if (label) s += ":" + label(id);
            s += "[";
            for (size_t i = 0; i < ch.size(); ++i) s += (i ? "," : "") + ch[i];
            s += "])";
            sub[id] = s;
        }
    return sub;
}

}  // namespace

std::string canonical_form(const GradedRoot& r, const std::function<std::string(int)>& label) {
    auto sub = subtree_labels(r, label);
    std::vector<std::string> roots;
    for (size_t id = 0; id < r.nodes.size(); ++id)
        if (r.nodes[id].parent < 0) roots.push_back(sub[id]);
    std::sort(roots.begin(), roots.end());
    std::string s = "root{" + to_string(r.level_grading(r.depth)) + "}";
    for (auto& x : roots) s += x;
    return s;
}

std::vector<std::string> position_labels(const GradedRoot& r, const std::function<std::string(int)>& label) {
    auto sub = subtree_labels(r, label);
    std::vector<std::string> pos(r.nodes.size());
    for (int lv = r.depth; lv >= 0; --lv)
        for (int id : r.levels[lv]) {
            int par = r.nodes[id].parent;
            pos[id] = hash_hex((par >= 0 ? pos[par] : std::string("^")) + "/" + sub[id]);
        }
    return pos;
}

std::string canonical_form(const BigradedRoot& r, const std::function<std::string(int)>& label) {
    auto pu = position_labels(r.rootU);
    auto pv = position_labels(r.rootV);
    const size_t n = r.nodes.size();
    std::vector<std::vector<int>> up_u(n), up_v(n);
    for (size_t i = 0; i < n; ++i) {
        if (r.nodes[i].down_u >= 0) up_u[r.nodes[i].down_u].push_back(static_cast<int>(i));
        if (r.nodes[i].down_v >= 0) up_v[r.nodes[i].down_v].push_back(static_cast<int>(i));
    }
    std::vector<std::string> col(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& nd = r.nodes[i];
        col[i] = hash_hex(to_string(r.gradingU(static_cast<int>(i))) + "," +
                          to_string(r.gradingV(static_cast<int>(i))) + "|" +
                          (label ? label(static_cast<int>(i)) : std::string()) + "|" + pu[nd.coord_u] +
                          "|" + pv[nd.coord_v]);
    }
    auto classes = [](const std::vector<std::string>& c) { return std::set<std::string>(c.begin(), c.end()).size(); };
    size_t ncls = classes(col);
    int rounds = 0;
    for (;;) {
        std::vector<std::string> nxt(n);
        for (size_t i = 0; i < n; ++i) {
            const auto& nd = r.nodes[i];
            std::string s = col[i] + "|U" + (nd.down_u >= 0 ? col[nd.down_u] : "-") + "|V" +
                            (nd.down_v >= 0 ? col[nd.down_v] : "-");
            std::vector<std::string> a, b;
            for (int x : up_u[i]) a.push_back(col[x]);
            for (int x : up_v[i]) b.push_back(col[x]);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            s += "|u";
            for (auto& x : a) s += x;
            s += "|v";
            for (auto& x : b) s += x;
            nxt[i] = hash_hex(s);
        }
        ++rounds;
        size_t nc = classes(nxt);
        col = std::move(nxt);
        if (nc == ncls) break;
        ncls = nc;
    }
    std::sort(col.begin(), col.end());
    std::string s = "biroot{" + to_string(r.rootU.level_grading(r.depthU)) + "," +
                    to_string(r.rootV.level_grading(r.depthV)) + "," + std::to_string(rounds) + "}";
    for (auto& c : col) s += c;
    return s;
}

// ---------------------------------------------------------------- DOT

std::string to_dot(const GradedRoot& r, const std::function<std::string(int)>& label) {
    std::ostringstream os;
    os << "digraph graded_root {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
    for (int lv = r.depth; lv >= 0; --lv) {
        os << "  { rank=same;";
        for (int id : r.levels[lv]) os << " n" << id << ";";
        os << " }\n";
    }
    for (size_t id = 0; id < r.nodes.size(); ++id) {
        os << "  n" << id << " [label=\"" << to_string(r.grading(static_cast<int>(id)));
        if (label) os << "\\n" << label(static_cast<int>(id));
        os << "\"];\n";
    }
    for (size_t id = 0; id < r.nodes.size(); ++id)
        if (r.nodes[id].parent >= 0) os << "  n" << r.nodes[id].parent << " -> n" << id << " [dir=none];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const BigradedRoot& r, const std::function<std::string(int)>& label) {
    std::ostringstream os;
    os << "digraph bigraded_root {\n  node [shape=circle, fontsize=10];\n";
    for (size_t id = 0; id < r.nodes.size(); ++id) {
        const auto& nd = r.nodes[id];
        int slot = 0;
        const auto& c = r.cell[nd.iu][nd.jv];
        slot = static_cast<int>(std::find(c.begin(), c.end(), static_cast<int>(id)) - c.begin());
        os << "  n" << id << " [label=\"(" << to_string(r.gradingU(static_cast<int>(id))) << ","
           << to_string(r.gradingV(static_cast<int>(id))) << ")";
        if (label) os << "\\n" << label(static_cast<int>(id));
        os << "\", pos=\"" << (2 * nd.jv + 0.4 * slot) << "," << (-2 * nd.iu) << "!\"];\n";
    }
    for (size_t id = 0; id < r.nodes.size(); ++id) {
        const auto& nd = r.nodes[id];
        if (nd.down_u >= 0) os << "  n" << id << " -> n" << nd.down_u << " [dir=none, style=solid];\n";
        if (nd.down_v >= 0) os << "  n" << id << " -> n" << nd.down_v << " [dir=none, style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace plumb
