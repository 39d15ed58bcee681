#pragma once

// Independent reference computations for the tests.  They deliberately avoid
// the library's algorithms: determinants by permutation expansion, inverses by
// cofactors, lattice sets by box scans, the principal-value expansion by series
// convolution and q-series by the contour (constant term) formula.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "plumb/weights.hpp"

namespace oracle {

using plumb::Int;
using plumb::IMat;
using plumb::IVec;
using plumb::LaurentQTZ;
using plumb::Mono;
using plumb::Rat;

inline Rat frac(long a, long b) {
    Rat r(a, b);
    r.canonicalize();
    return r;
}

// Leibniz expansion; fine for the small matrices used in tests
inline Int det(const IMat& m) {
    const int n = m.n;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Int total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        Int term = inv % 2 ? -1 : 1;
        for (int i = 0; i < n && term != 0; ++i) term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline std::vector<std::vector<Int>> adjugate(const IMat& m) {
    const int n = m.n;
    std::vector<std::vector<Int>> adj(n, std::vector<Int>(n));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IMat minor(n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            adj[j][i] = ((i + j) % 2 ? -1 : 1) * det(minor);
        }
    return adj;
}

// v^T M^{-1} w by cofactors
inline Rat inv_pair(const IMat& m, const IVec& v, const IVec& w) {
    auto adj = adjugate(m);
    Int d = det(m), s = 0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) s += adj[i][j] * v[i] * w[j];
    Rat r(s, d);
    r.canonicalize();
    return r;
}

// a and b differ by an element of 2 M Z^n  <=>  adj(M)(a-b) = 0 mod 2 det(M)
inline bool same_coset(const IMat& m, const IVec& a, const IVec& b) {
    auto adj = adjugate(m);
    Int d = det(m);
    for (int i = 0; i < m.n; ++i) {
        Int s = 0;
        for (int j = 0; j < m.n; ++j) s += adj[i][j] * (a[j] - b[j]);
        Int r = s % (2 * d);
        if (r != 0) return false;
    }
    return true;
}

inline IVec lattice_point(const IMat& m, const IVec& k, const IVec& x) {
    IVec K = k;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) K[i] += 2 * m(i, j) * x[j];
    return K;
}

inline void for_box(int n, long B, const std::function<void(const IVec&)>& f) {
    IVec x(n, -B);
    for (;;) {
        f(x);
        int i = 0;
        while (i < n && x[i] == B) x[i++] = -B;
        if (i == n) return;
        ++x[i];
    }
}

inline Rat hU(const IMat& m, const IVec& K) { return (inv_pair(m, K, K) + m.n) / 4; }

// M^{-1} as exact rationals from the cofactors, for repeated evaluation
struct InverseForm {
    explicit InverseForm(const IMat& m) : n(m.n), inv(m.n, std::vector<Rat>(m.n)) {
        auto adj = adjugate(m);
        Int d = det(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                inv[i][j] = Rat(adj[i][j], d);
                inv[i][j].canonicalize();
            }
    }
    Rat pair(const IVec& v, const IVec& w) const {
        Rat s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += inv[i][j] * v[i] * w[j];
        return s;
    }
    int n;
    std::vector<std::vector<Rat>> inv;
};

struct BoxLevel {
    std::set<IVec> points;
    int components = 0;
    bool touches_boundary = false;  // a point with |x|_inf = B: box too small
};

// nearest integer point to the x minimizing |k + 2Mx|, i.e. x = -M^{-1} k / 2
inline IVec box_centre(const IMat& m, const IVec& k) {
    auto adj = adjugate(m);
    Int d = det(m);
    IVec c(m.n);
    for (int i = 0; i < m.n; ++i) {
        Int s = 0;
        for (int j = 0; j < m.n; ++j) s -= adj[i][j] * k[j];
        Rat x(s, 2 * d);
        x.canonicalize();
        Rat y = x + Rat(1, 2);
        Int f = y.get_num() / y.get_den();
        if (f * y.get_den() > y.get_num()) f -= 1;  // floor
        c[i] = f.get_si();
    }
    return c;
}

// {K = k + 2Mx : |x - centre|_inf <= B, h_U(K) >= h} with its connected
// components under the steps x -> x +- e_i
inline BoxLevel box_superlevel(const IMat& m, const IVec& k, const Rat& h, long B) {
    BoxLevel out;
    std::set<IVec> xs;
    IVec centre = box_centre(m, k);
    InverseForm f(m);
    for_box(m.n, B, [&](const IVec& y) {
        IVec x = y;
        for (int i = 0; i < m.n; ++i) x[i] += centre[i];
        IVec K = lattice_point(m, k, x);
        if ((f.pair(K, K) + m.n) / 4 >= h) {
            xs.insert(x);
            out.points.insert(K);
            for (long c : y)
                if (c == B || c == -B) out.touches_boundary = true;
        }
    });
    std::set<IVec> seen;
    for (const auto& x : xs) {
        if (seen.count(x)) continue;
        ++out.components;
        std::vector<IVec> stack{x};
        seen.insert(x);
        while (!stack.empty()) {
            IVec y = stack.back();
            stack.pop_back();
            for (int i = 0; i < m.n; ++i)
                for (int d : {-1, 1}) {
                    IVec z = y;
                    z[i] += d;
                    if (xs.count(z) && !seen.count(z)) {
                        seen.insert(z);
                        stack.push_back(z);
                    }
                }
        }
    }
    return out;
}

// Coefficients of (1 - w)^{-d} by repeated convolution with the geometric series.
inline std::vector<Int> neg_binomial_series(int d, int terms) {
    std::vector<Int> c(terms, 0);
    c[0] = 1;
    for (int r = 0; r < d; ++r)
        for (int k = 1; k < terms; ++k) c[k] += c[k - 1];  // multiply by 1/(1-w)
    return c;
}

// Coefficient of z^{-i} in the average of the expansions of (z - 1/z)^{2-n}
// around z = infinity and z = 0.
inline Rat what(int n, long i) {
    if (n <= 2) {
        // polynomial: expand (z - z^{-1})^{2-n} by repeated multiplication
        std::map<long, long> p{{0, 1}};
        for (int r = 0; r < 2 - n; ++r) {
            std::map<long, long> q;
            for (auto [e, c] : p) {
                q[e + 1] += c;
                q[e - 1] -= c;
            }
            p = q;
        }
        auto it = p.find(-i);
        return it == p.end() ? Rat(0) : Rat(it->second);
    }
    const int d = n - 2;
    const long a = std::labs(i);
    if (a < d || (a - d) % 2) return 0;
    auto c = neg_binomial_series(d, static_cast<int>((a - d) / 2) + 1);
    Int v = c.back();
    // around infinity: z^{-d} sum c_k z^{-2k}, coefficient of z^{-(d+2k)}
    // around zero: (-1)^d z^{d} sum c_k z^{2k}, coefficient of z^{d+2k}
    Rat big = i > 0 ? Rat(v) : Rat(0);
    Rat small = i < 0 ? Rat(d % 2 ? -v : v) : Rat(0);
    return (big + small) / 2;
}

// Closed series by the contour formula: constant term of
// prod_v (t^{-1/2} z_v - t^{1/2} z_v^{-1})^{2 - deg v} times the theta series
// over l in k - eps M u + 2 M Z^s, truncated at q_max; the box around the
// minimum is grown until three consecutive shells lie outside the q bound.
inline LaurentQTZ zhat_contour(const plumb::PlumbingGraph& g, const IVec& k, int eps, const Rat& q_max) {
    IMat M = g.adjacency_matrix();
    const int s = g.size();
    IVec deg = g.degrees();
    long msum = 0;
    for (long x : g.m) msum += x;
    IVec Mu(s, 0);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) Mu[i] += M(i, j);
    IVec a(s);
    for (int i = 0; i < s; ++i) a[i] = k[i] - eps * Mu[i];
    Rat q0 = -Rat(3 * s + msum) / 4;
    LaurentQTZ out;
    InverseForm inv(M);
    IVec centre = box_centre(M, a);
    int quiet = 0;
    for (long B = 0; quiet < 3; ++B) {
        bool any = false;  // some point of the shell lies inside the q bound
        for_box(s, B, [&](const IVec& y) {
            bool shell = B == 0;
            for (long c : y) shell = shell || c == B || c == -B;
            if (!shell) return;
            IVec x = y;
            for (int i = 0; i < s; ++i) x[i] += centre[i];
            IVec l = lattice_point(M, a, x);
            Rat qe = q0 - inv.pair(l, l) / 4;
            if (qe > q_max) return;
            any = true;
            Rat c = 1;
            Rat te = 0;
            for (int v = 0; v < s && c != 0; ++v) {
                // coefficient of z_v^{-l_v}: W_{deg}(l_v) t^{l_v / 2}
                c *= what(static_cast<int>(deg[v]), l[v]);
                te += frac(l[v], 2);
            }
            if (c == 0) return;
            out.add_term(c, Mono{qe, te, 0});
        });
        quiet = any ? 0 : quiet + 1;
    }
    return out;
}

// Knot term in the integral form: with l = K - eps (lambda + M u),
// q^{-(3s + sum m + lambda^T M^-1 lambda)/4 - l^T M^-1 l / 4} z^{lambda^T M^-1 l} t^{l^T u / 2}
// times the product of W over ambient vertices (degrees counted in the marked tree).
struct KnotMono {
    Rat W, q, z, t;
};

inline KnotMono knot_integral(const plumb::MarkedGraph& g, const IVec& K, int eps) {
    auto amb = g.ambient();
    IMat M = amb.adjacency_matrix();
    const int s = amb.size();
    IVec lambda = g.lambda();
    IVec deg = g.degrees();
    long msum = 0;
    for (long x : amb.m) msum += x;
    IVec l(s);
    for (int i = 0; i < s; ++i) {
        long Mu = 0;
        for (int j = 0; j < s; ++j) Mu += M(i, j);
        l[i] = K[i] - eps * (lambda[i] + Mu);
    }
    KnotMono r;
    r.W = 1;
    for (int v = 0; v < s; ++v) r.W *= what(static_cast<int>(deg[v + 1]), l[v]);
    Rat sf = inv_pair(M, lambda, lambda);
    r.q = -(Rat(3 * s + msum) + sf) / 4 - inv_pair(M, l, l) / 4;
    r.z = inv_pair(M, lambda, l);
    r.t = 0;
    for (long x : l) r.t += frac(x, 2);
    return r;
}

}  // namespace oracle
