#include "plumb/weights.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "plumb/errors.hpp"

namespace plumb {

// ---------------------------------------------------------------- families

namespace {

Rat binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(r);
}

// values fixed by AD1 and AD2
Rat low_value(int n, long i) {
    switch (n) {
        case 0: return (i == 2 || i == -2) ? Rat(1) : (i == 0 ? Rat(-2) : Rat(0));
        case 1: return i == -1 ? Rat(1) : (i == 1 ? Rat(-1) : Rat(0));
        case 2: return i == 0 ? Rat(1) : Rat(0);
        default: return 0;
    }
}

}  // namespace

Rat WHatFamily::W(int n, long i) const {
    if (n < 0) throw InvalidArgument("family index must be non-negative");
    if (n <= 2) return low_value(n, i);
    const long d = n - 2;
    long a = i < 0 ? -i : i;
    if (a < d || (a - d) % 2 != 0) return 0;
    Rat c = binom((a - d) / 2 + d - 1, d - 1) / 2;
    if (i < 0 && d % 2 != 0) c = -c;
    return c;
}

const AdmissibleFamily& what_family() {
    static const WHatFamily f;
    return f;
}

Rat what_value(int n, long i) { return what_family().W(n, i); }

std::shared_ptr<TableFamily> TableFamily::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("family file: ") + e.what());
    }
    auto f = std::make_shared<TableFamily>();
    try {
        if (j.contains("name")) f->name_ = j.at("name").get<std::string>();
        if (j.contains("ad3")) f->ad3_ = j.at("ad3").get<bool>();
        f->radius_ = j.at("radius").get<long>();
        if (f->radius_ < 0) throw SchemaError("radius must be non-negative");
        const auto& vals = j.at("values");
        if (!vals.is_object()) throw SchemaError("values must map n to {i: value}");
        for (auto it = vals.begin(); it != vals.end(); ++it) {
            int n = std::stoi(it.key());
            if (n < 3) throw SchemaError("table rows start at n = 3 (lower rows are forced)");
            f->max_n_ = std::max(f->max_n_, n);
        }
        f->vals_.assign(f->max_n_ - 2, std::vector<Rat>(2 * f->radius_ + 1, Rat(0)));
        for (auto it = vals.begin(); it != vals.end(); ++it) {
            int n = std::stoi(it.key());
            for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
                long i = std::stol(jt.key());
                if (i < -f->radius_ || i > f->radius_) throw SchemaError("entry outside radius");
                std::string v = jt.value().is_string() ? jt.value().get<std::string>()
                                                        : std::to_string(jt.value().get<long>());
                f->vals_[n - 3][i + f->radius_] = parse_rat(v);
            }
        }
    } catch (const PlumbError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("family file: ") + e.what());
    }
    // AD2 inside the table (the outermost entries have no neighbours to test)
    for (int n = 3; n <= f->max_n_; ++n)
        for (long i = -f->radius_ + 1; i <= f->radius_ - 1; ++i)
            if (f->W(n, i + 1) - f->W(n, i - 1) != f->W(n - 1, i))
                throw SchemaError("family violates AD2 at n=" + std::to_string(n) + ", i=" + std::to_string(i));
    if (f->ad3_)
        for (int n = 3; n <= f->max_n_; ++n)
            for (long i = 0; i <= f->radius_; ++i) {
                Rat s = (n % 2 == 0) ? Rat(1) : Rat(-1);
                if (f->W(n, -i) != s * f->W(n, i))
                    throw AD3Violated("table claims AD3 but fails at n=" + std::to_string(n));
            }
    return f;
}

Rat TableFamily::W(int n, long i) const {
    if (n < 0) throw InvalidArgument("family index must be non-negative");
    if (n <= 2) return low_value(n, i);
    if (n > max_n_ || i < -radius_ || i > radius_) return 0;
    return vals_[n - 3][i + radius_];
}

AxiomReport check_axioms(const AdmissibleFamily& f, int max_n, long max_i) {
    AxiomReport r;
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && r.first_failure.empty()) r.first_failure = what;
        flag = false;
    };
    for (long i = -max_i; i <= max_i; ++i)
        if (f.W(2, i) != (i == 0 ? Rat(1) : Rat(0))) fail(r.ad1, "AD1 at i=" + std::to_string(i));
    for (int n = 1; n <= max_n; ++n)
        for (long i = -max_i; i <= max_i; ++i)
            if (f.W(n, i + 1) - f.W(n, i - 1) != f.W(n - 1, i))
                fail(r.ad2, "AD2 at n=" + std::to_string(n) + ", i=" + std::to_string(i));
    for (long i = -max_i; i <= max_i; ++i) {
        if (f.W(1, i) != low_value(1, i)) fail(r.forced, "W_1 at i=" + std::to_string(i));
        if (f.W(0, i) != low_value(0, i)) fail(r.forced, "W_0 at i=" + std::to_string(i));
    }
    for (int n = 0; n <= max_n; ++n)
        for (long i = 0; i <= max_i; ++i) {
            Rat s = (n % 2 == 0) ? Rat(1) : Rat(-1);
            if (f.W(n, -i) != s * f.W(n, i)) fail(r.ad3, "AD3 at n=" + std::to_string(n));
        }
    return r;
}

LaurentQTZ binomial_z_coefficient(long e, const AdmissibleFamily& f, const Rat& j) {
    if (!is_integer(j)) return {};
    long jj = checked_ll(j);
    if (e <= 2) {
        // coefficient of z^j in X^(2-n) is W_n(-j) t^(-j/2)
        Rat c = f.W(static_cast<int>(2 - e), -jj);
        return LaurentQTZ::monomial(c, 0, frac(-jj, 2), 0);
    }
    return LaurentQTZ::X().pow(static_cast<int>(e)).z_coefficient(j);
}

LaurentQTZ expand_binomial(long e, const AdmissibleFamily& f, long z_lo, long z_hi) {
    LaurentQTZ out;
    for (long j = z_lo; j <= z_hi; ++j) out += binomial_z_coefficient(e, f, j).shift(0, 0, j);
    return out;
}

namespace {

int g_threads = 1;

// out[i] = fn(i) for i < n, spread over the configured thread count
template <class T, class F>
std::vector<T> parallel_map(size_t n, F fn) {
    std::vector<T> out(n);
    int nt = std::max(1, std::min<int>(g_threads, static_cast<int>(n / 64) + 1));
    if (nt == 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < n;) out[i] = fn(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace

void set_num_threads(int n) { g_threads = std::max(1, n); }
int num_threads() { return g_threads; }

// ---------------------------------------------------------------- closed case

ClosedTerms::ClosedTerms(const SpincSpace& s, int e, const AdmissibleFamily& f) : sp(s), eps(e), fam(f) {
    if (eps != 1 && eps != -1) throw InvalidArgument("epsilon must be +1 or -1");
    const int n = sp.s();
    Mu = mul(sp.M(), ones(n));
    deg = sp.graph().degrees();
    long summ = 0;
    for (long m : sp.graph().m) summ += m;
    q0 = frac(-(3 * n + summ), 4);
    t0 = frac(-eps * dot(ones(n), Mu), 2);
}

Rat ClosedTerms::W(const IVec& K) const {
    Rat w = 1;
    for (size_t i = 0; i < K.size() && w != 0; ++i) w *= fam.W(static_cast<int>(deg[i]), K[i] - eps * Mu[i]);
    return w;
}

Rat ClosedTerms::qexp(const IVec& K) const { return -quad(sp.Minv(), sub(K, scale(eps, Mu))) / 4; }

Rat ClosedTerms::texp(const IVec& K) const {
    long s = 0;
    for (long x : K) s += x;
    return frac(s, 2);
}

LaurentQTZ ClosedTerms::term(const IVec& K) const {
    Rat w = W(K);
    if (w == 0) return {};
    return LaurentQTZ::monomial(w, q0 + qexp(K), t0 + texp(K), 0);
}

LaurentQTZ closed_vertex_term(const SpincSpace& sp, const IVec& K, int eps, const AdmissibleFamily& f) {
    return ClosedTerms(sp, eps, f).term(K);
}

LaurentQTZ closed_weight(const SpincSpace& sp, const std::vector<IVec>& points, int eps,
                         const AdmissibleFamily& f) {
    ClosedTerms ct(sp, eps, f);
    auto terms = parallel_map<LaurentQTZ>(points.size(), [&](size_t i) { return ct.term(points[i]); });
    LaurentQTZ out;
    for (auto& t : terms) out += t;
    return out;
}

namespace {

template <class T, class TermFn>
std::vector<T> node_sums(const GradedRoot& r, TermFn term) {
    auto terms = parallel_map<T>(r.points.size(), [&](size_t i) { return term(r.points[i]); });
    std::vector<T> w(r.nodes.size());
    for (size_t id = 0; id < r.nodes.size(); ++id)
        for (int p : r.nodes[id].members) w[id] += terms[p];
    return w;
}

}  // namespace

WeightedGradedRoot weigh_closed(const SpincSpace& sp, GradedRoot root, int eps, const AdmissibleFamily& f) {
    ClosedTerms ct(sp, eps, f);
    WeightedGradedRoot out;
    out.weights = node_sums<LaurentQTZ>(root, [&](const IVec& K) { return ct.term(K); });
    out.root = std::move(root);
    out.eps = eps;
    out.family = f.tag();
    return out;
}

WeightedGradedRoot weighted_graded_root_closed(const SpincSpace& sp, const SpincClass& k, int eps,
                                               const AdmissibleFamily& f, int depth) {
    return weigh_closed(sp, graded_root(sp, k, depth), eps, f);
}

LaurentQTZ zhat_closed(const SpincSpace& sp, const SpincClass& k, int eps, const AdmissibleFamily& f,
                       const Rat& q_max) {
    ClosedTerms ct(sp, eps, f);
    EllipsoidEnumerator en(sp.M());
    QVec c(sp.s());
    for (int i = 0; i < sp.s(); ++i) c[i] = eps * ct.Mu[i];
    auto pts = en.points(k.rep, c, 4 * (q_max - ct.q0));
    return closed_weight(sp, pts, eps, f);
}

// ---------------------------------------------------------------- knot case

KnotData::KnotData(const MarkedGraph& g, int eps, const AdmissibleFamily& f)
    : g_(g), amb_(g.ambient()), eps_(eps), fam_(f) {
    if (eps != 1 && eps != -1) throw InvalidArgument("epsilon must be +1 or -1");
    const int s = g.s();
    lambda_ = g.lambda();
    IVec dfull = g.degrees();
    delta0_ = dfull[0];
    delta_.assign(dfull.begin() + 1, dfull.end());
    Mu_ = mul(amb_.M(), ones(s));
    center_ = scale(eps, add(lambda_, Mu_));
    Minv_lambda_ = mul(amb_.Minv(), lambda_);
    sf_ = dot(Minv_lambda_, lambda_);
    long sumd = 0, summ = 0;
    for (int i = 0; i < s; ++i) {
        sumd += delta_[i];
        summ += g.m[i + 1];
    }
    // the degree sum here runs over every vertex of the marked tree (= 2s)
    xi0_ = -(Rat(3 * s + 2 * s + 2 * summ) + 2 * sf_) / 4;
    theta0_ = frac(-eps * (sumd + summ), 2);
    IVec K0(g.m.begin() + 1, g.m.end());  // any characteristic vector
    qconst_ = term(K0).xi + quad(amb_.Minv(), sub(K0, center_)) / 4;
}

KnotTerm KnotData::term(const IVec& K) const {
    KnotTerm t;
    t.W = 1;
    for (size_t i = 0; i < K.size() && t.W != 0; ++i)
        t.W *= fam_.W(static_cast<int>(delta_[i]), K[i] - center_[i]);
    long Ku = 0;
    for (long x : K) Ku += x;
    Rat KMl = dot(Minv_lambda_, K);
    t.xi = xi0_ - quad(amb_.Minv(), K) / 4 + eps_ * KMl / 2 + frac(eps_ * Ku, 2);
    t.zeta = KMl - eps_ * sf_ - eps_ * delta0_;
    t.theta = frac(Ku, 2) + theta0_;
    return t;
}

LaurentQTZ KnotData::monomial(const IVec& K) const {
    KnotTerm t = term(K);
    if (t.W == 0) return {};
    return LaurentQTZ::monomial(t.W, t.xi, t.theta, t.zeta);
}

KnotTerm knot_vertex_term(const MarkedGraph& g, const IVec& K, int eps, const AdmissibleFamily& f) {
    return KnotData(g, eps, f).term(K);
}

KnotWeight knot_weight(const KnotData& kd, const std::vector<IVec>& points) {
    auto terms = parallel_map<LaurentQTZ>(points.size(), [&](size_t i) { return kd.monomial(points[i]); });
    LaurentQTZ p;
    for (auto& t : terms) p += t;
    return {1 - kd.delta0(), p};
}

WeightedKnotRoot weigh_knot(const KnotData& kd, GradedRoot root) {
    WeightedKnotRoot out;
    auto sums = node_sums<LaurentQTZ>(root, [&](const IVec& K) { return kd.monomial(K); });
    for (auto& p : sums) out.weights.emplace_back(1 - kd.delta0(), std::move(p));
    out.root = std::move(root);
    out.eps = kd.eps();
    out.family = kd.family().tag();
    return out;
}

WeightedKnotRoot weighted_graded_root_knot(const MarkedGraph& g, const SpincClass& k, int eps,
                                           const AdmissibleFamily& f, int depth) {
    KnotData kd(g, eps, f);
    return weigh_knot(kd, graded_root(kd.ambient(), k, depth));
}

WeightedBigradedRoot weigh_bigraded(const KnotData& kd, BigradedRoot root) {
    WeightedBigradedRoot out;
    out.u_weights = weigh_knot(kd, root.rootU).weights;
    for (auto& nd : root.nodes) out.weights.push_back(out.u_weights[nd.coord_u]);
    out.root = std::move(root);
    out.eps = kd.eps();
    out.family = kd.family().tag();
    return out;
}

WeightedBigradedRoot weighted_bigraded_root(const MarkedGraph& g, const SpincClass& k, int eps,
                                            const AdmissibleFamily& f, int depth) {
    KnotData kd(g, eps, f);
    return weigh_bigraded(kd, bigraded_root(g, k, depth));
}

std::vector<KnotWeight> intersection_weights(const KnotData& kd, const BigradedRoot& r) {
    std::vector<KnotWeight> out;
    for (auto& nd : r.nodes) {
        std::vector<IVec> pts;
        for (int m : nd.members) pts.push_back(r.rootU.points[m]);
        out.push_back(knot_weight(kd, pts));
    }
    return out;
}

KnotWeight zhat_knot(const MarkedGraph& g, const SpincClass& k, int eps, const AdmissibleFamily& f,
                     const Rat& q_max) {
    KnotData kd(g, eps, f);
    EllipsoidEnumerator en(kd.ambient().M());
    QVec c(kd.center().begin(), kd.center().end());
    auto pts = en.points(k.rep, c, 4 * (q_max - kd.qconst()));
    return knot_weight(kd, pts);
}

// ---------------------------------------------------------------- checks

Rat required_bottom_closed(const SpincSpace& sp, const SpincClass& k, int eps, const AdmissibleFamily& f,
                           const Rat& q_max) {
    ClosedTerms ct(sp, eps, f);
    EllipsoidEnumerator en(sp.M());
    QVec c(sp.s());
    for (int i = 0; i < sp.s(); ++i) c[i] = eps * ct.Mu[i];
    Rat low = max_hU(sp, k);
    en.for_each(k.rep, c, 4 * (q_max - ct.q0), [&](const IVec& K) {
        if (ct.W(K) != 0) low = std::min(low, h_U(sp, K));
    });
    return low;
}

Rat required_bottom_knot(const KnotData& kd, const SpincClass& k, const Rat& q_max) {
    EllipsoidEnumerator en(kd.ambient().M());
    QVec c(kd.center().begin(), kd.center().end());
    Rat low = max_hU(kd.ambient(), k);
    en.for_each(k.rep, c, 4 * (q_max - kd.qconst()), [&](const IVec& K) {
        if (kd.term(K).W != 0) low = std::min(low, h_U(kd.ambient(), K));
    });
    return low;
}

namespace {

void require_stable_window(const GradedRoot& r, const Rat& need) {
    if (r.level_grading(r.depth) > need)
        throw InsufficientDepth("window bottom " + to_string(r.level_grading(r.depth)) + " above required " +
                                to_string(need));
    if (r.levels.back().size() != 1) throw InsufficientDepth("window does not end in a single node");
}

}  // namespace

bool stabilization_check(const SpincSpace& sp, const SpincClass& k, const WeightedGradedRoot& r,
                         const AdmissibleFamily& f, const Rat& q_max) {
    require_stable_window(r.root, required_bottom_closed(sp, k, r.eps, f, q_max));
    const LaurentQTZ& low = r.weights[r.root.levels.back().front()];
    return low.truncate_q(q_max) == zhat_closed(sp, k, r.eps, f, q_max).truncate_q(q_max);
}

bool stabilization_check(const KnotData& kd, const SpincClass& k, const WeightedKnotRoot& r,
                         const Rat& q_max) {
    require_stable_window(r.root, required_bottom_knot(kd, k, q_max));
    KnotWeight low = r.weights[r.root.levels.back().front()].truncate_q(q_max);
    KnotWeight z = zhat_knot(kd.graph(), k, kd.eps(), kd.family(), q_max).truncate_q(q_max);
    return low == z;
}

namespace {

void require_ad3(const AdmissibleFamily& f) {
    if (!f.claims_ad3()) throw AD3Violated("family " + f.tag() + " does not assert AD3");
    auto rep = check_axioms(f, 8, 20);
    if (!rep.ad3) throw AD3Violated(rep.first_failure);
}

}  // namespace

bool conjugation_symmetry_check(const SpincSpace& sp, const SpincClass& k, int eps,
                                const AdmissibleFamily& f, int depth) {
    require_ad3(f);
    auto a = weighted_graded_root_closed(sp, k, eps, f, depth);
    auto b = weighted_graded_root_closed(sp, sp.conjugate(k), -eps, f, depth);
    for (auto& w : a.weights) w = w.invert_t();
    return canonical_form(a) == canonical_form(b);
}

bool conjugation_symmetry_check(const MarkedGraph& g, const SpincClass& k, int eps,
                                const AdmissibleFamily& f, int depth) {
    require_ad3(f);
    auto a = weighted_graded_root_knot(g, k, eps, f, depth);
    SpincSpace amb(g.ambient());
    auto b = weighted_graded_root_knot(g, amb.conjugate(k), -eps, f, depth);
    for (auto& w : a.weights) w = w.invert_tz() * Rat(-1);
    return canonical_form(a) == canonical_form(b);
}

std::string canonical_form(const WeightedGradedRoot& r) {
    return canonical_form(r.root, [&](int n) { return r.weights[n].to_string(); });
}

std::string canonical_form(const WeightedKnotRoot& r) {
    return canonical_form(r.root, [&](int n) { return r.weights[n].canonical().to_string(); });
}

std::string canonical_form(const WeightedBigradedRoot& r) {
    return canonical_form(r.root, [&](int n) { return r.weights[n].canonical().to_string(); });
}

}  // namespace plumb
