#include "plumb/verify.hpp"

#include <sstream>

namespace plumb {

uint64_t SeededRng::next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int SeededRng::below(int n) {
    if (n <= 0) throw InvalidArgument("SeededRng::below needs n > 0");
    return static_cast<int>(next() % static_cast<uint64_t>(n));
}

namespace {

template <class G>
std::vector<NeumannMove> up_moves(const G& g, bool marked) {
    std::vector<NeumannMove> out;
    for (const auto& [a, b] : g.edges) {
        MoveKind k = marked && a == 0 ? MoveKind::A0 : MoveKind::A;
        out.push_back({k, MoveDir::Up, a, b});
    }
    const int n = static_cast<int>(g.m.size());
    for (int v = marked ? 1 : 0; v < n; ++v) out.push_back({MoveKind::B, MoveDir::Up, v, -1});
    // closed words stay on trees: C would produce a forest, which needs an
    // extra normalization the weighted root does not carry
    if (marked) out.push_back({MoveKind::B0, MoveDir::Up, 0, -1});
    return out;
}

template <class G>
std::vector<NeumannMove> word_impl(G g, int len, SeededRng& rng, bool marked) {
    std::vector<NeumannMove> word;
    for (int step = 0; step < len; ++step) {
        auto downs = blow_down_sites(g);
        std::erase_if(downs, [](const NeumannMove& mv) { return mv.kind == MoveKind::C; });
        auto ups = up_moves(g, marked);
        NeumannMove mv;
        if (!downs.empty() && rng.below(5) < 2)
            mv = downs[rng.below(static_cast<int>(downs.size()))];
        else
            mv = ups[rng.below(static_cast<int>(ups.size()))];
        g = apply_neumann(g, mv).graph;
        word.push_back(mv);
    }
    return word;
}

std::string class_text(const SpincClass& k) { return "[" + to_string(k.rep) + "]"; }

template <class Fn>
CheckRecord guarded(CheckRecord rec, Fn&& fn) {
    try {
        rec.pass = fn();
    } catch (const PlumbError& e) {
        rec.pass = false;
        rec.error = e.what();
    }
    return rec;
}

}  // namespace

std::vector<NeumannMove> random_word(const PlumbingGraph& g, int len, SeededRng& rng) {
    return word_impl(g, len, rng, false);
}

std::vector<NeumannMove> random_word(const MarkedGraph& g, int len, SeededRng& rng) {
    return word_impl(g, len, rng, true);
}

Transported transport(const PlumbingGraph& g, const SpincClass& k, const std::vector<NeumannMove>& word) {
    Transported t{g, {}, k};
    for (const auto& mv : word) {
        t.k = beta_map(t.closed, mv, t.k);
        t.closed = apply_neumann(t.closed, mv).graph;
    }
    return t;
}

Transported transport(const MarkedGraph& g, const SpincClass& k, const std::vector<NeumannMove>& word) {
    Transported t{{}, g, k};
    for (const auto& mv : word) {
        t.k = beta_map(t.marked, mv, t.k);
        t.marked = apply_neumann(t.marked, mv).graph;
    }
    return t;
}

std::string describe(const PlumbingGraph& g) {
    std::ostringstream os;
    os << "closed m=" << to_string(IVec(g.m.begin(), g.m.end())) << " e=";
    for (const auto& [a, b] : g.edges) os << a << "-" << b << ";";
    return os.str();
}

std::string describe(const MarkedGraph& g) {
    std::ostringstream os;
    os << "marked m=" << to_string(IVec(g.m.begin() + 1, g.m.end())) << " e=";
    for (const auto& [a, b] : g.edges) os << a << "-" << b << ";";
    return os.str();
}

std::string describe(const std::vector<NeumannMove>& word) {
    std::string r;
    for (const auto& mv : word) r += (r.empty() ? "" : " ") + to_string(mv);
    return r.empty() ? "(empty)" : r;
}

CheckRecord neumann_case(const PlumbingGraph& g, const SpincClass& k, int eps,
                         const std::vector<NeumannMove>& word, const AdmissibleFamily& f, int depth) {
    CheckRecord rec{"neumann", describe(g), class_text(k) + " eps=" + std::to_string(eps) + " word=" + describe(word), false, {}};
    return guarded(rec, [&] {
        SpincSpace sp(g);
        auto t = transport(g, k, word);
        SpincSpace sp2(t.closed);
        auto a = canonical_form(weighted_graded_root_closed(sp, k, eps, f, depth));
        auto b = canonical_form(weighted_graded_root_closed(sp2, t.k, eps, f, depth));
        return a == b;
    });
}

CheckRecord neumann_case(const MarkedGraph& g, const SpincClass& k, int eps,
                         const std::vector<NeumannMove>& word, const AdmissibleFamily& f, int depth) {
    CheckRecord rec{"neumann", describe(g), class_text(k) + " eps=" + std::to_string(eps) + " word=" + describe(word), false, {}};
    return guarded(rec, [&] {
        auto t = transport(g, k, word);
        auto a = canonical_form(weighted_bigraded_root(g, k, eps, f, depth));
        auto b = canonical_form(weighted_bigraded_root(t.marked, t.k, eps, f, depth));
        return a == b;
    });
}

CheckRecord surgery_case(const MarkedGraph& g, long m0, const SpincClass& t, int eps, const AdmissibleFamily& f,
                         int depth) {
    CheckRecord rec{"surgery", describe(g),
                    "m0=" + std::to_string(m0) + " " + class_text(t) + " eps=" + std::to_string(eps), false, {}};
    return guarded(rec, [&] {
        auto ctx = surgery_context(g, m0);
        auto assembled = surgery_weighted_graded_root(ctx, t, eps, f, depth);
        auto direct = weighted_graded_root_closed(*ctx.sur, t, eps, f, depth);
        return canonical_form(assembled) == canonical_form(direct);
    });
}

CheckRecord conjugation_case(const PlumbingGraph& g, const SpincClass& k, int eps, const AdmissibleFamily& f,
                             int depth) {
    CheckRecord rec{"conjugation", describe(g), class_text(k) + " eps=" + std::to_string(eps), false, {}};
    return guarded(rec, [&] { return conjugation_symmetry_check(SpincSpace(g), k, eps, f, depth); });
}

CheckRecord conjugation_case(const MarkedGraph& g, const SpincClass& k, int eps, const AdmissibleFamily& f,
                             int depth) {
    CheckRecord rec{"conjugation", describe(g), class_text(k) + " eps=" + std::to_string(eps), false, {}};
    return guarded(rec, [&] { return conjugation_symmetry_check(g, k, eps, f, depth); });
}

long definite_surgery_coefficient(const MarkedGraph& g, long extra) {
    SpincSpace amb(g.ambient());
    IVec lambda = g.lambda();
    Rat sf = quad(amb.Minv(), lambda);
    // negative definite iff m0 - sf < 0
    Int c = ceil_int(sf);
    long m0 = checked_ll(c) - 1;
    return m0 - extra;
}

std::vector<CheckRecord> verify_closed(const PlumbingGraph& g, const VerifyOptions& opt, const AdmissibleFamily& f) {
    SeededRng rng(opt.seed);
    SpincSpace sp(g);
    auto classes = sp.enumerate();
    std::vector<CheckRecord> out;
    for (int c = 0; c < opt.cases; ++c) {
        const auto& k = classes[rng.below(static_cast<int>(classes.size()))];
        int eps = rng.below(2) ? 1 : -1;
        auto word = random_word(g, 1 + rng.below(opt.moves), rng);
        out.push_back(neumann_case(g, k, eps, word, f, opt.depth));
    }
    if (opt.conjugation) {
        const auto& k = classes[rng.below(static_cast<int>(classes.size()))];
        for (int eps : {1, -1}) out.push_back(conjugation_case(g, k, eps, f, opt.depth));
    }
    return out;
}

std::vector<CheckRecord> verify_marked(const MarkedGraph& g, const VerifyOptions& opt, const AdmissibleFamily& f) {
    SeededRng rng(opt.seed);
    SpincSpace amb(g.ambient());
    auto classes = amb.enumerate();
    std::vector<CheckRecord> out;
    for (int c = 0; c < opt.cases; ++c) {
        const auto& k = classes[rng.below(static_cast<int>(classes.size()))];
        int eps = rng.below(2) ? 1 : -1;
        auto word = random_word(g, 1 + rng.below(opt.moves), rng);
        out.push_back(neumann_case(g, k, eps, word, f, opt.depth));
    }
    if (opt.surgery) {
        for (long extra : {0L, 2L}) {
            long m0 = definite_surgery_coefficient(g, extra);
            SpincSpace sur(g.surgered(m0));
            auto sc = sur.enumerate();
            const auto& t = sc[rng.below(static_cast<int>(sc.size()))];
            int eps = rng.below(2) ? 1 : -1;
            out.push_back(surgery_case(g, m0, t, eps, f, opt.depth));
        }
    }
    if (opt.conjugation) {
        const auto& k = classes[rng.below(static_cast<int>(classes.size()))];
        for (int eps : {1, -1}) out.push_back(conjugation_case(g, k, eps, f, opt.depth));
    }
    return out;
}

}  // namespace plumb
