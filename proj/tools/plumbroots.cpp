// plumbroots: command-line front end for graded roots, weighted (bi)graded
// roots, BPS q-series, Neumann moves and surgery.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "plumb/io.hpp"

using namespace plumb;

namespace {

struct Job {
    std::string graph_path;
    int class_index = 0;
    std::string class_rep;
    int eps = 1;
    std::string family = "what";
    int depth = 3;
    std::string q_max = "10";
    std::string z_window;
    std::string format = "json";
    std::string specialize;
    std::string out;
    bool require_nd = false;
    int threads = 1;
    // command specific
    bool graded = false;
    std::string move;
    uint64_t seed = 7;
    int moves = 4;
    int cases = 6;
    long m0 = 0;
    std::string weights_out;
};

void emit(const Job& job, const std::string& text) {
    if (job.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(job.out, std::ios::binary);
    if (!f) throw SchemaError("cannot write " + job.out);
    f << text;
}

void emit_json(const Job& job, const json& j) { emit(job, j.dump(2) + "\n"); }

ParsedGraph load(const Job& job) {
    auto pg = parse_graph_file(job.graph_path, job.require_nd);
    for (const auto& w : pg.warnings) std::cerr << "warning: " << w << "\n";
    return pg;
}

const MarkedGraph& need_marked(const ParsedGraph& pg, const std::string& cmd) {
    if (!pg.marked()) throw SchemaError(cmd + " requires a marked graph");
    return std::get<MarkedGraph>(pg.graph);
}

void check_eps(int eps) {
    if (eps != 1 && eps != -1) throw SchemaError("--eps must be 1 or -1");
}

// the space whose classes the command ranges over: the graph itself, or the
// ambient graph of a marked graph
PlumbingGraph class_graph(const ParsedGraph& pg) {
    if (pg.marked()) return std::get<MarkedGraph>(pg.graph).ambient();
    return std::get<PlumbingGraph>(pg.graph);
}

LaurentQTZ z_filter(const LaurentQTZ& p, const std::string& window) {
    if (window.empty()) return p;
    auto comma = window.find(',');
    if (comma == std::string::npos) throw SchemaError("--z-window expects lo,hi");
    Rat lo = parse_rat(window.substr(0, comma)), hi = parse_rat(window.substr(comma + 1));
    LaurentQTZ r;
    for (const auto& [m, c] : p.terms())
        if (m.z >= lo && m.z <= hi) r.add_term(c, m);
    return r;
}

int cmd_analyze(const Job& job) {
    auto pg = load(job);
    PlumbingGraph g = class_graph(pg);
    json j;
    j["schema"] = kSchema;
    j["kind"] = "analyze";
    j["graph"] = graph_to_json(pg.graph);
    j["marked"] = pg.marked();
    j["s"] = g.size();
    bool nd = is_negative_definite(g.adjacency_matrix());
    j["negative_definite"] = nd;
    j["tree"] = g.is_tree();
    j["determinant"] = determinant(g.adjacency_matrix()).get_str();
    if (nd) {
        SpincSpace sp(g);
        json inv = json::array();
        for (const auto& x : sp.cosets().h1_invariants()) inv.push_back(x.get_str());
        j["h1_invariants"] = inv;
        j["spinc_count"] = sp.det_abs().get_str();
        if (pg.marked()) {
            const auto& mg = std::get<MarkedGraph>(pg.graph);
            json lam = json::array();
            for (long x : mg.lambda()) lam.push_back(x);
            j["lambda"] = lam;
            j["lambda_self_pairing"] = rat_to_json(quad(sp.Minv(), mg.lambda()));
            j["marked_degree"] = mg.degrees()[0];
        }
    }
    emit_json(job, j);
    return 0;
}

int cmd_spinc(const Job& job) {
    auto pg = load(job);
    SpincSpace sp(class_graph(pg));
    auto all = sp.enumerate();
    json list = json::array();
    for (size_t i = 0; i < all.size(); ++i) {
        auto conj = sp.conjugate(all[i]);
        int ci = static_cast<int>(std::find(all.begin(), all.end(), conj) - all.begin());
        json rep = json::array();
        for (long x : all[i].rep) rep.push_back(x);
        list.push_back({{"index", i}, {"rep", rep}, {"conjugate", ci}, {"top", rat_to_json(max_hU(sp, all[i]))}});
    }
    json j;
    j["schema"] = kSchema;
    j["kind"] = "spinc";
    j["count"] = all.size();
    j["classes"] = list;
    emit_json(job, j);
    return 0;
}

int cmd_graded_root(const Job& job) {
    auto pg = load(job);
    SpincSpace sp(class_graph(pg));
    auto k = select_class(sp, job.class_index, job.class_rep);
    auto r = graded_root(sp, k, job.depth);
    if (job.format == "dot")
        emit(job, to_dot(r));
    else
        emit_json(job, root_to_json(r));
    return 0;
}

int cmd_bigraded_root(const Job& job) {
    auto pg = load(job);
    const auto& g = need_marked(pg, "bigraded-root");
    SpincSpace sp(g.ambient());
    auto k = select_class(sp, job.class_index, job.class_rep);
    auto r = bigraded_root(g, k, job.depth);
    if (job.format == "dot")
        emit(job, to_dot(r));
    else
        emit_json(job, bigraded_to_json(r));
    return 0;
}

int cmd_weighted(const Job& job) {
    check_eps(job.eps);
    auto pg = load(job);
    auto fam = load_family(job.family);
    auto spec = Specialization::parse(job.specialize);
    SpincSpace sp(class_graph(pg));
    auto k = select_class(sp, job.class_index, job.class_rep);
    if (!pg.marked()) {
        auto r = weighted_graded_root_closed(sp, k, job.eps, *fam, job.depth);
        if (job.format == "dot") {
            emit(job, dot_root(r.root, &r.weights, spec));
        } else {
            for (auto& w : r.weights) w = spec.apply(w);
            emit_json(job, weighted_root_to_json(r));
        }
        return 0;
    }
    const auto& g = std::get<MarkedGraph>(pg.graph);
    if (job.graded) {
        auto r = weighted_graded_root_knot(g, k, job.eps, *fam, job.depth);
        if (job.format == "dot") {
            emit(job, dot_root(r.root, &r.weights, spec));
        } else {
            for (auto& w : r.weights) w = spec.apply(w);
            emit_json(job, weighted_root_to_json(r));
        }
        return 0;
    }
    auto r = weighted_bigraded_root(g, k, job.eps, *fam, job.depth);
    if (job.format == "dot") {
        emit(job, dot_bigraded(r.root, &r.weights, spec));
    } else {
        std::vector<KnotWeight> ws;
        for (const auto& w : r.weights) ws.push_back(spec.apply(w));
        json j = bigraded_to_json(r.root, &ws);
        j["kind"] = "weighted-bigraded-root";
        j["eps"] = r.eps;
        j["family"] = r.family;
        emit_json(job, j);
    }
    return 0;
}

int cmd_zhat(const Job& job) {
    check_eps(job.eps);
    auto pg = load(job);
    auto fam = load_family(job.family);
    auto spec = Specialization::parse(job.specialize);
    Rat qmax = parse_rat(job.q_max);
    SpincSpace sp(class_graph(pg));
    auto k = select_class(sp, job.class_index, job.class_rep);
    json j;
    j["schema"] = kSchema;
    j["kind"] = "zhat";
    j["q_max"] = rat_to_json(qmax);
    j["eps"] = job.eps;
    if (!pg.marked()) {
        auto z = spec.apply(zhat_closed(sp, k, job.eps, *fam, qmax));
        j["series"] = series_to_json(z);
        j["text"] = z.to_string();
    } else {
        auto w = spec.apply(zhat_knot(std::get<MarkedGraph>(pg.graph), k, job.eps, *fam, qmax));
        KnotWeight shown(w.e(), z_filter(w.P(), job.z_window));
        j["weight"] = weight_to_json(shown);
        j["text"] = shown.to_string();
    }
    emit_json(job, j);
    return 0;
}

int cmd_neumann(const Job& job) {
    auto pg = load(job);
    auto mv = parse_move(job.move);
    json j;
    j["schema"] = kSchema;
    j["kind"] = "neumann";
    j["move"] = to_string(mv);
    std::vector<int> relabel;
    SpincClass k2;
    if (pg.marked()) {
        const auto& g = std::get<MarkedGraph>(pg.graph);
        SpincSpace sp(g.ambient());
        auto k = select_class(sp, job.class_index, job.class_rep);
        auto res = apply_neumann(g, mv);
        k2 = beta_map(g, mv, k);
        relabel = res.relabel;
        j["graph"] = graph_to_json(res.graph);
        j["ambient_move"] = to_string(induced_ambient_move(g, mv));
    } else {
        const auto& g = std::get<PlumbingGraph>(pg.graph);
        SpincSpace sp(g);
        auto k = select_class(sp, job.class_index, job.class_rep);
        auto res = apply_neumann(g, mv);
        k2 = beta_map(g, mv, k);
        relabel = res.relabel;
        j["graph"] = graph_to_json(res.graph);
    }
    j["relabel"] = relabel;
    json rep = json::array();
    for (long x : k2.rep) rep.push_back(x);
    j["class"] = rep;
    emit_json(job, j);
    return 0;
}

int cmd_verify(const Job& job) {
    auto pg = load(job);
    auto fam = load_family(job.family);
    VerifyOptions opt;
    opt.seed = job.seed;
    opt.moves = job.moves;
    opt.cases = job.cases;
    opt.depth = job.depth;
    auto records = pg.marked() ? verify_marked(std::get<MarkedGraph>(pg.graph), opt, *fam)
                               : verify_closed(std::get<PlumbingGraph>(pg.graph), opt, *fam);
    json checks = json::array();
    bool all = true;
    for (const auto& r : records) {
        checks.push_back(check_to_json(r));
        all = all && r.pass;
    }
    json j;
    j["schema"] = kSchema;
    j["kind"] = "verify";
    j["seed"] = job.seed;
    j["moves"] = job.moves;
    j["all_pass"] = all;
    j["checks"] = checks;
    emit_json(job, j);
    return all ? 0 : static_cast<int>(ErrorCode::Verification);
}

int cmd_surgery(const Job& job) {
    check_eps(job.eps);
    auto pg = load(job);
    const auto& g = need_marked(pg, "surgery");
    auto fam = load_family(job.family);
    auto spec = Specialization::parse(job.specialize);
    auto ctx = surgery_context(g, job.m0);
    auto t = select_class(*ctx.sur, job.class_index, job.class_rep);
    auto assembled = surgery_weighted_graded_root(ctx, t, job.eps, *fam, job.depth);
    auto direct = weighted_graded_root_closed(*ctx.sur, t, job.eps, *fam, job.depth);
    bool equal = canonical_form(assembled) == canonical_form(direct);
    if (!job.weights_out.empty()) {
        std::ofstream f(job.weights_out, std::ios::binary);
        if (!f) throw SchemaError("cannot write " + job.weights_out);
        for (size_t n = 0; n < assembled.root.nodes.size(); ++n)
            f << "node " << n << " grading " << to_string(assembled.root.grading(static_cast<int>(n))) << ": "
              << spec.apply(assembled.weights[n]).to_string() << "\n";
        for (size_t a = 0; a < assembled.a_values.size(); ++a)
            for (size_t n = 0; n < assembled.pieces[a].nodes.size(); ++n) {
                if (assembled.node_of[a][n] < 0) continue;
                f << "piece a=" << to_string(assembled.a_values[a]) << " grading "
                  << to_string(assembled.root.grading(assembled.node_of[a][n])) << ": "
                  << spec.apply(assembled.piece_weights[a][n]).to_string() << "\n";
            }
    }
    if (job.format == "dot") {
        emit(job, dot_root(assembled.root, &assembled.weights, spec));
    } else {
        auto shown = assembled;
        for (auto& w : shown.weights) w = spec.apply(w);
        for (auto& pw : shown.piece_weights)
            for (auto& w : pw) w = spec.apply(w);
        json j = surgery_to_json(shown, equal);
        auto direct_shown = direct;
        for (auto& w : direct_shown.weights) w = spec.apply(w);
        j["direct"] = weighted_root_to_json(direct_shown);
        j["m0"] = job.m0;
        j["p"] = rat_to_json(ctx.p);
        emit_json(job, j);
    }
    return equal ? 0 : static_cast<int>(ErrorCode::Verification);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted graded roots of negative definite plumbings"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may also follow the subcommand
    Job job;
    app.add_option("--threads", job.threads, "worker threads for weight evaluation")->check(CLI::PositiveNumber);
    app.add_flag("--require-nd", job.require_nd, "reject graphs that are not negative definite");

    auto common = [&](CLI::App* c) {
        c->add_option("graph", job.graph_path, "graph JSON file")->required()->check(CLI::ExistingFile);
        c->add_option("-o,--out", job.out, "write the result here instead of stdout");
    };
    auto classed = [&](CLI::App* c) {
        c->add_option("--class", job.class_index, "class index in the enumeration");
        c->add_option("--rep", job.class_rep, "class representative k1,k2,...");
    };
    auto weighted = [&](CLI::App* c) {
        c->add_option("--eps", job.eps, "epsilon, 1 or -1");
        c->add_option("--family", job.family, "'what' or a JSON table file");
        c->add_option("--specialize", job.specialize, "e.g. t=1 or q=1,t=1");
    };
    auto formatted = [&](CLI::App* c) {
        c->add_option("--format", job.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    };

    auto* analyze = app.add_subcommand("analyze", "graph invariants");
    common(analyze);
    auto* spinc = app.add_subcommand("spinc", "spin^c classes with their top gradings");
    common(spinc);
    auto* groot = app.add_subcommand("graded-root", "graded root window");
    common(groot), classed(groot), formatted(groot);
    groot->add_option("--depth", job.depth);
    auto* broot = app.add_subcommand("bigraded-root", "bigraded root window (marked graphs)");
    common(broot), classed(broot), formatted(broot);
    broot->add_option("--depth", job.depth);
    auto* wroot = app.add_subcommand("weighted", "weighted graded / bigraded root");
    common(wroot), classed(wroot), weighted(wroot), formatted(wroot);
    wroot->add_option("--depth", job.depth);
    wroot->add_flag("--graded", job.graded, "marked graphs: weighted graded root instead of bigraded");
    auto* zhat = app.add_subcommand("zhat", "truncated two- or three-variable series");
    common(zhat), classed(zhat), weighted(zhat);
    zhat->add_option("--qmax", job.q_max, "largest q exponent kept");
    zhat->add_option("--z-window", job.z_window, "lo,hi range of z exponents to print");
    auto* neumann = app.add_subcommand("neumann", "apply one Neumann move and carry the class");
    common(neumann), classed(neumann);
    neumann->add_option("--move", job.move, "e.g. B+@2, A-@4, A0+@0,1, B0+")->required();
    auto* verify = app.add_subcommand("verify", "seeded invariance, surgery and conjugation checks");
    common(verify);
    verify->add_option("--family", job.family);
    verify->add_option("--seed", job.seed);
    verify->add_option("--moves", job.moves)->check(CLI::PositiveNumber);
    verify->add_option("--cases", job.cases)->check(CLI::NonNegativeNumber);
    verify->add_option("--depth", job.depth);
    auto* surgery = app.add_subcommand("surgery", "surgered weighted root assembled from the knot complement");
    common(surgery), classed(surgery), weighted(surgery), formatted(surgery);
    surgery->add_option("--m0", job.m0, "framing of the marked vertex")->required();
    surgery->add_option("--depth", job.depth);
    surgery->add_option("--weights-out", job.weights_out, "text file with node and piece weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ErrorCode::Schema);
    }

    try {
        set_num_threads(job.threads);
        if (job.depth < 0) throw SchemaError("--depth must be non-negative");
        if (*analyze) return cmd_analyze(job);
        if (*spinc) return cmd_spinc(job);
        if (*groot) return cmd_graded_root(job);
        if (*broot) return cmd_bigraded_root(job);
        if (*wroot) return cmd_weighted(job);
        if (*zhat) return cmd_zhat(job);
        if (*neumann) return cmd_neumann(job);
        if (*verify) return cmd_verify(job);
        if (*surgery) return cmd_surgery(job);
    } catch (const PlumbError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    }
    return 0;
}
