// Python module: every operation takes a graph document (JSON text) and
// returns a JSON document; the package wrapper converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plumb/io.hpp"

namespace py = pybind11;
using namespace plumb;

namespace {

PlumbingGraph class_graph(const ParsedGraph& pg) {
    if (pg.marked()) return std::get<MarkedGraph>(pg.graph).ambient();
    return std::get<PlumbingGraph>(pg.graph);
}

IVec to_ivec(const std::vector<long>& v) { return IVec(v.begin(), v.end()); }

SpincClass pick(const SpincSpace& sp, int index, const std::optional<std::vector<long>>& rep) {
    if (rep) return sp.make(to_ivec(*rep));
    auto all = sp.enumerate();
    if (index < 0 || index >= static_cast<int>(all.size()))
        throw InvalidArgument("class index out of range (" + std::to_string(all.size()) + " classes)");
    return all[index];
}

json rep_json(const IVec& v) {
    json a = json::array();
    for (long x : v) a.push_back(x);
    return a;
}

std::string normalize(const std::string& graph) { return graph_to_json(parse_graph_text(graph).graph).dump(); }

std::string spinc(const std::string& graph) {
    auto pg = parse_graph_text(graph);
    SpincSpace sp(class_graph(pg));
    json list = json::array();
    for (const auto& k : sp.enumerate())
        list.push_back({{"rep", rep_json(k.rep)}, {"top", rat_to_json(max_hU(sp, k))}});
    return json{{"schema", kSchema}, {"kind", "spinc"}, {"count", list.size()}, {"classes", list}}.dump();
}

std::string root(const std::string& graph, int index, std::optional<std::vector<long>> rep, int depth) {
    auto pg = parse_graph_text(graph);
    SpincSpace sp(class_graph(pg));
    return root_to_json(graded_root(sp, pick(sp, index, rep), depth)).dump();
}

std::string bigraded(const std::string& graph, int index, std::optional<std::vector<long>> rep, int depth) {
    auto pg = parse_graph_text(graph);
    if (!pg.marked()) throw SchemaError("bigraded roots need a marked graph");
    const auto& g = std::get<MarkedGraph>(pg.graph);
    SpincSpace sp(g.ambient());
    return bigraded_to_json(bigraded_root(g, pick(sp, index, rep), depth)).dump();
}

std::string weighted(const std::string& graph, int index, std::optional<std::vector<long>> rep, int eps,
                     int depth, const std::string& family, const std::string& specialize) {
    auto pg = parse_graph_text(graph);
    auto fam = load_family(family);
    auto spec = Specialization::parse(specialize);
    SpincSpace sp(class_graph(pg));
    auto k = pick(sp, index, rep);
    if (!pg.marked()) {
        auto r = weighted_graded_root_closed(sp, k, eps, *fam, depth);
        for (auto& w : r.weights) w = spec.apply(w);
        return weighted_root_to_json(r).dump();
    }
    auto r = weighted_graded_root_knot(std::get<MarkedGraph>(pg.graph), k, eps, *fam, depth);
    for (auto& w : r.weights) w = spec.apply(w);
    return weighted_root_to_json(r).dump();
}

std::string zhat(const std::string& graph, int index, std::optional<std::vector<long>> rep, int eps,
                 const std::string& q_max, const std::string& family) {
    auto pg = parse_graph_text(graph);
    auto fam = load_family(family);
    SpincSpace sp(class_graph(pg));
    auto k = pick(sp, index, rep);
    Rat q = parse_rat(q_max);
    json j{{"schema", kSchema}, {"kind", "zhat"}, {"q_max", rat_to_json(q)}, {"eps", eps}};
    if (!pg.marked()) {
        auto z = zhat_closed(sp, k, eps, *fam, q);
        j["series"] = series_to_json(z);
        j["text"] = z.to_string();
    } else {
        auto w = zhat_knot(std::get<MarkedGraph>(pg.graph), k, eps, *fam, q);
        j["weight"] = weight_to_json(w);
        j["text"] = w.to_string();
    }
    return j.dump();
}

std::string neumann(const std::string& graph, const std::string& move, int index,
                    std::optional<std::vector<long>> rep) {
    auto pg = parse_graph_text(graph);
    auto mv = parse_move(move);
    json j{{"schema", kSchema}, {"kind", "neumann"}, {"move", to_string(mv)}};
    if (pg.marked()) {
        const auto& g = std::get<MarkedGraph>(pg.graph);
        SpincSpace sp(g.ambient());
        auto k = pick(sp, index, rep);
        j["graph"] = graph_to_json(apply_neumann(g, mv).graph);
        j["class"] = rep_json(beta_map(g, mv, k).rep);
    } else {
        const auto& g = std::get<PlumbingGraph>(pg.graph);
        SpincSpace sp(g);
        auto k = pick(sp, index, rep);
        j["graph"] = graph_to_json(apply_neumann(g, mv).graph);
        j["class"] = rep_json(beta_map(g, mv, k).rep);
    }
    return j.dump();
}

std::string verify(const std::string& graph, uint64_t seed, int moves, int cases, int depth,
                   const std::string& family) {
    auto pg = parse_graph_text(graph);
    auto fam = load_family(family);
    VerifyOptions opt;
    opt.seed = seed;
    opt.moves = moves;
    opt.cases = cases;
    opt.depth = depth;
    std::vector<CheckRecord> records;
    {
        py::gil_scoped_release release;
        records = pg.marked() ? verify_marked(std::get<MarkedGraph>(pg.graph), opt, *fam)
                              : verify_closed(std::get<PlumbingGraph>(pg.graph), opt, *fam);
    }
    json checks = json::array();
    bool all = true;
    for (const auto& r : records) {
        checks.push_back(check_to_json(r));
        all = all && r.pass;
    }
    return json{{"schema", kSchema}, {"kind", "verify"}, {"seed", seed}, {"all_pass", all}, {"checks", checks}}
        .dump();
}

std::string surgery(const std::string& graph, long m0, int index, std::optional<std::vector<long>> rep, int eps,
                    int depth, const std::string& family, const std::string& specialize) {
    auto pg = parse_graph_text(graph);
    if (!pg.marked()) throw SchemaError("surgery needs a marked graph");
    auto fam = load_family(family);
    auto spec = Specialization::parse(specialize);
    auto ctx = surgery_context(std::get<MarkedGraph>(pg.graph), m0);
    auto t = pick(*ctx.sur, index, rep);
    auto assembled = surgery_weighted_graded_root(ctx, t, eps, *fam, depth);
    auto direct = weighted_graded_root_closed(*ctx.sur, t, eps, *fam, depth);
    bool equal = canonical_form(assembled) == canonical_form(direct);
    for (auto& w : assembled.weights) w = spec.apply(w);
    for (auto& pw : assembled.piece_weights)
        for (auto& w : pw) w = spec.apply(w);
    for (auto& w : direct.weights) w = spec.apply(w);
    json j = surgery_to_json(assembled, equal);
    j["direct"] = weighted_root_to_json(direct);
    j["m0"] = m0;
    j["p"] = rat_to_json(ctx.p);
    return j.dump();
}

std::string axioms(int max_n, long max_i, const std::string& family) {
    auto fam = load_family(family);
    auto r = check_axioms(*fam, max_n, max_i);
    return json{{"ad1", r.ad1}, {"ad2", r.ad2}, {"ad3", r.ad3}, {"forced", r.forced}, {"first_failure", r.first_failure}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_plumbroots, m) {
    m.doc() = "graded roots, weighted roots and q-series of plumbed 3-manifolds";

    // error kinds surface as Python exceptions carrying the CLI exit code
    static py::exception<PlumbError> base(m, "PlumbError");
    static py::exception<SchemaError> schema(m, "SchemaError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SchemaError& e) {
            py::set_error(schema, e.what());
        } catch (const PlumbError& e) {
            py::set_error(base, e.what());
        }
    });

    m.attr("SCHEMA") = kSchema;
    m.def("normalize_graph", &normalize, py::arg("graph"));
    m.def("spinc", &spinc, py::arg("graph"));
    m.def("graded_root", &root, py::arg("graph"), py::arg("index") = 0, py::arg("rep") = py::none(),
          py::arg("depth") = 3);
    m.def("bigraded_root", &bigraded, py::arg("graph"), py::arg("index") = 0, py::arg("rep") = py::none(),
          py::arg("depth") = 3);
    m.def("weighted_root", &weighted, py::arg("graph"), py::arg("index") = 0, py::arg("rep") = py::none(),
          py::arg("eps") = 1, py::arg("depth") = 3, py::arg("family") = "what", py::arg("specialize") = "");
    m.def("zhat", &zhat, py::arg("graph"), py::arg("index") = 0, py::arg("rep") = py::none(), py::arg("eps") = 1,
          py::arg("q_max") = "10", py::arg("family") = "what");
    m.def("neumann", &neumann, py::arg("graph"), py::arg("move"), py::arg("index") = 0,
          py::arg("rep") = py::none());
    m.def("verify", &verify, py::arg("graph"), py::arg("seed") = 7, py::arg("moves") = 4, py::arg("cases") = 6,
          py::arg("depth") = 3, py::arg("family") = "what");
    m.def("surgery", &surgery, py::arg("graph"), py::arg("m0"), py::arg("index") = 0, py::arg("rep") = py::none(),
          py::arg("eps") = 1, py::arg("depth") = 3, py::arg("family") = "what", py::arg("specialize") = "");
    m.def("check_axioms", &axioms, py::arg("max_n") = 8, py::arg("max_i") = 20, py::arg("family") = "what");
    m.def("what", [](int n, long i) { return to_string(what_value(n, i)); }, py::arg("n"), py::arg("i"));
    m.def("set_threads", &set_num_threads, py::arg("n"));
}
