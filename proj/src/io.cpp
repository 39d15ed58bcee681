#include "plumb/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace plumb {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

long need_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
    return j.get<long>();
}

void check_schema(const json& j) {
    if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema)
        throw SchemaError("unsupported schema " + j.at("schema").dump());
}

json stamp(json body) {
    json out;
    out["schema"] = kSchema;
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

}  // namespace

// ---------------------------------------------------------------- graphs

ParsedGraph parse_graph(const json& j, bool require_nd) {
    check_schema(j);
    const json& verts = need(j, "vertices");
    if (!verts.is_array() || verts.empty()) throw SchemaError("'vertices' must be a non-empty array");
    const int n = static_cast<int>(verts.size());
    std::vector<std::optional<long>> framing(n);
    std::vector<bool> seen(n, false);
    int marked = -1;
    for (const auto& v : verts) {
        long id = need_int(need(v, "id"), "vertex id");
        if (id < 0 || id >= n) throw SchemaError("vertex ids must be 0.." + std::to_string(n - 1));
        if (seen[id]) throw SchemaError("duplicate vertex id " + std::to_string(id));
        seen[id] = true;
        bool is_marked = v.contains("marked") && v.at("marked").is_boolean() && v.at("marked").get<bool>();
        const json& f = need(v, "framing");
        if (f.is_null()) {
            if (!is_marked) throw SchemaError("framing null is only legal on the marked vertex");
        } else {
            if (is_marked) throw SchemaError("the marked vertex carries no framing");
            framing[id] = need_int(f, "framing");
        }
        if (is_marked) {
            if (marked >= 0) throw SchemaError("at most one marked vertex");
            marked = static_cast<int>(id);
        }
    }
    // marked vertex -> index 0, others keep their order
    std::vector<int> pos(n);
    {
        int next = marked >= 0 ? 1 : 0;
        for (int i = 0; i < n; ++i) pos[i] = (i == marked) ? 0 : next++;
    }
    std::vector<Edge> edges;
    std::set<Edge> seen_e;
    const json& ej = need(j, "edges");
    if (!ej.is_array()) throw SchemaError("'edges' must be an array");
    for (const auto& e : ej) {
        if (!e.is_array() || e.size() != 2) throw SchemaError("edge must be a pair of ids");
        long a = need_int(e[0], "edge end"), b = need_int(e[1], "edge end");
        if (a < 0 || a >= n || b < 0 || b >= n) throw SchemaError("edge names an unknown vertex");
        if (a == b) throw SchemaError("self-loop at vertex " + std::to_string(a));
        Edge ed{std::min(pos[a], pos[b]), std::max(pos[a], pos[b])};
        if (!seen_e.insert(ed).second)
            throw SchemaError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
        edges.push_back(ed);
    }
    ParsedGraph out;
    IMat M;
    if (marked >= 0) {
        if (n < 2) throw SchemaError("a marked graph needs at least one weighted vertex");
        std::vector<long> m(n, 0);
        for (int i = 0; i < n; ++i)
            if (i != marked) m[pos[i]] = *framing[i];
        MarkedGraph g;
        try {
            g = MarkedGraph(m, edges);
        } catch (const PlumbError& e) {
            throw SchemaError(e.what());
        }
        M = g.ambient_matrix();
        out.graph = g;
    } else {
        std::vector<long> m(n);
        for (int i = 0; i < n; ++i) m[i] = *framing[i];
        PlumbingGraph g;
        try {
            g = PlumbingGraph(m, edges);
        } catch (const PlumbError& e) {
            throw SchemaError(e.what());
        }
        M = g.adjacency_matrix();
        out.graph = g;
    }
    if (!is_negative_definite(M)) {
        if (require_nd) throw NotNegativeDefinite("intersection form is not negative definite");
        out.warnings.push_back("intersection form is not negative definite");
    }
    return out;
}

ParsedGraph parse_graph_text(const std::string& text, bool require_nd) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return parse_graph(j, require_nd);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ParsedGraph parse_graph_file(const std::string& path, bool require_nd) {
    return parse_graph_text(read_file(path), require_nd);
}

json graph_to_json(const PlumbingGraph& g) {
    json verts = json::array();
    for (int i = 0; i < g.size(); ++i) verts.push_back({{"id", i}, {"framing", g.m[i]}});
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return stamp({{"vertices", verts}, {"edges", edges}});
}

json graph_to_json(const MarkedGraph& g) {
    json verts = json::array();
    verts.push_back({{"id", 0}, {"framing", nullptr}, {"marked", true}});
    for (int i = 1; i <= g.s(); ++i) verts.push_back({{"id", i}, {"framing", g.m[i]}});
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return stamp({{"vertices", verts}, {"edges", edges}});
}

json graph_to_json(const AnyGraph& g) {
    return std::visit([](const auto& x) { return graph_to_json(x); }, g);
}

// ---------------------------------------------------------------- series and weights

json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const PlumbError& e) {
            throw SchemaError(e.what());
        }
    }
    throw SchemaError("expected a rational string, got " + j.dump());
}

json series_to_json(const LaurentQTZ& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["q"] = rat_to_json(m.q);
        t["t"] = rat_to_json(m.t);
        t["z"] = is_integer(m.z) ? json(checked_ll(m.z)) : rat_to_json(m.z);
        t["c"] = rat_to_json(c);
        out.push_back(t);
    }
    return out;
}

LaurentQTZ series_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("series must be an array of terms");
    LaurentQTZ p;
    for (const auto& t : j)
        p.add_term(rat_from_json(need(t, "c")),
                   Mono{rat_from_json(need(t, "q")), rat_from_json(need(t, "t")), rat_from_json(need(t, "z"))});
    return p;
}

json weight_to_json(const KnotWeight& w) { return {{"X", w.e()}, {"P", series_to_json(w.P())}}; }

KnotWeight weight_from_json(const json& j) {
    return KnotWeight(need_int(need(j, "X"), "X exponent"), series_from_json(need(j, "P")));
}

Specialization Specialization::parse(const std::string& s) {
    Specialization sp;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (item.empty()) continue;
        if (item == "q=1")
            sp.q1 = true;
        else if (item == "t=1")
            sp.t1 = true;
        else if (item == "z=1")
            sp.z1 = true;
        else
            throw SchemaError("unsupported specialization '" + item + "' (use q=1, t=1, z=1)");
    }
    return sp;
}

LaurentQTZ Specialization::apply(const LaurentQTZ& p) const {
    LaurentQTZ r = p;
    if (q1) r = r.at_q1();
    if (t1) r = r.at_t1();
    if (z1) r = r.at_z1();
    return r;
}

KnotWeight Specialization::apply(const KnotWeight& w) const {
    if (z1) throw InvalidArgument("z=1 is a pole of knot weights with negative X exponent");
    KnotWeight r = w.canonical();
    if (q1) r = r.at_q1();
    if (t1) r = r.at_t1();
    return r;
}

// ---------------------------------------------------------------- roots

json root_to_json(const GradedRoot& r) {
    json nodes = json::array();
    for (size_t i = 0; i < r.nodes.size(); ++i)
        nodes.push_back({{"id", i},
                         {"grading", rat_to_json(r.grading(static_cast<int>(i)))},
                         {"level", r.nodes[i].level},
                         {"parent", r.nodes[i].parent}});
    return stamp({{"kind", "graded-root"}, {"top", rat_to_json(r.top)}, {"depth", r.depth}, {"nodes", nodes}});
}

GradedRoot root_from_json(const json& j) {
    check_schema(j);
    GradedRoot r;
    r.top = rat_from_json(need(j, "top"));
    r.depth = static_cast<int>(need_int(need(j, "depth"), "depth"));
    if (r.depth < 0) throw SchemaError("negative depth");
    r.levels.resize(r.depth + 1);
    const json& nodes = need(j, "nodes");
    if (!nodes.is_array()) throw SchemaError("'nodes' must be an array");
    r.nodes.resize(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        const json& n = nodes[i];
        if (need_int(need(n, "id"), "node id") != static_cast<long>(i)) throw SchemaError("node ids must be 0..n-1");
        int lv = static_cast<int>(need_int(need(n, "level"), "level"));
        if (lv < 0 || lv > r.depth) throw SchemaError("node level outside the window");
        r.nodes[i].level = lv;
        r.nodes[i].parent = static_cast<int>(need_int(need(n, "parent"), "parent"));
        r.levels[lv].push_back(static_cast<int>(i));
    }
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        int p = r.nodes[i].parent;
        if (p < 0) continue;
        if (p >= static_cast<int>(r.nodes.size()) || r.nodes[p].level != r.nodes[i].level + 1)
            throw SchemaError("parent must sit one level below");
        r.nodes[p].children.push_back(static_cast<int>(i));
    }
    return r;
}

bool same_structure(const GradedRoot& a, const GradedRoot& b) {
    if (a.top != b.top || a.depth != b.depth || a.nodes.size() != b.nodes.size()) return false;
    for (size_t i = 0; i < a.nodes.size(); ++i)
        if (a.nodes[i].level != b.nodes[i].level || a.nodes[i].parent != b.nodes[i].parent) return false;
    return true;
}

json weighted_root_to_json(const WeightedGradedRoot& r) {
    json j = root_to_json(r.root);
    j["kind"] = "weighted-graded-root";
    j["eps"] = r.eps;
    j["family"] = r.family;
    for (size_t i = 0; i < r.weights.size(); ++i) {
        j["nodes"][i]["weight"] = series_to_json(r.weights[i]);
        j["nodes"][i]["weight_text"] = r.weights[i].to_string();
    }
    return j;
}

WeightedGradedRoot weighted_root_from_json(const json& j) {
    WeightedGradedRoot r;
    r.root = root_from_json(j);
    r.eps = static_cast<int>(need_int(need(j, "eps"), "eps"));
    r.family = need(j, "family").get<std::string>();
    for (const auto& n : need(j, "nodes")) r.weights.push_back(series_from_json(need(n, "weight")));
    return r;
}

json weighted_root_to_json(const WeightedKnotRoot& r) {
    json j = root_to_json(r.root);
    j["kind"] = "weighted-knot-root";
    j["eps"] = r.eps;
    j["family"] = r.family;
    for (size_t i = 0; i < r.weights.size(); ++i) {
        j["nodes"][i]["weight"] = weight_to_json(r.weights[i]);
        j["nodes"][i]["weight_text"] = r.weights[i].to_string();
    }
    return j;
}

WeightedKnotRoot weighted_knot_root_from_json(const json& j) {
    WeightedKnotRoot r;
    r.root = root_from_json(j);
    r.eps = static_cast<int>(need_int(need(j, "eps"), "eps"));
    r.family = need(j, "family").get<std::string>();
    for (const auto& n : need(j, "nodes")) r.weights.push_back(weight_from_json(need(n, "weight")));
    return r;
}

json bigraded_to_json(const BigradedRoot& r, const std::vector<KnotWeight>* weights) {
    json nodes = json::array();
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        const auto& nd = r.nodes[i];
        json n = {{"id", i},
                  {"bigrading",
                   {rat_to_json(r.gradingU(static_cast<int>(i))), rat_to_json(r.gradingV(static_cast<int>(i)))}},
                  {"iu", nd.iu},
                  {"jv", nd.jv},
                  {"down_u", nd.down_u},
                  {"down_v", nd.down_v},
                  {"coord_u", nd.coord_u},
                  {"coord_v", nd.coord_v}};
        if (weights) n["weight"] = weight_to_json((*weights)[i]);
        nodes.push_back(n);
    }
    json lam = json::array();
    for (long x : r.lambda) lam.push_back(x);
    return stamp({{"kind", "bigraded-root"},
                  {"lambda", lam},
                  {"depth_u", r.depthU},
                  {"depth_v", r.depthV},
                  {"root_u", root_to_json(r.rootU)},
                  {"root_v", root_to_json(r.rootV)},
                  {"nodes", nodes}});
}

BigradedRoot bigraded_from_json(const json& j, std::vector<KnotWeight>* weights) {
    check_schema(j);
    BigradedRoot r;
    for (const auto& x : need(j, "lambda")) r.lambda.push_back(need_int(x, "lambda entry"));
    r.depthU = static_cast<int>(need_int(need(j, "depth_u"), "depth_u"));
    r.depthV = static_cast<int>(need_int(need(j, "depth_v"), "depth_v"));
    if (r.depthU < 0 || r.depthV < 0) throw SchemaError("negative depth");
    r.rootU = root_from_json(need(j, "root_u"));
    r.rootV = root_from_json(need(j, "root_v"));
    r.cell.assign(r.depthU + 1, std::vector<std::vector<int>>(r.depthV + 1));
    const json& nodes = need(j, "nodes");
    const int n = static_cast<int>(nodes.size());
    auto ref = [&](const json& x, const char* what, int limit) {
        long v = need_int(x, what);
        if (v < -1 || v >= limit) throw SchemaError(std::string(what) + " out of range");
        return static_cast<int>(v);
    };
    for (int i = 0; i < n; ++i) {
        const json& x = nodes[i];
        if (need_int(need(x, "id"), "node id") != i) throw SchemaError("node ids must be 0..n-1");
        BigradedRoot::Node nd;
        nd.iu = static_cast<int>(need_int(need(x, "iu"), "iu"));
        nd.jv = static_cast<int>(need_int(need(x, "jv"), "jv"));
        if (nd.iu < 0 || nd.iu > r.depthU || nd.jv < 0 || nd.jv > r.depthV)
            throw SchemaError("bigrading outside the window");
        nd.down_u = ref(need(x, "down_u"), "down_u", n);
        nd.down_v = ref(need(x, "down_v"), "down_v", n);
        nd.coord_u = ref(need(x, "coord_u"), "coord_u", static_cast<int>(r.rootU.nodes.size()));
        nd.coord_v = ref(need(x, "coord_v"), "coord_v", static_cast<int>(r.rootV.nodes.size()));
        r.cell[nd.iu][nd.jv].push_back(i);
        r.nodes.push_back(nd);
        if (weights) weights->push_back(weight_from_json(need(x, "weight")));
    }
    return r;
}

bool same_structure(const BigradedRoot& a, const BigradedRoot& b) {
    if (a.lambda != b.lambda || a.depthU != b.depthU || a.depthV != b.depthV || a.nodes.size() != b.nodes.size())
        return false;
    if (!same_structure(a.rootU, b.rootU) || !same_structure(a.rootV, b.rootV)) return false;
    for (size_t i = 0; i < a.nodes.size(); ++i) {
        const auto &x = a.nodes[i], &y = b.nodes[i];
        if (x.iu != y.iu || x.jv != y.jv || x.down_u != y.down_u || x.down_v != y.down_v ||
            x.coord_u != y.coord_u || x.coord_v != y.coord_v)
            return false;
    }
    return a.cell == b.cell;
}

json surgery_to_json(const SurgeryResult& r, bool equal_to_direct) {
    json root = root_to_json(r.root);
    if (!r.weights.empty())
        for (size_t i = 0; i < r.weights.size(); ++i) {
            root["nodes"][i]["weight"] = series_to_json(r.weights[i]);
            root["nodes"][i]["weight_text"] = r.weights[i].to_string();
        }
    json pieces = json::array();
    for (size_t a = 0; a < r.a_values.size(); ++a) {
        json nodes = json::array();
        for (size_t n = 0; n < r.pieces[a].nodes.size(); ++n) {
            json x = {{"ambient_grading", rat_to_json(r.pieces[a].grading(static_cast<int>(n)))},
                      {"node", r.node_of[a][n]}};
            if (a < r.piece_weights.size() && !r.piece_weights[a].empty()) {
                x["weight"] = series_to_json(r.piece_weights[a][n]);
                x["weight_text"] = r.piece_weights[a][n].to_string();
            }
            nodes.push_back(x);
        }
        pieces.push_back({{"a", rat_to_json(r.a_values[a])}, {"nodes", nodes}});
    }
    json ids = json::array();
    for (const auto& id : r.identifications)
        ids.push_back({{"a", rat_to_json(id.a)}, {"grading", rat_to_json(id.g)}, {"node_a", id.node_a},
                       {"node_a_plus_p", id.node_ap}});
    return stamp({{"kind", "surgery"},
                  {"equal_to_direct", equal_to_direct},
                  {"top", rat_to_json(r.top)},
                  {"h_min", rat_to_json(r.h_min)},
                  {"root", root},
                  {"pieces", pieces},
                  {"identifications", ids}});
}

json check_to_json(const CheckRecord& c) {
    json j = {{"kind", c.kind}, {"graph", c.graph}, {"detail", c.detail}, {"pass", c.pass}};
    if (!c.error.empty()) j["error"] = c.error;
    return j;
}

// ---------------------------------------------------------------- DOT

std::string dot_root(const GradedRoot& r, const std::vector<LaurentQTZ>* weights, const Specialization& spec) {
    if (!weights) return to_dot(r);
    return to_dot(r, [&](int id) { return spec.apply((*weights)[id]).to_string(); });
}

std::string dot_root(const GradedRoot& r, const std::vector<KnotWeight>* weights, const Specialization& spec) {
    if (!weights) return to_dot(r);
    return to_dot(r, [&](int id) { return spec.apply((*weights)[id]).to_string(); });
}

std::string dot_bigraded(const BigradedRoot& r, const std::vector<KnotWeight>* weights, const Specialization& spec) {
    if (!weights) return to_dot(r);
    return to_dot(r, [&](int id) { return spec.apply((*weights)[id]).to_string(); });
}

// ---------------------------------------------------------------- job helpers

NeumannMove parse_move(const std::string& text) {
    size_t sign = text.find_first_of("+-");
    if (sign == std::string::npos || sign == 0) throw SchemaError("move '" + text + "' needs a kind and + or -");
    NeumannMove mv;
    mv.kind = parse_move_kind(text.substr(0, sign));
    mv.dir = text[sign] == '+' ? MoveDir::Up : MoveDir::Down;
    std::string rest = text.substr(sign + 1);
    if (!rest.empty()) {
        if (rest[0] != '@') throw SchemaError("move location must start with '@'");
        rest = rest.substr(1);
        size_t comma = rest.find(',');
        try {
            mv.u = std::stoi(rest.substr(0, comma));
            if (comma != std::string::npos) mv.v = std::stoi(rest.substr(comma + 1));
        } catch (const std::exception&) {
            throw SchemaError("bad move location in '" + text + "'");
        }
    }
    bool needs_edge = mv.dir == MoveDir::Up && (mv.kind == MoveKind::A || mv.kind == MoveKind::A0);
    bool needs_vertex = mv.dir == MoveDir::Down || mv.kind == MoveKind::B;
    if (needs_edge && (mv.u < 0 || mv.v < 0)) throw SchemaError("move '" + text + "' needs an edge @u,v");
    if (needs_vertex && mv.u < 0) throw SchemaError("move '" + text + "' needs a vertex @u");
    return mv;
}

SpincClass select_class(const SpincSpace& sp, int index, const std::string& rep) {
    if (!rep.empty()) {
        IVec k;
        std::stringstream ss(rep);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                k.push_back(std::stol(item));
            } catch (const std::exception&) {
                throw SchemaError("bad class representative '" + rep + "'");
            }
        }
        if (static_cast<int>(k.size()) != sp.s())
            throw SchemaError("class representative needs " + std::to_string(sp.s()) + " entries");
        return sp.make(k);
    }
    auto all = sp.enumerate();
    if (index < 0 || index >= static_cast<int>(all.size()))
        throw SchemaError("class index " + std::to_string(index) + " out of range 0.." +
                          std::to_string(all.size() - 1));
    return all[index];
}

std::shared_ptr<const AdmissibleFamily> load_family(const std::string& name) {
    if (name == "what") return std::shared_ptr<const AdmissibleFamily>(&what_family(), [](const AdmissibleFamily*) {});
    return TableFamily::from_json_text(read_file(name));
}

}  // namespace plumb
