#pragma once

// JSON and DOT serialization.  Every document carries "schema": "plumb-roots/1";
// rationals are exact "p/q" strings.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "plumb/surgery.hpp"
#include "plumb/verify.hpp"

namespace plumb {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "plumb-roots/1";

// ---------------------------------------------------------------- graphs

using AnyGraph = std::variant<PlumbingGraph, MarkedGraph>;

struct ParsedGraph {
    AnyGraph graph;
    std::vector<std::string> warnings;  // e.g. not negative definite
    bool marked() const { return std::holds_alternative<MarkedGraph>(graph); }
};

// {"vertices":[{"id":0,"framing":null,"marked":true},{"id":1,"framing":-1}],"edges":[[0,1]]}
// Ids must be 0..n-1.  A marked vertex is moved to index 0, the others keep
// their relative order.  Throws SchemaError, and NotNegativeDefinite when
// require_nd is set.
ParsedGraph parse_graph(const json& j, bool require_nd = false);
ParsedGraph parse_graph_text(const std::string& text, bool require_nd = false);
ParsedGraph parse_graph_file(const std::string& path, bool require_nd = false);

json graph_to_json(const PlumbingGraph& g);
json graph_to_json(const MarkedGraph& g);
json graph_to_json(const AnyGraph& g);

// ---------------------------------------------------------------- series and weights

json rat_to_json(const Rat& r);  // "p/q" or "p"
Rat rat_from_json(const json& j);  // accepts strings and integers

json series_to_json(const LaurentQTZ& p);  // [{"q":..,"t":..,"z":..,"c":..}, ...]
LaurentQTZ series_from_json(const json& j);
json weight_to_json(const KnotWeight& w);  // {"X": e, "P": series}
KnotWeight weight_from_json(const json& j);

// Specialization such as "t=1", "q=1,t=1" applied before rendering.
struct Specialization {
    bool q1 = false, t1 = false, z1 = false;
    static Specialization parse(const std::string& s);  // "" -> none
    LaurentQTZ apply(const LaurentQTZ& p) const;
    KnotWeight apply(const KnotWeight& w) const;
    bool empty() const { return !q1 && !t1 && !z1; }
};

// ---------------------------------------------------------------- roots

// Structure of a graded root window: top, depth and (level, parent) per node.
json root_to_json(const GradedRoot& r);
GradedRoot root_from_json(const json& j);  // no lattice data
bool same_structure(const GradedRoot& a, const GradedRoot& b);

json weighted_root_to_json(const WeightedGradedRoot& r);
WeightedGradedRoot weighted_root_from_json(const json& j);
json weighted_root_to_json(const WeightedKnotRoot& r);
WeightedKnotRoot weighted_knot_root_from_json(const json& j);

json bigraded_to_json(const BigradedRoot& r, const std::vector<KnotWeight>* weights = nullptr);
// the nodes' bigradings and U/V edges; the two collapsed roots are included
BigradedRoot bigraded_from_json(const json& j, std::vector<KnotWeight>* weights = nullptr);
bool same_structure(const BigradedRoot& a, const BigradedRoot& b);

json surgery_to_json(const SurgeryResult& r, bool equal_to_direct);

json check_to_json(const CheckRecord& c);

// DOT with gradings on the rank axis; `spec` specializes weight labels.
std::string dot_root(const GradedRoot& r, const std::vector<LaurentQTZ>* weights, const Specialization& spec);
std::string dot_root(const GradedRoot& r, const std::vector<KnotWeight>* weights, const Specialization& spec);
std::string dot_bigraded(const BigradedRoot& r, const std::vector<KnotWeight>* weights, const Specialization& spec);

std::string read_file(const std::string& path);

// "B+@2", "A-@4", "A0+@0,1", "C+": kind, direction, then the location
NeumannMove parse_move(const std::string& text);

// class by index into the enumeration, or by a representative "k1,k2,..."
SpincClass select_class(const SpincSpace& sp, int index, const std::string& rep);

// "what" or the path of a JSON table family
std::shared_ptr<const AdmissibleFamily> load_family(const std::string& name);

}  // namespace plumb
