#pragma once

// Seeded property checks shared by the command-line `verify` job, the
// acceptance runner and the tests: random Neumann words, surgery against the
// direct computation, and conjugation symmetry.

#include <cstdint>
#include <string>
#include <vector>

#include "plumb/errors.hpp"
#include "plumb/surgery.hpp"

namespace plumb {

// splitmix64; the only randomness source, so a seed fixes every run on every
// platform
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    int below(int n);  // uniform-ish in [0, n), n > 0

private:
    uint64_t state_;
};

struct CheckRecord {
    std::string kind;    // "neumann", "surgery", "conjugation"
    std::string graph;   // compact description of the input graph
    std::string detail;  // class, epsilon, word, ...
    bool pass = false;
    std::string error;   // set when a module error aborted the check
};

// A word of `len` random moves (A/B on closed trees, A/B/A0/B0 on marked
// trees); each move is applicable to the graph reached
// by the previous ones.  Blow-downs are drawn only where a (-1) vertex allows one.
std::vector<NeumannMove> random_word(const PlumbingGraph& g, int len, SeededRng& rng);
std::vector<NeumannMove> random_word(const MarkedGraph& g, int len, SeededRng& rng);

// Apply a word, carrying the spin^c class along with beta.
struct Transported {
    PlumbingGraph closed;
    MarkedGraph marked;
    SpincClass k;
};
Transported transport(const PlumbingGraph& g, const SpincClass& k, const std::vector<NeumannMove>& word);
Transported transport(const MarkedGraph& g, const SpincClass& k, const std::vector<NeumannMove>& word);

std::string describe(const PlumbingGraph& g);
std::string describe(const MarkedGraph& g);
std::string describe(const std::vector<NeumannMove>& word);

CheckRecord neumann_case(const PlumbingGraph& g, const SpincClass& k, int eps,
                         const std::vector<NeumannMove>& word, const AdmissibleFamily& f, int depth);
CheckRecord neumann_case(const MarkedGraph& g, const SpincClass& k, int eps,
                         const std::vector<NeumannMove>& word, const AdmissibleFamily& f, int depth);
// t is a class of the surgered graph
CheckRecord surgery_case(const MarkedGraph& g, long m0, const SpincClass& t, int eps,
                         const AdmissibleFamily& f, int depth);
CheckRecord conjugation_case(const PlumbingGraph& g, const SpincClass& k, int eps,
                             const AdmissibleFamily& f, int depth);
CheckRecord conjugation_case(const MarkedGraph& g, const SpincClass& k, int eps,
                             const AdmissibleFamily& f, int depth);

// Largest framing m0 with a negative definite surgery, minus `extra`.
long definite_surgery_coefficient(const MarkedGraph& g, long extra);

struct VerifyOptions {
    uint64_t seed = 7;
    int moves = 4;  // maximal word length
    int cases = 6;  // Neumann words per run
    int depth = 3;
    bool surgery = true;
    bool conjugation = true;
};

// The graph decides which checks apply: closed graphs get Neumann and
// conjugation checks, marked graphs additionally get surgery checks.
std::vector<CheckRecord> verify_closed(const PlumbingGraph& g, const VerifyOptions& opt,
                                       const AdmissibleFamily& f);
std::vector<CheckRecord> verify_marked(const MarkedGraph& g, const VerifyOptions& opt,
                                       const AdmissibleFamily& f);

}  // namespace plumb
