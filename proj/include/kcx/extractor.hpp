#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcx/solver.hpp"
#include "kcx/template.hpp"

namespace kcx {

enum class PreconditionPolicy { verify, trust };

struct ExtractConfig {
    int k = 1;
    Palette palette;
    SolverBudget budget;
    PreconditionPolicy policy = PreconditionPolicy::verify;
    // Re-run the solver on every strengthened witness.
    bool check_invariants = false;
    // Vertex cap for the brute-force list-chromatic witness when k >= 3.
    std::size_t choosability_cap = 8;

    // Palette of 7k colours.
    static ExtractConfig plain(int k);
    static ExtractConfig list(int k, ListAssignment lists);

    PaletteMode mode() const { return palette.mode; }
};

// Smallest palette (plain) or list size (list mode) for which the
// constructions below are guaranteed to close.
int required_palette_size(int k, PaletteMode mode);

// Throws std::invalid_argument if cfg cannot drive an extraction on g.
void validate_config(const Graph& g, const ExtractConfig& cfg);

struct WitnessPair {
    Graph h;
    Template t;
};

enum class Branch { separation, completion };

struct SolveSummary {
    Outcome outcome = Outcome::unsat;
    std::uint64_t decisions = 0;
    std::uint64_t backtracks = 0;

    friend bool operator==(const SolveSummary&, const SolveSummary&) = default;
};

struct DescentStep {
    VertexSet cut;
    VertexSet y;
    VertexSet z;
    long y_degree = 0;
    long z_degree = 0;
    Branch branch = Branch::separation;
    long derived_degree = 0;
    std::size_t child_order = 0;
    SolveSummary separation_solve;
    std::optional<SolveSummary> completion_solve;

    friend bool operator==(const DescentStep&, const DescentStep&) = default;
};

struct Descent {
    WitnessPair final;
    std::vector<DescentStep> trace;
    SolverStats stats;
};

struct Certificate {
    std::string input_sha256;
    int k = 1;
    PaletteMode mode = PaletteMode::plain;
    int palette_size = 0;        // plain mode
    ListAssignment lists;        // list mode
    VertexSet subgraph;          // V(H)
    Template witness;            // strengthened witness on H
    std::vector<DescentStep> trace;
    int min_cut_size = 0;        // kappa(H)
    bool subgraph_complete = false;
    // Plain: H admits no (k-1)-colouring. List: a (k-1)-list assignment on
    // H without a proper colouring, when one was searched for.
    bool colourable_below_k = false;
    std::optional<ListAssignment> list_witness;
    std::uint64_t decisions = 0;
    std::uint64_t backtracks = 0;
};

// The graph does not satisfy the colouring hypothesis: the palette (or the
// lists) suffice to colour it.
struct NotInextensible : std::runtime_error {
    Colouring colouring;
    explicit NotInextensible(Colouring c)
        : std::runtime_error("graph is colourable from the palette; the hypothesis fails"), colouring(std::move(c)) {}
};

struct ResourceLimitReached : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction that cannot succeed on a valid witness produced a
// colouring respecting it. Carries the pair it contradicts.
struct InternalContradiction : std::logic_error {
    std::string stage;
    Graph graph;
    Template tmpl;
    Palette palette;
    Colouring colouring;
    InternalContradiction(std::string stage, Graph g, Template t, Palette p, Colouring c);
};

// Empty template; with policy verify, confirms no palette colouring exists.
WitnessPair check_precondition(const Graph& g, const ExtractConfig& cfg);

// Strengthen, then cut and recurse into whichever derived pair is
// unsatisfiable, until H is k-connected.
Descent descend(WitnessPair wp, const ExtractConfig& cfg);

// Chromatic evidence for a k-connected strengthened pair. The returned
// certificate has no input hash or trace.
Certificate finalize_chromatic(const WitnessPair& wp, const ExtractConfig& cfg);

Certificate extract(const Graph& g, const ExtractConfig& cfg);

struct Verdict {
    bool accepted = true;
    std::vector<std::string> failures;
    explicit operator bool() const { return accepted; }
};

// Re-checks a certificate against g from scratch.
Verdict verify_certificate(const Graph& g, const Certificate& cert, const SolverBudget& budget = {});

std::string to_string(Branch branch);
std::string to_string(PaletteMode mode);

}  // namespace kcx
