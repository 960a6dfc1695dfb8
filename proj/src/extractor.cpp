#include "kcx/extractor.hpp"

#include "kcx/connectivity.hpp"
#include "kcx/dimacs.hpp"

namespace kcx {

namespace {

SolveSummary summarize(const SolveResult& r) {
    return {r.outcome, r.stats.decisions, r.stats.backtracks};
}

void require_definite(const SolveResult& r, const std::string& stage) {
    if (r.outcome == Outcome::resource_limit)
        throw ResourceLimitReached("solver budget exhausted during " + stage);
}

}  // namespace

InternalContradiction::InternalContradiction(std::string stage_, Graph g, Template t, Palette p, Colouring c)
    : std::logic_error("internal contradiction at " + stage_ + ": a respecting colouring exists for the witness"),
      stage(std::move(stage_)), graph(std::move(g)), tmpl(std::move(t)), palette(std::move(p)), colouring(std::move(c)) {}

std::string to_string(Branch branch) {
    return branch == Branch::separation ? "separation" : "completion";
}

std::string to_string(PaletteMode mode) {
    return mode == PaletteMode::plain ? "plain" : "list";
}

int required_palette_size(int k, PaletteMode mode) {
    return mode == PaletteMode::plain ? 7 * k : 4 * k;
}

ExtractConfig ExtractConfig::plain(int k) {
    ExtractConfig cfg;
    cfg.k = k;
    cfg.palette = Palette::plain(7 * k);
    return cfg;
}

ExtractConfig ExtractConfig::list(int k, ListAssignment lists) {
    ExtractConfig cfg;
    cfg.k = k;
    cfg.palette = Palette::with_lists(std::move(lists));
    return cfg;
}

void validate_config(const Graph& g, const ExtractConfig& cfg) {
    if (cfg.k < 1)
        throw std::invalid_argument("k must be at least 1");
    const int needed = required_palette_size(cfg.k, cfg.mode());
    if (cfg.mode() == PaletteMode::plain) {
        if (cfg.palette.size < needed)
            throw std::invalid_argument("palette must have at least 7k = " + std::to_string(needed) + " colours");
        return;
    }
    for (Vertex v : g.vertices()) {
        auto it = cfg.palette.lists.find(v);
        if (it == cfg.palette.lists.end())
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no colour list");
        if (static_cast<int>(it->second.size()) < needed)
            throw std::invalid_argument("list of vertex " + std::to_string(v) + " is shorter than 4k = " +
                                        std::to_string(needed));
    }
}

WitnessPair check_precondition(const Graph& g, const ExtractConfig& cfg) {
    validate_config(g, cfg);
    WitnessPair wp{g, Template{}};
    if (cfg.policy == PreconditionPolicy::trust)
        return wp;
    auto r = extend(g, wp.t, cfg.palette, cfg.budget);
    require_definite(r, "the precondition check");
    if (r.sat())
        throw NotInextensible(*r.colouring);
    return wp;
}

Descent descend(WitnessPair wp, const ExtractConfig& cfg) {
    const int k = cfg.k;
    const long k2 = static_cast<long>(k) * k;
    Descent out;
    auto contradiction = [&](const std::string& stage, const Colouring& col) {
        if (!respects(wp.h, wp.t, cfg.palette, col))
            throw InternalInvariantError(stage + ": constructed colouring does not respect the witness");
        return InternalContradiction(stage, wp.h, wp.t, cfg.palette, col);
    };

    while (true) {
        wp.t = strengthen_witness(wp.h, wp.t, k, cfg.palette);
        if (cfg.check_invariants) {
            auto check = is_valid_witness(wp.h, wp.t, k, cfg.palette, cfg.budget);
            if (check.status == WitnessStatus::resource_limit)
                throw ResourceLimitReached("solver budget exhausted while checking the witness");
            if (check.status == WitnessStatus::invalid) {
                if (check.solve.colouring)
                    throw contradiction("witness check", *check.solve.colouring);
                throw InternalInvariantError("strengthened witness is malformed: " + check.reason);
            }
        }

        if (wp.h.order() <= static_cast<std::size_t>(k))
            throw contradiction("small case", rainbow_small_case(wp.h, wp.t, cfg.palette, k));
        if (is_k_connected(wp.h, k))
            break;

        auto cut = std::get<VertexSet>(min_vertex_cut(wp.h));
        if (cut.size() > static_cast<std::size_t>(k - 1))
            throw InternalInvariantError("minimum cut of a non-k-connected graph exceeds k-1");
        auto [y, z] = split_by_cut(wp.h, cut);
        long y_degree = degree(restrict(wp.t, y), k);
        long z_degree = degree(restrict(wp.t, z), k);
        // Z takes the side of smaller degree, then fewer vertices.
        if (y_degree < z_degree || (y_degree == z_degree && y.size() < z.size())) {
            std::swap(y, z);
            std::swap(y_degree, z_degree);
        }
        if (z_degree > k2)
            throw InternalInvariantError("both sides of the cut exceed degree k^2");

        DescentStep step;
        step.cut = cut;
        step.y = y;
        step.z = z;
        step.y_degree = y_degree;
        step.z_degree = z_degree;

        Template separation = derive_separation_template(wp.h, wp.t, cfg.palette, k, cut, y, z);
        Graph separation_graph = induced_subgraph(wp.h, set_union(cut, y));
        auto first = extend(separation_graph, separation, cfg.palette, cfg.budget);
        out.stats += first.stats;
        require_definite(first, "the separation branch");
        step.separation_solve = summarize(first);

        if (first.unsat()) {
            step.branch = Branch::separation;
            step.derived_degree = degree(separation, k);
            step.child_order = separation_graph.order();
            out.trace.push_back(std::move(step));
            wp = {std::move(separation_graph), std::move(separation)};
            continue;
        }

        Template completion = derive_completion_template(wp.h, wp.t, cfg.palette, k, cut, z, *first.colouring);
        Graph completion_graph = induced_subgraph(wp.h, set_union(cut, z));
        auto second = extend(completion_graph, completion, cfg.palette, cfg.budget);
        out.stats += second.stats;
        require_definite(second, "the completion branch");
        step.completion_solve = summarize(second);

        if (second.unsat()) {
            step.branch = Branch::completion;
            step.derived_degree = degree(completion, k);
            step.child_order = completion_graph.order();
            out.trace.push_back(std::move(step));
            wp = {std::move(completion_graph), std::move(completion)};
            continue;
        }

        throw contradiction("separator gluing", glue(*first.colouring, *second.colouring));
    }
    out.final = std::move(wp);
    return out;
}

Certificate finalize_chromatic(const WitnessPair& wp, const ExtractConfig& cfg) {
    const int k = cfg.k;
    Certificate cert;
    cert.k = k;
    cert.mode = cfg.mode();
    if (cert.mode == PaletteMode::plain) {
        cert.palette_size = cfg.palette.size;
    } else {
        for (Vertex v : wp.h.vertices())
            cert.lists.emplace(v, cfg.palette.lists.at(v));
    }
    cert.subgraph = wp.h.vertices();
    cert.witness = wp.t;
    cert.subgraph_complete = wp.h.is_complete();
    cert.min_cut_size = vertex_connectivity(wp.h);

    auto contradiction = [&](const std::string& stage, const Colouring& col) {
        if (!respects(wp.h, wp.t, cfg.palette, col))
            throw InternalInvariantError(stage + ": constructed colouring does not respect the witness");
        return InternalContradiction(stage, wp.h, wp.t, cfg.palette, col);
    };

    const VertexSet free = set_difference(wp.h.vertices(), wp.t.precoloured_set());
    if (cert.mode == PaletteMode::plain) {
        auto partial = is_colourable(induced_subgraph(wp.h, free), k - 1);
        if (partial) {
            std::vector<VertexSet> classes(static_cast<std::size_t>(k - 1));
            for (auto [v, c] : *partial)
                classes[static_cast<std::size_t>(c)].push_back(v);
            auto parts = interval_partition(wp.h, wp.t, k, classes);
            throw contradiction("interval colouring", colour_from_intervals(wp.h, wp.t, cfg.palette, parts));
        }
        cert.colourable_below_k = is_colourable(wp.h, k - 1).has_value();
        if (cert.colourable_below_k)
            throw InternalInvariantError("H is (k-1)-colourable although H - S is not");
        return cert;
    }

    if (auto completion = list_direct_completion(wp.h, wp.t, cfg.palette, k))
        throw contradiction("list completion", *completion);
    try {
        ChoosabilityOptions options;
        options.vertex_cap = cfg.choosability_cap;
        auto choosability = list_chromatic_at_least(wp.h, k, options);
        if (!choosability.at_least)
            throw InternalInvariantError("brute-force search found H to be (k-1)-choosable");
        cert.list_witness = choosability.witness;
    } catch (const std::length_error&) {
        // Beyond the brute-force cap the bound rests on the construction.
    }
    return cert;
}

Certificate extract(const Graph& g, const ExtractConfig& cfg) {
    auto start = check_precondition(g, cfg);
    auto descent = descend(std::move(start), cfg);
    Certificate cert = finalize_chromatic(descent.final, cfg);
    cert.input_sha256 = graph_digest(g);
    cert.trace = std::move(descent.trace);
    cert.decisions = descent.stats.decisions;
    cert.backtracks = descent.stats.backtracks;
    return cert;
}

Verdict verify_certificate(const Graph& g, const Certificate& cert, const SolverBudget& budget) {
    Verdict verdict;
    auto fail = [&](std::string why) {
        verdict.accepted = false;
        verdict.failures.push_back(std::move(why));
    };
    const int k = cert.k;
    if (cert.input_sha256 != graph_digest(g))
        fail("input hash does not match the graph");
    if (k < 1) {
        fail("k must be positive");
        return verdict;
    }
    const long k2 = static_cast<long>(k) * k;

    Palette palette;
    if (cert.mode == PaletteMode::plain) {
        palette = Palette::plain(cert.palette_size);
        if (cert.palette_size < required_palette_size(k, cert.mode))
            fail("palette smaller than 7k");
    } else {
        palette = Palette::with_lists(cert.lists);
        for (Vertex v : cert.subgraph) {
            auto it = cert.lists.find(v);
            if (it == cert.lists.end() || static_cast<int>(it->second.size()) < required_palette_size(k, cert.mode))
                fail("list of vertex " + std::to_string(v) + " missing or shorter than 4k");
        }
    }

    // Trace: each step cuts the current vertex set and keeps one side.
    VertexSet current = g.vertices();
    for (std::size_t i = 0; i < cert.trace.size(); ++i) {
        const auto& step = cert.trace[i];
        const std::string where = "step " + std::to_string(i) + ": ";
        VertexSet all = set_union(step.cut, set_union(step.y, step.z));
        if (all != current || all.size() != step.cut.size() + step.y.size() + step.z.size()) {
            fail(where + "cut and sides do not partition the current vertex set");
            return verdict;
        }
        if (step.y.empty() || step.z.empty())
            fail(where + "a side is empty");
        if (step.cut.size() > static_cast<std::size_t>(k - 1))
            fail(where + "cut larger than k-1");
        for (Vertex v : step.y)
            for (Vertex w : g.neighbours(v))
                if (contains(step.z, w))
                    fail(where + "an edge joins the two sides");
        if (step.z_degree > k2)
            fail(where + "side degree exceeds k^2");
        if (step.z_degree > step.y_degree)
            fail(where + "kept side selection violates the degree rule");
        if (step.y_degree + step.z_degree > 2 * k2)
            fail(where + "side degrees exceed 2k^2");
        if (step.derived_degree > 2 * k2 || step.derived_degree < 0)
            fail(where + "derived template degree exceeds 2k^2");
        VertexSet child = set_union(step.cut, step.branch == Branch::separation ? step.y : step.z);
        if (child.size() != step.child_order)
            fail(where + "recorded child order is wrong");
        if (step.branch == Branch::completion && !step.completion_solve)
            fail(where + "completion branch without a completion solve");
        current = std::move(child);
    }
    if (current != cert.subgraph)
        fail("trace does not end at the certified subgraph");

    VertexSet h_vertices = make_vertex_set(cert.subgraph);
    if (h_vertices != cert.subgraph || h_vertices.empty()) {
        fail("subgraph vertex list must be nonempty and sorted");
        return verdict;
    }
    for (Vertex v : h_vertices)
        if (!g.has_vertex(v)) {
            fail("subgraph vertex " + std::to_string(v) + " is not in the graph");
            return verdict;
        }
    Graph h = induced_subgraph(g, h_vertices);

    if (!is_k_connected(h, k))
        fail("H is not k-connected");
    if (vertex_connectivity(h) != cert.min_cut_size)
        fail("recorded connectivity of H is wrong");
    if (h.is_complete() != cert.subgraph_complete)
        fail("recorded completeness of H is wrong");

    if (cert.mode == PaletteMode::plain) {
        if (cert.colourable_below_k || is_colourable(h, k - 1))
            fail("H is (k-1)-colourable");
    } else if (cert.list_witness) {
        const auto& lists = *cert.list_witness;
        bool shaped = lists.size() == h.order();
        for (Vertex v : h.vertices()) {
            auto it = lists.find(v);
            shaped = shaped && it != lists.end() && static_cast<int>(it->second.size()) == k - 1;
        }
        if (!shaped)
            fail("list witness is not a (k-1)-list assignment on H");
        else if (list_colour(h, lists))
            fail("list witness admits a proper colouring");
    } else if (k <= 2 || h.order() <= ChoosabilityOptions{}.vertex_cap) {
        fail("list mode certificate lacks a brute-force witness");
    }

    // The final witness must still be a strengthened, unsatisfiable template.
    try {
        validate_template(h, cert.witness, palette);
        if (cert.witness.max_forbidden() > static_cast<std::size_t>(k - 1))
            fail("final witness is not strengthened");
        auto check = is_valid_witness(h, cert.witness, k, palette, budget);
        if (check.status == WitnessStatus::invalid)
            fail("final witness is invalid: " + check.reason);
        if (check.status == WitnessStatus::resource_limit)
            fail("final witness could not be re-checked within the budget");
    } catch (const MalformedTemplate& e) {
        fail(std::string("final witness is malformed: ") + e.what());
    }
    return verdict;
}

}  // namespace kcx
