#include "kcx/suites.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "kcx/connectivity.hpp"
#include "kcx/dimacs.hpp"
#include "kcx/generators.hpp"
#include "kcx/oracles.hpp"
#include "kcx/random_instances.hpp"

namespace kcx {

namespace ri = random_instances;
using ri::Rng;

namespace {

using Clock = std::chrono::steady_clock;

// Counts one trial; an empty `failure` is a pass.
void record(Check& check, const std::string& failure) {
    ++check.trials;
    if (!failure.empty() && check.failures++ == 0)
        check.detail = failure;
}

// First failed condition of a trial.
struct Trial {
    std::string context;
    std::string failure{};
    void need(bool ok, const std::string& what) {
        if (!ok && failure.empty())
            failure = context + ": " + what;
    }
};

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1U)
                edges.emplace_back(u, v);
    return Graph::with_order(n, edges);
}

std::uint64_t graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

std::string show(const VertexSet& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? "," : "") + std::to_string(vs[i]);
    return out + "}";
}

std::string show(const CutResult& cut) {
    return std::holds_alternative<Complete>(cut) ? "complete" : show(std::get<VertexSet>(cut));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph::with_order(static_cast<int>(g.order()), edges);
}

double tenths(Rng& rng, int lo, int hi) {
    return ri::uniform(rng, lo, hi) / 10.0;
}

std::string evidence_of(const Certificate& cert) {
    if (cert.mode == PaletteMode::plain)
        return "not " + std::to_string(cert.k - 1) + "-colourable";
    if (cert.list_witness)
        return "uncolourable " + std::to_string(cert.k - 1) + "-list assignment";
    return "construction only";
}

// ---- criterion 3 ------------------------------------------------------

std::string compare_extend(const Graph& g, const Template& t, const Palette& palette) {
    auto fast = extend(g, t, palette);
    auto slow = brute_force_extend(g, t, palette);
    if (fast.outcome != slow.outcome)
        return "extend says " + to_string(fast.outcome) + ", brute force says " + to_string(slow.outcome);
    if (fast.sat() && !respects(g, t, palette, *fast.colouring))
        return "extend colouring does not respect the template";
    return {};
}

Check extend_exhaustive(std::uint64_t seed) {
    Check check{3, "extend matches brute force on every graph with n <= 5 (palettes 2-4, 3 templates each)"};
    Rng rng(seed ^ 0x3a);
    const ri::TemplateShape shapes[3] = {
        {0.2, 0.2, 3, SIZE_MAX, -1, 1},
        {0.35, 0.5, 3, SIZE_MAX, -1, 1},
        {0.0, 0.7, 3, SIZE_MAX, -1, 1},
    };
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < graph_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (int size = 2; size <= 4; ++size) {
                Palette palette = Palette::plain(size);
                for (int j = 0; j < 3; ++j) {
                    ri::TemplateShape shape = shapes[j];
                    shape.max_forbidden = static_cast<std::size_t>(size - 1);
                    Template t = ri::template_for(rng, g, palette, shape);
                    std::string failure = compare_extend(g, t, palette);
                    if (!failure.empty())
                        failure = "n=" + std::to_string(n) + " mask=" + std::to_string(mask) + " palette=" +
                                  std::to_string(size) + ": " + failure;
                    record(check, failure);
                }
            }
        }
    return check;
}

Check extend_random(std::uint64_t seed) {
    Check check{3, "extend matches brute force on 500 random instances with n <= 7 (plain and list)"};
    Rng rng(seed ^ 0x3b);
    for (int trial = 0; trial < 500; ++trial) {
        int n = ri::uniform(rng, 1, 7);
        Graph g = ri::graph(rng, n, tenths(rng, 2, 8));
        Palette palette;
        int universe = ri::uniform(rng, 2, 5);
        if (trial % 2 == 0)
            palette = Palette::plain(universe);
        else
            palette = Palette::with_lists(ri::lists(rng, g.vertices(), universe, 1, universe));
        ri::TemplateShape shape{tenths(rng, 0, 4), tenths(rng, 0, 7), static_cast<std::size_t>(universe - 1), SIZE_MAX, -1, 1};
        Template t = ri::template_for(rng, g, palette, shape);
        std::string failure = compare_extend(g, t, palette);
        record(check, failure.empty() ? failure : "trial " + std::to_string(trial) + ": " + failure);
    }
    return check;
}

// ---- criterion 6 ------------------------------------------------------

Check colourable_exhaustive() {
    Check check{6, "is_colourable matches exhaustive search on every graph with n <= 6, t <= 4"};
    for (int n = 0; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < graph_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (int t = 1; t <= 4; ++t) {
                auto fast = is_colourable(g, t);
                bool slow = oracles::colourable(g, t);
                std::string failure;
                if (fast.has_value() != slow)
                    failure = "decision differs";
                else if (fast && (!is_proper(g, *fast) || fast->size() != g.order() ||
                                  std::any_of(fast->begin(), fast->end(),
                                              [t](const auto& e) { return e.second < 0 || e.second >= t; })))
                    failure = "colouring is not a proper t-colouring";
                if (!failure.empty())
                    failure = "n=" + std::to_string(n) + " mask=" + std::to_string(mask) + " t=" + std::to_string(t) +
                              ": " + failure;
                record(check, failure);
            }
        }
    return check;
}

std::string compare_connectivity(const Graph& g) {
    auto fast = min_vertex_cut(g);
    auto slow = oracles::min_vertex_cut(g);
    if (!(fast == slow))
        return "min cut " + show(fast) + " vs " + show(slow);
    int kappa = std::holds_alternative<Complete>(slow) ? std::max(0, static_cast<int>(g.order()) - 1)
                                                       : static_cast<int>(std::get<VertexSet>(slow).size());
    if (vertex_connectivity(g) != kappa)
        return "vertex_connectivity " + std::to_string(vertex_connectivity(g)) + " vs " + std::to_string(kappa);
    for (int k = 1; k <= static_cast<int>(g.order()) + 1; ++k)
        if (is_k_connected(g, k) != oracles::is_k_connected(g, k))
            return "is_k_connected differs at k=" + std::to_string(k);
    return {};
}

Check cut_exhaustive() {
    Check check{6, "min_vertex_cut and is_k_connected match exhaustive search on every graph with n <= 6"};
    for (int n = 0; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < graph_count(n); ++mask) {
            std::string failure = compare_connectivity(graph_from_mask(n, mask));
            record(check, failure.empty() ? failure
                                          : "n=" + std::to_string(n) + " mask=" + std::to_string(mask) + ": " + failure);
        }
    return check;
}

Check cut_random(std::uint64_t seed) {
    Check check{6, "min_vertex_cut and is_k_connected match exhaustive search on 1000 random graphs with n = 7, 8"};
    Rng rng(seed ^ 0x6c);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = trial % 2 == 0 ? 7 : 8;
        std::string failure = compare_connectivity(ri::graph(rng, n, tenths(rng, 2, 9)));
        record(check, failure.empty() ? failure : "trial " + std::to_string(trial) + ": " + failure);
    }
    return check;
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            edges.emplace_back(u, v);
    return Graph::with_order(a + b, edges);
}

bool witness_shaped(const Graph& g, const ListAssignment& lists, int size) {
    if (lists.size() != g.order())
        return false;
    for (Vertex v : g.vertices()) {
        auto it = lists.find(v);
        if (it == lists.end() || static_cast<int>(it->second.size()) != size)
            return false;
    }
    return true;
}

Check choosability_c4() {
    Check check{6, "list chromatic number of C4 is 2"};
    Graph c4 = cycle_graph(4);
    Trial trial{"C4"};
    auto two = list_chromatic_at_least(c4, 2);
    auto three = list_chromatic_at_least(c4, 3);
    trial.need(two.at_least && two.witness && witness_shaped(c4, *two.witness, 1), "search misses chi_l >= 2");
    trial.need(two.witness && !oracles::list_colourable(c4, *two.witness), "1-list witness is colourable");
    trial.need(!three.at_least, "search claims chi_l >= 3");
    trial.need(oracles::list_chromatic_at_least(c4, 2), "oracle misses chi_l >= 2");
    trial.need(!oracles::list_chromatic_at_least(c4, 3), "oracle finds an uncolourable 2-list assignment");
    record(check, trial.failure);
    return check;
}

Check choosability_k4() {
    Check check{6, "list chromatic number of K4 is 4"};
    Graph k4 = complete_graph(4);
    Trial trial{"K4"};
    auto four = list_chromatic_at_least(k4, 4);
    auto five = list_chromatic_at_least(k4, 5);
    trial.need(four.at_least && four.witness && witness_shaped(k4, *four.witness, 3), "search misses chi_l >= 4");
    trial.need(four.witness && !oracles::list_colourable(k4, *four.witness), "3-list witness is colourable");
    trial.need(!oracles::colourable(k4, 3), "oracle 3-colours K4");
    trial.need(!five.at_least, "search claims chi_l >= 5");
    // Every vertex has degree 3, so 4-lists always colour greedily.
    std::size_t max_degree = 0;
    for (Vertex v : k4.vertices())
        max_degree = std::max(max_degree, k4.degree(v));
    trial.need(max_degree + 1 == 4, "degree bound is not 4");
    record(check, trial.failure);
    return check;
}

Check choosability_k24() {
    Check check{6, "K_{2,4} is 2-colourable but not 2-choosable"};
    Graph g = complete_bipartite(2, 4);
    Trial trial{"K_{2,4}"};
    trial.need(oracles::colourable(g, 2), "oracle cannot 2-colour K_{2,4}");
    auto three = list_chromatic_at_least(g, 3);
    trial.need(three.at_least && three.witness && witness_shaped(g, *three.witness, 2), "search misses a 2-list witness");
    trial.need(three.witness && !oracles::list_colourable(g, *three.witness), "search witness is colourable");
    // Lists {a,b}, {c,d} on one side and every cross pair on the other.
    ListAssignment classic{{0, {0, 1}}, {1, {2, 3}}, {2, {0, 2}}, {3, {0, 3}}, {4, {1, 2}}, {5, {1, 3}}};
    trial.need(!oracles::list_colourable(g, classic), "oracle colours the cross-pair assignment");
    trial.need(!list_colour(g, classic), "list_colour colours the cross-pair assignment");
    record(check, trial.failure);
    return check;
}

// ---- criterion 4 ------------------------------------------------------

Check degree_additivity(std::uint64_t seed) {
    Check check{4, "template degree is additive across random bipartitions"};
    Rng rng(seed ^ 0x41);
    for (int i = 0; i < 1000; ++i) {
        int k = ri::uniform(rng, 1, 3);
        Graph g = ri::graph(rng, ri::uniform(rng, 1, 12), tenths(rng, 1, 8));
        Palette palette = Palette::plain(7 * k);
        Template t = ri::template_for(rng, g, palette, {0.3, 0.5, static_cast<std::size_t>(2 * k), SIZE_MAX, -1, k});
        VertexSet a, b;
        for (Vertex v : g.vertices())
            (ri::chance(rng, 0.5) ? a : b).push_back(v);
        Trial trial{"trial " + std::to_string(i)};
        trial.need(degree(t, k) == degree(restrict(t, a), k) + degree(restrict(t, b), k), "degree is not additive");
        record(check, trial.failure);
    }
    return check;
}

// A clique too large for the palette plus a few extra vertices: every
// well-formed template on it is unsatisfiable.
struct WitnessInstance {
    Graph g;
    Palette palette;
    Template t;
    int k = 1;
};

WitnessInstance witness_instance(Rng& rng, int k, bool list) {
    const int core = list ? 4 * k + 1 : 7 * k + 1;
    const int n = core + ri::uniform(rng, 0, 3);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (v < core || ri::chance(rng, 0.5))
                edges.emplace_back(u, v);
    Graph g = relabel(Graph::with_order(n, edges), ri::permutation(rng, n));
    Palette palette = list ? Palette::with_lists(uniform_lists(g, 4 * k)) : Palette::plain(7 * k);
    const long bound = 2L * k * k;
    Template t = ri::template_for(rng, g, palette, {0.15, 0.6, static_cast<std::size_t>(2 * k), SIZE_MAX, bound, k});
    return {g, palette, t, k};
}

Check strengthening(std::uint64_t seed) {
    Check check{4, "strengthen_witness leaves |F| <= k-1, does not raise the degree, keeps the witness unsatisfiable"};
    Rng rng(seed ^ 0x42);
    int changed = 0;
    for (int i = 0; i < 1000; ++i) {
        auto w = witness_instance(rng, ri::uniform(rng, 1, 2), i % 4 == 3);
        Trial trial{"trial " + std::to_string(i)};
        trial.need(is_valid_witness(w.g, w.t, w.k, w.palette).status == WitnessStatus::valid, "input is not a witness");
        Template s = strengthen_witness(w.g, w.t, w.k, w.palette);
        changed += s.precolour().size() > w.t.precolour().size();
        trial.need(s.max_forbidden() <= static_cast<std::size_t>(w.k - 1), "a forbidden list still has k colours");
        trial.need(degree(s, w.k) <= degree(w.t, w.k), "degree increased");
        auto after = is_valid_witness(w.g, s, w.k, w.palette);
        trial.need(after.status == WitnessStatus::valid, "strengthened template is not a witness: " + after.reason);
        record(check, trial.failure);
    }
    if (check.failures == 0)
        check.detail = std::to_string(changed) + " templates gained pre-coloured vertices";
    return check;
}

struct CutInstance {
    Graph h;
    Palette palette;
    Template t;
    int k = 1;
    VertexSet x, y, z;
};

// X of size <= k-1 separating Y from Z, template with |F| <= k-1 and
// degree <= 2k^2, Z the side of smaller degree.
CutInstance cut_instance(Rng& rng, int k, bool list) {
    const int nx = ri::uniform(rng, 0, k - 1);
    const int ny = ri::uniform(rng, 1, 6);
    const int nz = ri::uniform(rng, 1, 6);
    const int n = nx + ny + nz;
    auto perm = ri::permutation(rng, n);
    auto side = [&](int v) { return perm[static_cast<std::size_t>(v)] < nx ? 0 : perm[static_cast<std::size_t>(v)] < nx + ny ? 1 : 2; };
    const double p = tenths(rng, 2, 8);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side(u) + side(v) != 3 && ri::chance(rng, p))
                edges.emplace_back(u, v);
    CutInstance out;
    out.h = Graph::with_order(n, edges);
    out.k = k;
    for (int v = 0; v < n; ++v)
        (side(v) == 0 ? out.x : side(v) == 1 ? out.y : out.z).push_back(v);
    out.palette = list ? Palette::with_lists(ri::lists(rng, out.h.vertices(), 6 * k, 4 * k, 4 * k + 2))
                       : Palette::plain(7 * k);
    out.t = ri::template_for(rng, out.h, out.palette,
                             {0.3, 0.5, static_cast<std::size_t>(k - 1), SIZE_MAX, 2L * k * k, k});
    if (degree(restrict(out.t, out.z), k) > degree(restrict(out.t, out.y), k))
        std::swap(out.y, out.z);
    return out;
}

std::vector<Check> cut_constructions(std::uint64_t seed) {
    Check separation{4, "derive_separation_template: deg(T') <= deg(T), |F'| <= 2k-1 on X, |F'| <= k-1 on Y"};
    Check completion{4, "derive_completion_template: deg(T'') <= 2k^2, |F''| <= k-1"};
    Check glued{4, "glue of the two branch colourings respects the template"};
    Rng rng(seed ^ 0x43);
    for (int i = 0; i < 100000 && (separation.trials < 1000 || completion.trials < 1000 || glued.trials < 1000); ++i) {
        auto c = cut_instance(rng, ri::uniform(rng, 1, 3), i % 4 == 3);
        const int k = c.k;
        Trial trial{"trial " + std::to_string(i)};
        Template tp = derive_separation_template(c.h, c.t, c.palette, k, c.x, c.y, c.z);
        trial.need(degree(tp, k) <= degree(c.t, k), "deg(T') > deg(T)");
        for (Vertex v : c.x)
            trial.need(tp.forbidden_at(v).size() <= static_cast<std::size_t>(2 * k - 1), "|F'| > 2k-1 on X");
        for (Vertex v : c.y)
            trial.need(tp.forbidden_at(v).size() <= static_cast<std::size_t>(k - 1), "|F'| > k-1 on Y");
        const Graph hy = induced_subgraph(c.h, set_union(c.x, c.y));
        try {
            validate_template(hy, tp, c.palette);
        } catch (const MalformedTemplate& e) {
            trial.need(false, std::string("T' is malformed: ") + e.what());
        }
        record(separation, trial.failure);

        auto first = extend(hy, tp, c.palette);
        if (!first.sat())
            continue;
        Trial second_trial{trial.context};
        Template tc = derive_completion_template(c.h, c.t, c.palette, k, c.x, c.z, *first.colouring);
        second_trial.need(degree(tc, k) <= 2L * k * k, "deg(T'') > 2k^2");
        second_trial.need(tc.max_forbidden() <= static_cast<std::size_t>(k - 1), "|F''| > k-1");
        record(completion, second_trial.failure);

        const Graph hz = induced_subgraph(c.h, set_union(c.x, c.z));
        auto second = extend(hz, tc, c.palette);
        if (!second.sat())
            continue;
        Trial glue_trial{trial.context};
        glue_trial.need(respects(c.h, c.t, c.palette, glue(*first.colouring, *second.colouring)),
                        "glued colouring does not respect T");
        record(glued, glue_trial.failure);
    }
    return {separation, completion, glued};
}

struct IntervalInstance {
    Graph h;
    Template t;
    int k = 2;
    std::vector<VertexSet> classes;
};

// V \ S split into at most k-1 independent classes, S of size <= 2k, |F| <= k-1
// and degree <= 2k^2.
IntervalInstance interval_instance(Rng& rng) {
    const int k = ri::uniform(rng, 2, 4);
    const int m = ri::uniform(rng, 1, k - 1);
    std::vector<int> owner;  // class index, or -1 for S
    for (int j = 0; j < m; ++j)
        for (int c = ri::uniform(rng, 0, 4); c > 0; --c)
            owner.push_back(j);
    for (int c = ri::uniform(rng, 0, 2 * k); c > 0; --c)
        owner.push_back(-1);
    const int n = static_cast<int>(owner.size());
    auto perm = ri::permutation(rng, n);
    const double p = tenths(rng, 2, 9);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((owner[static_cast<std::size_t>(u)] != owner[static_cast<std::size_t>(v)] || owner[static_cast<std::size_t>(u)] < 0) &&
                ri::chance(rng, p))
                edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    IntervalInstance out;
    out.h = Graph::with_order(n, edges);
    out.k = k;
    out.classes.resize(static_cast<std::size_t>(m));

    std::map<Vertex, Colour> precolour;
    std::map<Vertex, ColourSet> forbidden;
    long budget = 2L * k * k;
    for (int u = 0; u < n; ++u)
        if (owner[static_cast<std::size_t>(u)] < 0) {
            Vertex v = perm[static_cast<std::size_t>(u)];
            Colour c;
            do {
                c = ri::uniform(rng, 0, 7 * k - 1);
            } while (std::any_of(out.h.neighbours(v).begin(), out.h.neighbours(v).end(), [&](Vertex w) {
                auto it = precolour.find(w);
                return it != precolour.end() && it->second == c;
            }));
            precolour.emplace(v, c);
            budget -= k;
        }
    for (int u = 0; u < n; ++u) {
        int j = owner[static_cast<std::size_t>(u)];
        if (j < 0)
            continue;
        Vertex v = perm[static_cast<std::size_t>(u)];
        out.classes[static_cast<std::size_t>(j)].push_back(v);
        int size = static_cast<int>(std::min<long>(ri::uniform(rng, 0, k - 1), budget));
        for (int c = 0; c < size; ++c)
            forbidden[v].insert(ri::uniform(rng, 0, 7 * k - 1));
        budget -= static_cast<long>(forbidden[v].size());
    }
    for (auto& cls : out.classes)
        cls = make_vertex_set(cls);
    out.t = Template(std::move(precolour), std::move(forbidden));
    return out;
}

std::vector<Check> interval_checks(std::uint64_t seed) {
    Check parts{4, "interval_partition: at most 3k intervals, each independent in one class with sum |F| <= 2k"};
    Check colouring{4, "colour_from_intervals respects the template"};
    Rng rng(seed ^ 0x44);
    for (int i = 0; i < 1000; ++i) {
        auto inst = interval_instance(rng);
        const int k = inst.k;
        Trial trial{"trial " + std::to_string(i)};
        auto result = interval_partition(inst.h, inst.t, k, inst.classes);
        trial.need(result.intervals.size() <= static_cast<std::size_t>(3 * k), "more than 3k intervals");
        trial.need(result.owner.size() == result.intervals.size(), "owner table size");
        VertexSet covered;
        std::size_t total = 0;
        for (std::size_t j = 0; j < result.intervals.size() && j < result.owner.size(); ++j) {
            const auto& interval = result.intervals[j];
            long load = 0;
            for (Vertex v : interval) {
                load += static_cast<long>(inst.t.forbidden_at(v).size());
                trial.need(contains(inst.classes.at(result.owner[j]), v), "interval leaves its class");
                for (Vertex w : interval)
                    trial.need(!inst.h.adjacent(v, w), "interval is not independent");
            }
            trial.need(!interval.empty(), "empty interval");
            trial.need(load <= 2L * k, "interval carries more than 2k forbidden colours");
            covered = set_union(covered, interval);
            total += interval.size();
        }
        trial.need(covered == set_difference(inst.h.vertices(), inst.t.precoloured_set()) && total == covered.size(),
                   "intervals do not partition V \\ S");
        record(parts, trial.failure);

        Trial colour_trial{trial.context};
        Palette palette = Palette::plain(7 * k);
        colour_trial.need(respects(inst.h, inst.t, palette, colour_from_intervals(inst.h, inst.t, palette, result)),
                          "colouring does not respect T");
        record(colouring, colour_trial.failure);
    }
    return {parts, colouring};
}

Check rainbow_checks(std::uint64_t seed) {
    Check check{4, "rainbow_small_case respects the template (plain and list)"};
    Rng rng(seed ^ 0x45);
    for (int i = 0; i < 1000; ++i) {
        int k = ri::uniform(rng, 1, 4);
        Graph h = ri::graph(rng, ri::uniform(rng, 1, k), tenths(rng, 2, 10));
        Palette palette = i % 2 ? Palette::with_lists(ri::lists(rng, h.vertices(), 6 * k, 4 * k, 4 * k + 2))
                                : Palette::plain(7 * k);
        Template t = ri::template_for(rng, h, palette,
                                      {0.4, 0.6, static_cast<std::size_t>(k - 1), static_cast<std::size_t>(2 * k), -1, k});
        Trial trial{"trial " + std::to_string(i)};
        trial.need(respects(h, t, palette, rainbow_small_case(h, t, palette, k)), "colouring does not respect T");
        record(check, trial.failure);
    }
    return check;
}

// ---- criterion 5 ------------------------------------------------------

struct Mutated {
    Graph h;
    Template t;
    ExtractConfig cfg;
};

// Two cliques of at most 7k-1 vertices sharing k-1: both branches colour.
Mutated mutated_glued(Rng& rng, int k) {
    Graph h = glued_cliques({ri::uniform(rng, 2, 7 * k - 1), ri::uniform(rng, 2, 7 * k - 1)}, k - 1);
    auto cfg = ExtractConfig::plain(k);
    Template t = ri::template_for(rng, h, cfg.palette, {0.0, 0.4, static_cast<std::size_t>(k - 1), SIZE_MAX, 2L * k * k, k});
    return {h, t, cfg};
}

// S a clique joined to a complete (k-1)-partite graph: k-connected and
// H - S is (k-1)-colourable.
Mutated mutated_multipartite(Rng& rng, int k) {
    const int s = ri::uniform(rng, k, 2 * k);
    std::vector<int> owner(static_cast<std::size_t>(s), -1);
    for (int j = 0; j < k - 1; ++j)
        for (int c = ri::uniform(rng, 2, 4); c > 0; --c)
            owner.push_back(j);
    const int n = static_cast<int>(owner.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (owner[static_cast<std::size_t>(u)] != owner[static_cast<std::size_t>(v)] || owner[static_cast<std::size_t>(u)] < 0)
                edges.emplace_back(u, v);
    Graph h = Graph::with_order(n, edges);
    auto cfg = ExtractConfig::plain(k);
    auto colours = ri::permutation(rng, 7 * k);
    std::map<Vertex, Colour> precolour;
    std::map<Vertex, ColourSet> forbidden;
    for (int v = 0; v < s; ++v)
        precolour.emplace(v, colours[static_cast<std::size_t>(v)]);
    long budget = 2L * k * k - static_cast<long>(k) * s;
    for (int v = s; v < n && budget > 0; ++v) {
        int size = static_cast<int>(std::min<long>(ri::uniform(rng, 0, k - 1), budget));
        for (int c = 0; c < size; ++c)
            forbidden[v].insert(ri::uniform(rng, 0, 7 * k - 1));
        budget -= static_cast<long>(forbidden[v].size());
    }
    return {h, Template(std::move(precolour), std::move(forbidden)), cfg};
}

// At most k vertices left.
Mutated mutated_small(Rng& rng, int k, bool list) {
    Graph h = ri::graph(rng, ri::uniform(rng, 1, k), 0.5);
    auto cfg = list ? ExtractConfig::list(k, ri::lists(rng, h.vertices(), 6 * k, 4 * k, 4 * k + 1))
                    : ExtractConfig::plain(k);
    Template t = ri::template_for(rng, h, cfg.palette,
                                  {0.4, 0.5, static_cast<std::size_t>(k - 1), static_cast<std::size_t>(2 * k), 2L * k * k, k});
    return {h, t, cfg};
}

// Cliques of 4k+1 with lists 0..4k-1, one list per clique given an extra colour.
Mutated mutated_lists(Rng& rng, int k, bool glued) {
    const int size = 4 * k + 1;
    Graph h = glued ? glued_cliques({size, size}, 1) : complete_graph(size);
    ListAssignment lists = uniform_lists(h, 4 * k);
    if (glued) {
        lists[ri::uniform(rng, 1, size - 1)].insert(4 * k + ri::uniform(rng, 0, 3));
        lists[ri::uniform(rng, size, 2 * size - 2)].insert(4 * k + ri::uniform(rng, 0, 3));
    } else {
        lists[ri::uniform(rng, 0, size - 1)].insert(4 * k + ri::uniform(rng, 0, 3));
    }
    return {h, Template{}, ExtractConfig::list(k, std::move(lists))};
}

Check mutated_witnesses(std::uint64_t seed) {
    Check check{5, "100 mutated witnesses reach the contradiction branch with a respecting colouring"};
    Rng rng(seed ^ 0x51);
    std::map<std::string, int> stages;
    for (int i = 0; i < 100; ++i) {
        Mutated m;
        switch (i % 4) {
        case 0:
            m = mutated_glued(rng, 1 + i / 4 % 2);
            break;
        case 1:
            m = mutated_multipartite(rng, 2 + i / 4 % 2);
            break;
        case 2:
            m = mutated_small(rng, 1 + i / 4 % 4, i / 4 % 3 == 0);
            break;
        default:
            m = mutated_lists(rng, 1 + i / 4 % 2, i / 8 % 2 == 1);
            break;
        }
        m.cfg.policy = PreconditionPolicy::trust;
        Trial trial{"mutation " + std::to_string(i)};
        try {
            auto descent = descend({m.h, m.t}, m.cfg);
            finalize_chromatic(descent.final, m.cfg);
            trial.need(false, "no contradiction raised");
        } catch (const InternalContradiction& e) {
            ++stages[e.stage];
            trial.need(respects(e.graph, e.tmpl, e.palette, e.colouring), "colouring at " + e.stage + " does not respect");
        } catch (const std::exception& e) {
            trial.need(false, std::string("unexpected error: ") + e.what());
        }
        record(check, trial.failure);
    }
    std::string seen;
    for (const char* stage : {"separator gluing", "interval colouring", "small case", "list completion"}) {
        seen += (seen.empty() ? "" : ", ") + std::string(stage) + " " + std::to_string(stages[stage]);
        if (stages[stage] == 0) {
            ++check.failures;
            check.detail = std::string("stage never reached: ") + stage;
        }
    }
    if (check.failures == 0)
        check.detail = seen;
    return check;
}

Check no_contradiction(const std::vector<InstanceRecord>& instances, const std::string& suite) {
    Check check{5, suite + " instances never reach the contradiction branch"};
    for (const auto& rec : instances)
        record(check, rec.outcome == "contradiction" ? rec.id + ": " + rec.detail : "");
    return check;
}

RunReport run_instances(const std::string& name, const std::vector<SuiteInstance>& list) {
    RunReport report;
    report.suite = name;
    for (const auto& inst : list)
        report.instances.push_back(run_instance(inst));
    std::sort(report.instances.begin(), report.instances.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    report.checks.push_back(no_contradiction(report.instances, name));
    return report;
}

Json check_json(const Check& c) {
    Json j;
    j["criterion"] = c.criterion;
    j["name"] = c.name;
    j["passed"] = c.passed();
    j["trials"] = c.trials;
    j["failures"] = c.failures;
    j["detail"] = c.detail;
    return j;
}

Json instance_json(const InstanceRecord& r) {
    Json j;
    j["id"] = r.id;
    j["spec"] = r.spec;
    j["k"] = r.k;
    j["mode"] = to_string(r.mode);
    j["expect"] = r.expect;
    j["outcome"] = r.outcome;
    j["passed"] = r.passed();
    if (!r.detail.empty())
        j["detail"] = r.detail;
    if (!r.certificate.empty()) {
        j["subgraph_order"] = r.subgraph_order;
        j["min_cut"] = r.min_cut;
        j["evidence"] = r.evidence;
        j["verified"] = r.verified;
        j["rechecked"] = r.rechecked;
        j["certificate_sha256"] = sha256_hex(r.certificate);
    }
    j["solver"] = {{"decisions", r.decisions}, {"backtracks", r.backtracks}};
    return j;
}

}  // namespace

bool InstanceRecord::passed() const {
    if (outcome != expect)
        return false;
    return expect != "certified" || (verified && rechecked);
}

bool RunReport::passed() const {
    return std::all_of(instances.begin(), instances.end(), [](const auto& r) { return r.passed(); }) &&
           std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

Json to_json(const RunReport& report) {
    Json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["passed"] = report.passed();
    auto instances_passed = std::count_if(report.instances.begin(), report.instances.end(),
                                          [](const auto& r) { return r.passed(); });
    auto checks_passed =
        std::count_if(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.passed(); });
    j["summary"] = {{"instances_passed", instances_passed},
                    {"instances_failed", static_cast<long>(report.instances.size()) - instances_passed},
                    {"checks_passed", checks_passed},
                    {"checks_failed", static_cast<long>(report.checks.size()) - checks_passed}};
    j["instances"] = Json::array();
    for (const auto& r : report.instances)
        j["instances"].push_back(instance_json(r));
    j["checks"] = Json::array();
    for (const auto& c : report.checks)
        j["checks"].push_back(check_json(c));
    return j;
}

std::string to_text(const RunReport& report) {
    return to_json(report).dump(2) + "\n";
}

std::string summary(const RunReport& report) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    for (const auto& r : report.instances) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << r.spec << "  k=" << r.k << " " << to_string(r.mode)
            << "  " << r.outcome;
        if (!r.certificate.empty())
            out << "  |H|=" << r.subgraph_order << " kappa=" << r.min_cut << "  " << r.evidence;
        out << "  decisions=" << r.decisions << "  " << r.wall_ms << " ms";
        if (!r.detail.empty())
            out << "  (" << r.detail << ")";
        out << '\n';
    }
    for (const auto& c : report.checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << "[" << c.criterion << "] " << c.name << "  trials=" << c.trials
            << " failures=" << c.failures;
        if (!c.detail.empty())
            out << "  (" << c.detail << ")";
        out << '\n';
    }
    out << report.suite << ": " << (report.passed() ? "passed" : "FAILED") << '\n';
    return out.str();
}

std::vector<SuiteInstance> theorem1_instances() {
    return {
        {"k1-complete", "complete:8", 1},
        {"k1-glued-s0", "glued:8,8/0", 1},
        {"k1-glued-s1", "glued:8,8/1", 1},
        {"k1-join", "join(cycle:5,complete:5)", 1},
        {"k2-complete", "complete:15", 2},
        {"k2-glued-s1", "glued:15,15/1", 2},
        {"k2-join", "join(cycle:5,cycle:5,cycle:5,cycle:5,cycle:5)", 2},
    };
}

std::vector<SuiteInstance> theorem2_instances() {
    const auto list = PaletteMode::list;
    return {
        {"k1-complete", "complete:5", 1, list, 4},
        {"k1-complete-full", "complete:5", 1, list, 5, "not_inextensible"},
        {"k1-glued-s1", "glued:5,5/1", 1, list, 4},
        {"k2-complete", "complete:9", 2, list, 8},
        {"k2-complete-full", "complete:9", 2, list, 9, "not_inextensible"},
        {"k2-glued-s1", "glued:9,9/1", 2, list, 8},
    };
}

Graph instance_graph(const SuiteInstance& inst) {
    return generate(parse_family(inst.spec));
}

ListAssignment uniform_lists(const Graph& g, int size) {
    ColourSet colours;
    for (Colour c = 0; c < size; ++c)
        colours.insert(c);
    ListAssignment out;
    for (Vertex v : g.vertices())
        out.emplace(v, colours);
    return out;
}

ExtractConfig instance_config(const SuiteInstance& inst, const Graph& g) {
    if (inst.mode == PaletteMode::plain)
        return ExtractConfig::plain(inst.k);
    return ExtractConfig::list(inst.k, uniform_lists(g, inst.list_size));
}

InstanceRecord run_instance(const SuiteInstance& inst) {
    InstanceRecord rec;
    rec.id = inst.id;
    rec.spec = inst.spec;
    rec.k = inst.k;
    rec.mode = inst.mode;
    rec.expect = inst.expect;
    auto start = Clock::now();
    try {
        Graph g = instance_graph(inst);
        ExtractConfig cfg = instance_config(inst, g);
        cfg.check_invariants = true;
        Certificate cert = extract(g, cfg);
        rec.certificate = to_text(cert);
        rec.subgraph_order = cert.subgraph.size();
        rec.min_cut = cert.min_cut_size;
        rec.evidence = evidence_of(cert);
        rec.decisions = cert.decisions;
        rec.backtracks = cert.backtracks;
        Verdict verdict = verify_certificate(g, cert);
        rec.verified = verdict.accepted;
        if (!verdict)
            rec.detail = verdict.failures.front();
        Graph h = induced_subgraph(g, cert.subgraph);
        bool connected = oracles::is_k_connected(h, inst.k);
        bool chromatic = inst.mode == PaletteMode::plain
                             ? !oracles::colourable(h, inst.k - 1)
                             : cert.list_witness && !oracles::list_colourable(h, *cert.list_witness);
        rec.rechecked = connected && chromatic;
        if (!rec.rechecked && rec.detail.empty())
            rec.detail = connected ? "oracle colours H below k" : "oracle finds H not k-connected";
        rec.outcome = verdict.accepted ? "certified" : "rejected";
    } catch (const NotInextensible&) {
        rec.outcome = "not_inextensible";
    } catch (const ResourceLimitReached& e) {
        rec.outcome = "resource_limit";
        rec.detail = e.what();
    } catch (const InternalContradiction& e) {
        rec.outcome = "contradiction";
        rec.detail = e.stage;
    } catch (const std::exception& e) {
        rec.outcome = "error";
        rec.detail = e.what();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rec;
}

RunReport run_theorem1() {
    return run_instances("theorem1", theorem1_instances());
}

RunReport run_theorem2() {
    return run_instances("theorem2", theorem2_instances());
}

RunReport run_oracles(std::uint64_t seed) {
    RunReport report;
    report.suite = "oracles";
    report.seed = seed;
    report.checks.push_back(extend_exhaustive(seed));
    report.checks.push_back(extend_random(seed));
    report.checks.push_back(colourable_exhaustive());
    report.checks.push_back(cut_exhaustive());
    report.checks.push_back(cut_random(seed));
    report.checks.push_back(choosability_c4());
    report.checks.push_back(choosability_k4());
    report.checks.push_back(choosability_k24());
    return report;
}

RunReport run_properties(std::uint64_t seed) {
    RunReport report;
    report.suite = "properties";
    report.seed = seed;
    report.checks.push_back(degree_additivity(seed));
    report.checks.push_back(strengthening(seed));
    for (auto& c : cut_constructions(seed))
        report.checks.push_back(std::move(c));
    for (auto& c : interval_checks(seed))
        report.checks.push_back(std::move(c));
    report.checks.push_back(rainbow_checks(seed));
    report.checks.push_back(mutated_witnesses(seed));
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem1", "theorem2", "oracles", "properties"};
    return names;
}

RunReport run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "theorem1")
        return run_theorem1();
    if (name == "theorem2")
        return run_theorem2();
    if (name == "oracles")
        return run_oracles(seed);
    if (name == "properties")
        return run_properties(seed);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace kcx
