#include "kcx/template.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace kcx {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition)
        throw std::invalid_argument(message);
}

std::string vertex_name(Vertex v) {
    return "vertex " + std::to_string(v);
}

// x, y, z pairwise disjoint with union V(h).
void require_partition(const Graph& h, const std::vector<const VertexSet*>& parts, const std::string& op) {
    VertexSet all;
    std::size_t total = 0;
    for (const auto* part : parts) {
        require(std::is_sorted(part->begin(), part->end()), op + ": vertex sets must be sorted");
        all = set_union(all, *part);
        total += part->size();
    }
    require(all.size() == total, op + ": vertex sets overlap");
    require(all == h.vertices(), op + ": vertex sets must cover the graph exactly");
}

}  // namespace

Palette Palette::plain(int size) {
    if (size < 0)
        throw std::invalid_argument("palette: negative size");
    Palette p;
    p.mode = PaletteMode::plain;
    p.size = size;
    return p;
}

Palette Palette::with_lists(ListAssignment lists) {
    Palette p;
    p.mode = PaletteMode::list;
    p.lists = std::move(lists);
    return p;
}

bool Palette::allows(Vertex v, Colour c) const {
    if (mode == PaletteMode::plain)
        return c >= 0 && c < size;
    auto it = lists.find(v);
    return it != lists.end() && it->second.contains(c);
}

ColourSet Palette::colours_for(Vertex v) const {
    if (mode == PaletteMode::list)
        return lists.at(v);
    ColourSet out;
    for (Colour c = 0; c < size; ++c)
        out.insert(out.end(), c);
    return out;
}

int Palette::min_list_size(const VertexSet& vs) const {
    if (mode == PaletteMode::plain)
        return size;
    int best = std::numeric_limits<int>::max();
    for (Vertex v : vs) {
        auto it = lists.find(v);
        best = std::min(best, it == lists.end() ? 0 : static_cast<int>(it->second.size()));
    }
    return best;
}

Template::Template(std::map<Vertex, Colour> precolour, std::map<Vertex, ColourSet> forbidden)
    : precolour_(std::move(precolour)) {
    for (auto& [v, list] : forbidden) {
        if (list.empty())
            continue;
        if (precolour_.contains(v))
            throw MalformedTemplate(vertex_name(v) + " is pre-coloured and has forbidden colours");
        forbidden_.emplace(v, std::move(list));
    }
}

VertexSet Template::precoloured_set() const {
    VertexSet out;
    for (auto [v, c] : precolour_)
        out.push_back(v);
    return out;
}

const ColourSet& Template::forbidden_at(Vertex v) const {
    static const ColourSet none;
    auto it = forbidden_.find(v);
    return it == forbidden_.end() ? none : it->second;
}

ColourSet Template::precolour_colours() const {
    ColourSet out;
    for (auto [v, c] : precolour_)
        out.insert(c);
    return out;
}

std::size_t Template::max_forbidden() const {
    std::size_t best = 0;
    for (const auto& [v, list] : forbidden_)
        best = std::max(best, list.size());
    return best;
}

void validate_template(const Graph& g, const Template& t, const Palette& palette) {
    for (auto [v, c] : t.precolour()) {
        if (!g.has_vertex(v))
            throw MalformedTemplate("pre-coloured " + vertex_name(v) + " is not in the graph");
        if (!palette.allows(v, c))
            throw MalformedTemplate("pre-colour of " + vertex_name(v) + " is outside the palette");
        for (Vertex w : g.neighbours(v)) {
            auto it = t.precolour().find(w);
            if (it != t.precolour().end() && it->second == c)
                throw MalformedTemplate("pre-colouring is not proper on " + vertex_name(v));
        }
    }
    for (const auto& [v, list] : t.forbidden()) {
        if (!g.has_vertex(v))
            throw MalformedTemplate("forbidden list on " + vertex_name(v) + " outside the graph");
        if (palette.mode == PaletteMode::list) {
            auto it = palette.lists.find(v);
            if (it == palette.lists.end() ||
                !std::includes(it->second.begin(), it->second.end(), list.begin(), list.end()))
                throw MalformedTemplate("forbidden colours of " + vertex_name(v) + " are not in its list");
        }
    }
    if (palette.mode == PaletteMode::list)
        for (Vertex v : g.vertices())
            if (!palette.lists.contains(v))
                throw MalformedTemplate(vertex_name(v) + " has no colour list");
}

long degree(const Template& t, int k) {
    long total = static_cast<long>(k) * static_cast<long>(t.precolour().size());
    for (const auto& [v, list] : t.forbidden())
        total += static_cast<long>(list.size());
    return total;
}

Template restrict(const Template& t, const VertexSet& x) {
    std::map<Vertex, Colour> precolour;
    std::map<Vertex, ColourSet> forbidden;
    for (auto [v, c] : t.precolour())
        if (contains(x, v))
            precolour.emplace(v, c);
    for (const auto& [v, list] : t.forbidden())
        if (contains(x, v))
            forbidden.emplace(v, list);
    return Template(std::move(precolour), std::move(forbidden));
}

bool respects(const Graph& g, const Template& t, const Palette& palette, const Colouring& col) {
    if (!is_proper(g, col))
        return false;
    for (Vertex v : g.vertices()) {
        Colour c = col.at(v);
        if (!palette.allows(v, c))
            return false;
        auto pre = t.precolour().find(v);
        if (pre != t.precolour().end() ? pre->second != c : t.forbidden_at(v).contains(c))
            return false;
    }
    return true;
}

ColourSet available_colours(const Template& t, const Palette& palette, Vertex v) {
    ColourSet out = palette.colours_for(v);
    for (Colour c : t.forbidden_at(v))
        out.erase(c);
    for (auto [u, c] : t.precolour())
        out.erase(c);
    return out;
}

Template strengthen_witness(const Graph& g, const Template& t, int k, const Palette& palette) {
    require(k >= 1, "strengthen_witness: k must be positive");
    require(degree(t, k) <= 2L * k * k, "strengthen_witness: degree exceeds 2k^2");
    require(t.max_forbidden() <= static_cast<std::size_t>(2 * k), "strengthen_witness: a forbidden list exceeds 2k");
    auto precolour = t.precolour();
    auto forbidden = t.forbidden();
    for (Vertex v : g.vertices()) {
        auto it = forbidden.find(v);
        if (it == forbidden.end() || it->second.size() < static_cast<std::size_t>(k))
            continue;
        ColourSet used;
        for (auto [u, c] : precolour)
            used.insert(c);
        std::optional<Colour> pick;
        for (Colour c : palette.colours_for(v))
            if (!it->second.contains(c) && !used.contains(c)) {
                pick = c;
                break;
            }
        if (!pick)
            throw InternalInvariantError("strengthen_witness: no eligible colour for " + vertex_name(v));
        forbidden.erase(it);
        precolour.emplace(v, *pick);
    }
    return Template(std::move(precolour), std::move(forbidden));
}

Template derive_separation_template(const Graph& h, const Template& t, const Palette& palette, int k,
                                    const VertexSet& x, const VertexSet& y, const VertexSet& z) {
    const std::string op = "derive_separation_template";
    require(k >= 1, op + ": k must be positive");
    require_partition(h, {&x, &y, &z}, op);
    require(!y.empty() && !z.empty(), op + ": both sides must be nonempty");
    require(x.size() <= static_cast<std::size_t>(k - 1), op + ": cut larger than k-1");
    for (Vertex v : y)
        for (Vertex w : h.neighbours(v))
            require(!contains(z, w), op + ": an edge joins Y and Z");
    require(degree(restrict(t, z), k) <= static_cast<long>(k) * k, op + ": deg(T_Z) exceeds k^2");
    require(t.max_forbidden() <= static_cast<std::size_t>(k - 1), op + ": template is not strengthened");

    const VertexSet kept = set_union(x, y);
    Template base = restrict(t, kept);
    auto precolour = base.precolour();
    auto forbidden = base.forbidden();
    for (auto [zv, colour] : t.precolour()) {
        if (!contains(z, zv))
            continue;
        for (Vertex xv : h.neighbours(zv)) {
            if (!contains(x, xv) || t.is_precoloured(xv))
                continue;
            if (palette.mode == PaletteMode::list && !palette.allows(xv, colour))
                continue;
            forbidden[xv].insert(colour);
        }
    }
    return Template(std::move(precolour), std::move(forbidden));
}

Template derive_completion_template(const Graph& h, const Template& t, const Palette& palette, int k,
                                    const VertexSet& x, const VertexSet& z, const Colouring& cprime) {
    const std::string op = "derive_completion_template";
    require(k >= 1, op + ": k must be positive");
    require(x.size() <= static_cast<std::size_t>(k - 1), op + ": cut larger than k-1");
    require(set_intersection(x, z).empty(), op + ": X and Z overlap");
    for (Vertex v : set_union(x, z))
        require(h.has_vertex(v), op + ": " + vertex_name(v) + " is not in the graph");
    require(degree(restrict(t, z), k) <= static_cast<long>(k) * k, op + ": deg(T_Z) exceeds k^2");

    const VertexSet kept = set_union(x, z);
    Template base = restrict(t, kept);
    auto precolour = base.precolour();
    auto forbidden = base.forbidden();
    for (Vertex v : x) {
        auto it = cprime.find(v);
        require(it != cprime.end(), op + ": c' does not colour " + vertex_name(v));
        if (auto pre = precolour.find(v); pre != precolour.end()) {
            require(pre->second == it->second, op + ": c' disagrees with the pre-colouring on " + vertex_name(v));
            continue;
        }
        require(!t.forbidden_at(v).contains(it->second), op + ": c' uses a forbidden colour on " + vertex_name(v));
        forbidden.erase(v);
        precolour.emplace(v, it->second);
    }
    Template result(std::move(precolour), std::move(forbidden));
    try {
        validate_template(induced_subgraph(h, kept), result, palette);
    } catch (const MalformedTemplate& e) {
        throw std::invalid_argument(op + ": c' is not a respecting colouring (" + e.what() + ")");
    }
    return result;
}

Colouring glue(const Colouring& cprime, const Colouring& cdouble) {
    Colouring out = cprime;
    for (auto [v, c] : cdouble) {
        auto [it, inserted] = out.emplace(v, c);
        if (!inserted && it->second != c)
            throw std::invalid_argument("glue: colourings disagree on " + vertex_name(v));
    }
    return out;
}

Colouring rainbow_small_case(const Graph& h, const Template& t, const Palette& palette, int k) {
    require(k >= 1, "rainbow_small_case: k must be positive");
    require(h.order() <= static_cast<std::size_t>(k), "rainbow_small_case: more than k vertices");
    require(t.max_forbidden() <= static_cast<std::size_t>(k - 1), "rainbow_small_case: template is not strengthened");
    require(t.precolour().size() <= static_cast<std::size_t>(2 * k), "rainbow_small_case: more than 2k pre-coloured");

    Colouring out(t.precolour().begin(), t.precolour().end());
    ColourSet taken;
    for (Vertex v : h.vertices()) {
        if (t.is_precoloured(v))
            continue;
        std::optional<Colour> pick;
        for (Colour c : available_colours(t, palette, v))
            if (!taken.contains(c)) {
                pick = c;
                break;
            }
        if (!pick)
            throw InternalInvariantError("rainbow_small_case: no colour left for " + vertex_name(v));
        taken.insert(*pick);
        out[v] = *pick;
    }
    return out;
}

IntervalPartition interval_partition(const Graph& h, const Template& t, int k,
                                     const std::vector<VertexSet>& independent_sets) {
    const std::string op = "interval_partition";
    require(k >= 1, op + ": k must be positive");
    require(independent_sets.size() <= static_cast<std::size_t>(k - 1), op + ": more than k-1 independent sets");
    require(t.max_forbidden() <= static_cast<std::size_t>(k - 1), op + ": template is not strengthened");
    VertexSet free = set_difference(h.vertices(), t.precoloured_set());
    VertexSet all;
    std::size_t total = 0;
    for (const auto& j : independent_sets) {
        require(std::is_sorted(j.begin(), j.end()), op + ": independent sets must be sorted");
        all = set_union(all, j);
        total += j.size();
        for (Vertex v : j)
            for (Vertex w : h.neighbours(v))
                require(!contains(j, w), op + ": set is not independent");
    }
    require(all.size() == total && all == free, op + ": sets must partition V \\ S");

    return cut_intervals(t, k, independent_sets);
}

IntervalPartition cut_intervals(const Template& t, int k, const std::vector<VertexSet>& blocks) {
    IntervalPartition out;
    out.independent_sets = blocks;
    VertexSet current;
    std::size_t current_owner = 0;
    long load = 0;
    auto close = [&] {
        if (current.empty())
            return;
        out.intervals.push_back(current);
        out.owner.push_back(current_owner);
        current.clear();
        load = 0;
    };
    for (std::size_t j = 0; j < blocks.size(); ++j)
        for (Vertex v : blocks[j]) {
            // Leaving the current block ends the interval without v.
            if (!current.empty() && current_owner != j)
                close();
            current_owner = j;
            current.push_back(v);
            load += static_cast<long>(t.forbidden_at(v).size());
            // Passing k ends the interval with v.
            if (load > k)
                close();
        }
    close();
    return out;
}

Colouring colour_from_intervals(const Graph& h, const Template& t, const Palette& palette,
                                const IntervalPartition& parts) {
    require(palette.mode == PaletteMode::plain, "colour_from_intervals: plain mode only");
    VertexSet covered;
    for (const auto& interval : parts.intervals)
        covered = set_union(covered, interval);
    require(covered == set_difference(h.vertices(), t.precoloured_set()),
            "colour_from_intervals: intervals must cover V \\ S");

    const ColourSet on_s = t.precolour_colours();
    Colouring out(t.precolour().begin(), t.precolour().end());
    ColourSet taken;
    for (const auto& interval : parts.intervals) {
        std::optional<Colour> pick;
        for (Colour c = 0; c < palette.size && !pick; ++c) {
            if (on_s.contains(c) || taken.contains(c))
                continue;
            bool blocked = std::any_of(interval.begin(), interval.end(),
                                       [&](Vertex v) { return t.forbidden_at(v).contains(c); });
            if (!blocked)
                pick = c;
        }
        if (!pick)
            throw InternalInvariantError("colour_from_intervals: no colour left for an interval");
        taken.insert(*pick);
        for (Vertex v : interval)
            out[v] = *pick;
    }
    return out;
}

std::optional<Colouring> list_direct_completion(const Graph& h, const Template& t, const Palette& palette, int k) {
    require(palette.mode == PaletteMode::list, "list_direct_completion: list mode only");
    require(k >= 1, "list_direct_completion: k must be positive");
    VertexSet free = set_difference(h.vertices(), t.precoloured_set());
    ListAssignment available;
    for (Vertex v : free) {
        ColourSet list = palette.colours_for(v);
        for (Colour c : t.forbidden_at(v))
            list.erase(c);
        for (Vertex w : h.neighbours(v))
            if (auto pre = t.precolour().find(w); pre != t.precolour().end())
                list.erase(pre->second);
        available.emplace(v, std::move(list));
    }
    auto completion = list_colour(induced_subgraph(h, free), available);
    if (!completion)
        return std::nullopt;
    for (auto [v, c] : t.precolour())
        completion->emplace(v, c);
    return completion;
}

}  // namespace kcx
