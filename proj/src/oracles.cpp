#include "kcx/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace kcx::oracles {

namespace {

bool proper(const Graph& g, const std::vector<Colour>& colour) {
    for (auto [u, v] : g.edges())
        if (colour[g.index_of(u)] == colour[g.index_of(v)])
            return false;
    return true;
}

bool disconnects(const Graph& g, const VertexSet& x) {
    return components(remove_vertices(g, x)).size() >= 2;
}

// Calls visit on each size-r subset of vs in lexicographic order until it
// returns true.
template <typename Visit>
bool for_each_subset(const VertexSet& vs, std::size_t r, Visit visit) {
    std::vector<char> mask(vs.size(), 0);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(r), 1);
    do {
        VertexSet subset;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (mask[i])
                subset.push_back(vs[i]);
        if (visit(subset))
            return true;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return false;
}

}  // namespace

bool colourable(const Graph& g, int t) {
    const std::size_t n = g.order();
    if (n == 0)
        return true;
    if (t <= 0)
        return false;
    std::vector<Colour> colour(n, 0);
    while (true) {
        if (proper(g, colour))
            return true;
        std::size_t pos = 0;
        while (pos < n && ++colour[pos] == t)
            colour[pos++] = 0;
        if (pos == n)
            return false;
    }
}

bool list_colourable(const Graph& g, const ListAssignment& lists) {
    const std::size_t n = g.order();
    std::vector<std::vector<Colour>> options;
    for (Vertex v : g.vertices()) {
        const auto& list = lists.at(v);
        if (list.empty())
            return false;
        options.emplace_back(list.begin(), list.end());
    }
    std::vector<std::size_t> pick(n, 0);
    std::vector<Colour> colour(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i)
            colour[i] = options[i][pick[i]];
        if (proper(g, colour))
            return true;
        std::size_t pos = 0;
        while (pos < n && ++pick[pos] == options[pos].size())
            pick[pos++] = 0;
        if (pos == n)
            return false;
    }
}

CutResult min_vertex_cut(const Graph& g) {
    const auto& vs = g.vertices();
    for (std::size_t r = 0; r + 2 <= vs.size(); ++r) {
        VertexSet found;
        if (for_each_subset(vs, r, [&](const VertexSet& x) {
                if (!disconnects(g, x))
                    return false;
                found = x;
                return true;
            }))
            return found;
    }
    return Complete{};
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0)
        throw std::invalid_argument("oracles::is_k_connected: k must be positive");
    if (static_cast<int>(g.order()) <= k)
        return false;
    for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r)
        if (for_each_subset(g.vertices(), r, [&](const VertexSet& x) { return disconnects(g, x); }))
            return false;
    return true;
}

bool list_chromatic_at_least(const Graph& g, int t, std::uint64_t max_assignments) {
    if (t <= 0)
        throw std::invalid_argument("oracles::list_chromatic_at_least: t must be positive");
    const std::size_t n = g.order();
    const int m = t - 1;
    if (n == 0)
        return false;
    if (m == 0)
        return true;
    const int universe = static_cast<int>(n) * m;
    std::vector<ColourSet> subsets;
    std::vector<char> mask(static_cast<std::size_t>(universe), 0);
    std::fill(mask.begin(), mask.begin() + m, 1);
    do {
        ColourSet s;
        for (int c = 0; c < universe; ++c)
            if (mask[static_cast<std::size_t>(c)])
                s.insert(c);
        subsets.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));

    std::vector<std::size_t> pick(n, 0);
    std::uint64_t tried = 0;
    while (true) {
        if (++tried > max_assignments)
            throw std::length_error("oracles::list_chromatic_at_least: enumeration cap reached");
        ListAssignment lists;
        for (std::size_t i = 0; i < n; ++i)
            lists[g.vertices()[i]] = subsets[pick[i]];
        if (!list_colourable(g, lists))
            return true;
        std::size_t pos = 0;
        while (pos < n && ++pick[pos] == subsets.size())
            pick[pos++] = 0;
        if (pos == n)
            return false;
    }
}

}  // namespace kcx::oracles
