#include "kcx/random_instances.hpp"

#include <algorithm>
#include <numeric>

namespace kcx::random_instances {

int uniform(Rng& rng, int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng() % span);
}

bool chance(Rng& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Graph graph(Rng& rng, int n, double p) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (chance(rng, p))
                edges.emplace_back(u, v);
    return Graph::with_order(n, edges);
}

std::vector<int> permutation(Rng& rng, int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    std::iota(out.begin(), out.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(uniform(rng, 0, i))]);
    return out;
}

ListAssignment lists(Rng& rng, const VertexSet& vertices, int universe, int min_size, int max_size) {
    ListAssignment out;
    for (Vertex v : vertices) {
        int size = std::min(uniform(rng, min_size, max_size), universe);
        auto order = permutation(rng, universe);
        out[v] = ColourSet(order.begin(), order.begin() + size);
    }
    return out;
}

Template template_for(Rng& rng, const Graph& g, const Palette& palette, const TemplateShape& shape) {
    std::map<Vertex, Colour> precolour;
    std::map<Vertex, ColourSet> forbidden;
    long used = 0;
    auto budget_left = [&](long cost) { return shape.max_degree < 0 || used + cost <= shape.max_degree; };
    auto order = permutation(rng, static_cast<int>(g.order()));
    for (int idx : order) {
        Vertex v = g.vertices()[static_cast<std::size_t>(idx)];
        std::vector<Colour> allowed;
        for (Colour c : palette.colours_for(v))
            allowed.push_back(c);
        if (allowed.empty())
            continue;
        if (precolour.size() < shape.max_precoloured && budget_left(shape.k) && chance(rng, shape.precolour_probability)) {
            Colour c = allowed[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(allowed.size()) - 1))];
            bool clash = false;
            for (Vertex w : g.neighbours(v))
                if (auto it = precolour.find(w); it != precolour.end() && it->second == c)
                    clash = true;
            if (!clash) {
                precolour.emplace(v, c);
                used += shape.k;
                continue;
            }
        }
        if (shape.max_forbidden == 0 || !chance(rng, shape.forbid_probability))
            continue;
        int size = uniform(rng, 1, static_cast<int>(std::min(shape.max_forbidden, allowed.size())));
        while (size > 0 && !budget_left(size))
            --size;
        if (size == 0)
            continue;
        auto pick = permutation(rng, static_cast<int>(allowed.size()));
        ColourSet list;
        for (int i = 0; i < size; ++i)
            list.insert(allowed[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
        forbidden.emplace(v, std::move(list));
        used += size;
    }
    return Template(std::move(precolour), std::move(forbidden));
}

}  // namespace kcx::random_instances
