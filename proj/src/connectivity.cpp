#include "kcx/connectivity.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <stdexcept>

namespace kcx {

namespace {

constexpr int unbounded = INT_MAX / 4;

// Edmonds-Karp on a small residual network.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : head_(nodes, -1) {}

    void add_arc(int from, int to, int capacity) {
        arcs_.push_back({to, capacity, head_[static_cast<std::size_t>(from)]});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    // Stops once `limit` units have been pushed.
    int max_flow(int source, int sink, int limit) {
        int flow = 0;
        std::vector<int> via(head_.size());
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> frontier;
            frontier.push(source);
            via[static_cast<std::size_t>(source)] = -2;
            while (!frontier.empty() && via[static_cast<std::size_t>(sink)] == -1) {
                int node = frontier.front();
                frontier.pop();
                for (int a = head_[static_cast<std::size_t>(node)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
                    const auto& arc = arcs_[static_cast<std::size_t>(a)];
                    if (arc.capacity > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
                        via[static_cast<std::size_t>(arc.to)] = a;
                        frontier.push(arc.to);
                    }
                }
            }
            if (via[static_cast<std::size_t>(sink)] == -1)
                break;
            int bottleneck = unbounded;
            for (int node = sink; node != source;) {
                const auto& arc = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(node)])];
                bottleneck = std::min(bottleneck, arc.capacity);
                node = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(node)] ^ 1)].to;
            }
            bottleneck = std::min(bottleneck, limit - flow);
            for (int node = sink; node != source;) {
                auto a = static_cast<std::size_t>(via[static_cast<std::size_t>(node)]);
                arcs_[a].capacity -= bottleneck;
                arcs_[a ^ 1].capacity += bottleneck;
                node = arcs_[a ^ 1].to;
            }
            flow += bottleneck;
        }
        return flow;
    }

private:
    struct Arc {
        int to;
        int capacity;
        int next;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

int bounded_local_connectivity(const Graph& g, Vertex s, Vertex t, const VertexSet& uncuttable, int limit) {
    const auto n = g.order();
    FlowNetwork net(2 * n);
    auto in = [](std::size_t i) { return static_cast<int>(2 * i); };
    auto out = [](std::size_t i) { return static_cast<int>(2 * i + 1); };
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = g.vertices()[i];
        bool free = v == s || v == t || contains(uncuttable, v);
        net.add_arc(in(i), out(i), free ? unbounded : 1);
        for (Vertex w : g.neighbours_at(i))
            net.add_arc(out(i), in(g.index_of(w)), unbounded);
    }
    return net.max_flow(out(g.index_of(s)), in(g.index_of(t)), limit);
}

// Smallest vertex cut avoiding `uncuttable`; INT_MAX when there is none.
int constrained_cut_size(const Graph& g, const VertexSet& uncuttable) {
    if (g.order() < 2 || g.is_complete())
        return INT_MAX;
    if (!is_connected(g))
        return 0;
    int best = INT_MAX;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (g.adjacent(vs[i], vs[j]))
                continue;
            // A cut never exceeds n-2 vertices, so reaching n-1 means this
            // pair cannot be separated at all.
            int limit = best == INT_MAX ? static_cast<int>(g.order()) - 1 : best;
            int flow = bounded_local_connectivity(g, vs[i], vs[j], uncuttable, limit);
            if (flow < limit)
                best = flow;
        }
    return best;
}

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, const VertexSet& uncuttable) {
    if (s == t || g.adjacent(s, t))
        throw std::invalid_argument("local_connectivity: endpoints must be distinct and non-adjacent");
    return bounded_local_connectivity(g, s, t, uncuttable, unbounded);
}

int vertex_connectivity(const Graph& g) {
    if (g.is_complete())
        return g.empty() ? 0 : static_cast<int>(g.order()) - 1;
    return constrained_cut_size(g, {});
}

CutResult min_vertex_cut(const Graph& g) {
    if (g.order() <= 1 || g.is_complete())
        return Complete{};
    const int kappa = vertex_connectivity(g);

    // Build the lexicographically smallest cut one element at a time: fix a
    // prefix and ask whether the rest can be completed from larger ids only.
    VertexSet prefix;
    Vertex last = -1;
    for (int position = 0; position < kappa; ++position) {
        const int remaining = kappa - position - 1;
        bool placed = false;
        for (Vertex v : g.vertices()) {
            if (v <= last)
                continue;
            VertexSet trial = prefix;
            trial.push_back(v);
            Graph rest = remove_vertices(g, trial);
            bool feasible = false;
            if (remaining == 0) {
                feasible = components(rest).size() >= 2;
            } else {
                VertexSet fixed;
                for (Vertex u : rest.vertices())
                    if (u < v)
                        fixed.push_back(u);
                feasible = constrained_cut_size(rest, fixed) == remaining;
            }
            if (feasible) {
                prefix = std::move(trial);
                last = v;
                placed = true;
                break;
            }
        }
        if (!placed)
            throw std::logic_error("min_vertex_cut: lexicographic reconstruction failed");
    }
    return prefix;
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0)
        throw std::invalid_argument("is_k_connected: k must be positive");
    if (static_cast<int>(g.order()) <= k)
        return false;
    if (g.is_complete())
        return true;
    if (!is_connected(g))
        return false;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j]) && bounded_local_connectivity(g, vs[i], vs[j], {}, k) < k)
                return false;
    return true;
}

std::pair<VertexSet, VertexSet> split_by_cut(const Graph& g, const VertexSet& x) {
    for (Vertex v : x)
        if (!g.has_vertex(v))
            throw std::invalid_argument("split_by_cut: cut member is not a vertex");
    auto comps = components(remove_vertices(g, x));
    if (comps.size() < 2)
        throw std::invalid_argument("split_by_cut: removing X does not disconnect the graph");
    VertexSet y = comps.front();
    VertexSet z;
    for (std::size_t i = 1; i < comps.size(); ++i)
        z = set_union(z, comps[i]);
    return {std::move(y), std::move(z)};
}

}  // namespace kcx
