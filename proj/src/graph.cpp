#include "kcx/graph.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace kcx {

Graph::Graph(VertexSet vertices, const std::vector<Edge>& edges) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("graph: duplicate vertex id");
    if (!vertices_.empty() && vertices_.front() < 0)
        throw std::invalid_argument("graph: negative vertex id");

    adjacency_.resize(vertices_.size());
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("graph: self-loop at " + std::to_string(u));
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("graph: edge endpoint is not a vertex");
        adjacency_[index_of(u)].push_back(v);
        adjacency_[index_of(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
}

Graph Graph::with_order(int n, const std::vector<Edge>& edges) {
    if (n < 0)
        throw std::invalid_argument("graph: negative order");
    VertexSet vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        vs[static_cast<std::size_t>(i)] = i;
    return Graph(std::move(vs), edges);
}

bool Graph::has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Graph::index_of(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw std::out_of_range("graph: no vertex " + std::to_string(v));
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v))
        return false;
    const auto& nbrs = adjacency_[index_of(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (Vertex w : adjacency_[i])
            if (vertices_[i] < w)
                out.emplace_back(vertices_[i], w);
    return out;
}

bool Graph::is_complete() const {
    auto n = vertices_.size();
    return n == 0 || edge_count_ == n * (n - 1) / 2;
}

bool Graph::has_dense_ids() const {
    return vertices_.empty() || vertices_.back() == static_cast<Vertex>(vertices_.size()) - 1;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    VertexSet members = make_vertex_set(x);
    for (Vertex v : members)
        if (!g.has_vertex(v))
            throw std::invalid_argument("induced_subgraph: " + std::to_string(v) + " is not a vertex");
    std::vector<Edge> edges;
    for (Vertex u : members)
        for (Vertex w : g.neighbours(u))
            if (u < w && contains(members, w))
                edges.emplace_back(u, w);
    return Graph(std::move(members), edges);
}

Graph remove_vertices(const Graph& g, const VertexSet& x) {
    return induced_subgraph(g, set_difference(g.vertices(), make_vertex_set(x)));
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(g.order(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < g.order(); ++start) {
        if (seen[start])
            continue;
        VertexSet comp;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            comp.push_back(g.vertices()[i]);
            for (Vertex w : g.neighbours_at(i)) {
                auto j = g.index_of(w);
                if (!seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace kcx
