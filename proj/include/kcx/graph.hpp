#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace kcx {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

// Undirected simple graph. Vertex identifiers are arbitrary non-negative
// integers so that induced subgraphs keep the identities of their host;
// generated and parsed graphs use 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops, unknown endpoints,
    // duplicate vertices or negative ids. Duplicate edges are merged.
    Graph(VertexSet vertices, const std::vector<Edge>& edges);

    // Graph on 0..n-1.
    static Graph with_order(int n, const std::vector<Edge>& edges);

    const VertexSet& vertices() const { return vertices_; }
    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return vertices_.empty(); }

    bool has_vertex(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    // Position of v in vertices(); throws std::out_of_range if absent.
    std::size_t index_of(Vertex v) const;

    // Sorted neighbour ids.
    const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[index_of(v)]; }
    const std::vector<Vertex>& neighbours_at(std::size_t index) const { return adjacency_[index]; }
    std::size_t degree(Vertex v) const { return neighbours(v).size(); }

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool is_complete() const;

    // True when the ids are exactly 0..n-1.
    bool has_dense_ids() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_;
    }

private:
    VertexSet vertices_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

// G[X]; identities preserved. Throws std::invalid_argument if some member
// of x is not a vertex of g.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

// G - X.
Graph remove_vertices(const Graph& g, const VertexSet& x);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<Vertex> vs);

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);

}  // namespace kcx
