#pragma once

#include <utility>
#include <variant>

#include "kcx/graph.hpp"

namespace kcx {

// Marker returned by min_vertex_cut for complete graphs, which have no
// vertex cut.
struct Complete {
    friend bool operator==(Complete, Complete) { return true; }
};

using CutResult = std::variant<VertexSet, Complete>;

// Maximum number of internally disjoint s-t paths for non-adjacent s, t
// (max-flow on the vertex-split digraph). Vertices in `uncuttable` get
// unbounded capacity.
int local_connectivity(const Graph& g, Vertex s, Vertex t, const VertexSet& uncuttable = {});

// kappa(G); n-1 for complete graphs, 0 for disconnected ones.
int vertex_connectivity(const Graph& g);

// Minimum vertex cut, lexicographically smallest among the minimum ones.
// Disconnected graphs give the empty cut; complete graphs (including
// K_0 and K_1) give Complete.
CutResult min_vertex_cut(const Graph& g);

// More than k vertices and no cut of size < k. Throws for k <= 0.
bool is_k_connected(const Graph& g, int k);

// (Y, Z) with Y the component of G - X holding the smallest vertex and Z
// the union of the remaining components. Throws std::invalid_argument if
// X is not a cut.
std::pair<VertexSet, VertexSet> split_by_cut(const Graph& g, const VertexSet& x);

}  // namespace kcx
