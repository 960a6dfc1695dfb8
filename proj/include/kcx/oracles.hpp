#pragma once

#include <cstdint>

#include "kcx/colouring.hpp"
#include "kcx/connectivity.hpp"

// Exhaustive reference implementations. Exponential; desk-scale inputs only.
namespace kcx::oracles {

// Tries all t^n assignments.
bool colourable(const Graph& g, int t);

// Tries every assignment from the product of the lists.
bool list_colourable(const Graph& g, const ListAssignment& lists);

// Subsets by increasing size, lexicographic within a size.
CutResult min_vertex_cut(const Graph& g);

// n > k and no vertex subset of size < k disconnects g.
bool is_k_connected(const Graph& g, int k);

// Every (t-1)-subset of 0..n(t-1)-1 at every vertex, no symmetry reduction.
// Throws std::length_error after `max_assignments` list assignments.
bool list_chromatic_at_least(const Graph& g, int t, std::uint64_t max_assignments = 50'000'000);

}  // namespace kcx::oracles
