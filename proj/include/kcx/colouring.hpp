#pragma once

#include <map>
#include <optional>
#include <set>

#include "kcx/graph.hpp"

namespace kcx {

using Colour = int;
using ColourSet = std::set<Colour>;

// Vertex -> colour. Total on the vertex set it is meant for.
using Colouring = std::map<Vertex, Colour>;

// Vertex -> L_v.
using ListAssignment = std::map<Vertex, ColourSet>;

bool is_proper(const Graph& g, const Colouring& col);

// Exact decision for t-colourability (DSATUR-ordered backtracking). Returns
// a proper colouring with colours 0..t-1, or nullopt when none exists.
std::optional<Colouring> is_colourable(const Graph& g, int t);

// Exact list colouring. Throws std::invalid_argument if some vertex has no
// entry in `lists`; an empty list simply makes the instance unsatisfiable.
std::optional<Colouring> list_colour(const Graph& g, const ListAssignment& lists);

struct ChoosabilityOptions {
    // Largest graph searched when t >= 3.
    std::size_t vertex_cap = 8;
};

struct ChoosabilityResult {
    bool at_least = false;
    std::optional<ListAssignment> witness;  // (t-1)-lists with no colouring
};

// chi_l(G) >= t? Searches (t-1)-element list assignments over the colour
// universe 0..|V|(t-1)-1 up to colour renaming. Throws std::length_error if
// t >= 3 and the graph exceeds the cap.
ChoosabilityResult list_chromatic_at_least(const Graph& g, int t, const ChoosabilityOptions& options = {});

}  // namespace kcx
