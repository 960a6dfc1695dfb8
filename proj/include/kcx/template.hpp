#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kcx/colouring.hpp"
#include "kcx/graph.hpp"

namespace kcx {

enum class PaletteMode { plain, list };

// Plain mode: colours 0..size-1 everywhere. List mode: vertex v may only
// use L_v.
struct Palette {
    PaletteMode mode = PaletteMode::plain;
    int size = 0;
    ListAssignment lists;

    static Palette plain(int size);
    static Palette with_lists(ListAssignment lists);

    bool allows(Vertex v, Colour c) const;
    // Throws std::out_of_range in list mode when v has no list.
    ColourSet colours_for(Vertex v) const;
    // Smallest list size over the given vertices (plain: size).
    int min_list_size(const VertexSet& vs) const;

    friend bool operator==(const Palette&, const Palette&) = default;
};

// (S, c, F): pre-colouring c on S and forbidden lists F elsewhere. Empty
// forbidden lists are not stored.
class Template {
public:
    Template() = default;
    // Throws std::invalid_argument if a vertex is both pre-coloured and
    // carries a forbidden list.
    Template(std::map<Vertex, Colour> precolour, std::map<Vertex, ColourSet> forbidden);

    const std::map<Vertex, Colour>& precolour() const { return precolour_; }
    const std::map<Vertex, ColourSet>& forbidden() const { return forbidden_; }

    VertexSet precoloured_set() const;
    bool is_precoloured(Vertex v) const { return precolour_.contains(v); }
    const ColourSet& forbidden_at(Vertex v) const;
    ColourSet precolour_colours() const;
    std::size_t max_forbidden() const;

    friend bool operator==(const Template&, const Template&) = default;

private:
    std::map<Vertex, Colour> precolour_;
    std::map<Vertex, ColourSet> forbidden_;
};

struct MalformedTemplate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a construction that cannot fail under its preconditions does.
struct InternalInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// Domains inside V(g), pre-colouring proper on G[S] and allowed by the
// palette, forbidden colours inside L_v in list mode.
void validate_template(const Graph& g, const Template& t, const Palette& palette);

// k|S| + sum |F(v)|.
long degree(const Template& t, int k);

Template restrict(const Template& t, const VertexSet& x);

// Proper, total on V(g), extends c, avoids every F(v), and uses only
// palette colours (L_v in list mode).
bool respects(const Graph& g, const Template& t, const Palette& palette, const Colouring& col);

// Colours v may take while S keeps its colours: palette minus F(v) minus
// every colour used on S.
ColourSet available_colours(const Template& t, const Palette& palette, Vertex v);

// Pre-colours, smallest vertex first, each vertex with |F(v)| >= k using the
// smallest colour outside F(v) and c(S). Requires deg <= 2k^2 and
// |F| <= 2k. The result respects |F| <= k-1 with degree no larger.
Template strengthen_witness(const Graph& g, const Template& t, int k, const Palette& palette);

// T' on H[X u Y]: the restriction, with the colour of each pre-coloured
// z in Z forbidden at its neighbours in X \ S.
Template derive_separation_template(const Graph& h, const Template& t, const Palette& palette, int k,
                                    const VertexSet& x, const VertexSet& y, const VertexSet& z);

// T'' on H[X u Z]: the restriction with X \ S pre-coloured by cprime.
Template derive_completion_template(const Graph& h, const Template& t, const Palette& palette, int k,
                                    const VertexSet& x, const VertexSet& z, const Colouring& cprime);

// Union of two colourings that agree on their common vertices.
Colouring glue(const Colouring& cprime, const Colouring& cdouble);

// Pairwise distinct colours on V \ S from the available lists, for graphs
// on at most k vertices.
Colouring rainbow_small_case(const Graph& h, const Template& t, const Palette& palette, int k);

struct IntervalPartition {
    std::vector<VertexSet> independent_sets;
    std::vector<VertexSet> intervals;
    std::vector<std::size_t> owner;  // index into independent_sets per interval
};

// Walks V \ S with each independent set as a contiguous block (given order,
// ids ascending inside a block) and cuts a new interval when the next
// vertex leaves the current block, or right after the forbidden-list total
// of the current interval exceeds k.
IntervalPartition interval_partition(const Graph& h, const Template& t, int k,
                                     const std::vector<VertexSet>& independent_sets);

// The two cutting rules alone, without checking independence, the number of
// sets or the forbidden-list sizes.
IntervalPartition cut_intervals(const Template& t, int k, const std::vector<VertexSet>& blocks);

// One colour per interval, pairwise distinct, avoiding c(S) and the
// forbidden lists of its members. Plain mode only.
Colouring colour_from_intervals(const Graph& h, const Template& t, const Palette& palette,
                                const IntervalPartition& parts);

// List mode completion: colours V \ S from L_v minus F(v) minus colours of
// pre-coloured neighbours.
std::optional<Colouring> list_direct_completion(const Graph& h, const Template& t, const Palette& palette, int k);

}  // namespace kcx
