#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcx/graph.hpp"

namespace kcx {

enum class Family { complete, cycle, join, mycielski, kneser, glued_cliques, random };

// Parameters of a deterministic graph family.
//   complete     sizes = {n}
//   cycle        sizes = {n}, n >= 3
//   join         parts = graphs to join (all cross edges added)
//   mycielski    sizes = {iterations}; parts = {base} or empty for K_2
//   kneser       sizes = {n, r}, n >= 2r, r >= 1
//   glued_cliques sizes = clique sizes, shared = size of the common set
//   random       sizes = {n}, probability, seed
struct FamilySpec {
    Family family = Family::complete;
    std::vector<int> sizes;
    std::vector<FamilySpec> parts;
    int shared = 0;
    double probability = 0.0;
    std::uint64_t seed = 0;
};

// Throws std::invalid_argument for invalid parameters.
Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph join(const std::vector<Graph>& parts);
Graph mycielskian(const Graph& g);
Graph kneser_graph(int n, int r);
// Cliques pairwise meeting in the fixed set {0..shared-1}.
Graph glued_cliques(const std::vector<int>& sizes, int shared);
Graph random_graph(int n, double p, std::uint64_t seed);

// Relabels to 0..n-1 preserving order.
Graph relabel_dense(const Graph& g);

// Compact textual form, e.g. "complete:8", "glued:15,15/1",
// "join(cycle:5,complete:5)", "random:20,0.5@7". Round-trips through
// parse_family.
std::string to_string(const FamilySpec& spec);
FamilySpec parse_family(const std::string& text);

}  // namespace kcx
