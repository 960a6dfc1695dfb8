#pragma once

#include <cstdint>
#include <random>

#include "kcx/template.hpp"

// Seeded generators for randomized checks. Only raw engine output is used,
// so streams are identical across standard libraries.
namespace kcx::random_instances {

using Rng = std::mt19937_64;

// Uniform in [lo, hi].
int uniform(Rng& rng, int lo, int hi);
bool chance(Rng& rng, double p);

Graph graph(Rng& rng, int n, double p);

// Each vertex's list: `size` colours drawn from 0..universe-1.
ListAssignment lists(Rng& rng, const VertexSet& vertices, int universe, int min_size, int max_size);

struct TemplateShape {
    double precolour_probability = 0.25;
    double forbid_probability = 0.3;
    std::size_t max_forbidden = 3;
    std::size_t max_precoloured = SIZE_MAX;
    long max_degree = -1;  // negative: unbounded
    int k = 1;             // weight of a pre-coloured vertex in the degree
};

// Random template whose pre-colouring is proper and allowed by the palette,
// with forbidden colours drawn from the palette (from L_v in list mode).
Template template_for(Rng& rng, const Graph& g, const Palette& palette, const TemplateShape& shape);

// Random permutation of 0..n-1.
std::vector<int> permutation(Rng& rng, int n);

}  // namespace kcx::random_instances
