#include <doctest.h>

#include <stdexcept>

#include "kcx/colouring.hpp"
#include "kcx/generators.hpp"
#include "kcx/oracles.hpp"

using namespace kcx;

namespace {

Graph grotzsch() {
    return mycielskian(cycle_graph(5));
}

Graph k24() {
    std::vector<Edge> edges;
    for (int u = 0; u < 2; ++u)
        for (int v = 2; v < 6; ++v)
            edges.emplace_back(u, v);
    return Graph::with_order(6, edges);
}

void check_colouring(const Graph& g, const std::optional<Colouring>& col, int t) {
    REQUIRE(col.has_value());
    CHECK(col->size() == g.order());
    CHECK(is_proper(g, *col));
    for (auto [v, c] : *col) {
        CHECK(c >= 0);
        CHECK(c < t);
    }
}

}  // namespace

TEST_SUITE("colouring") {

TEST_CASE("odd cycle") {
    CHECK_FALSE(is_colourable(cycle_graph(5), 2));
    check_colouring(cycle_graph(5), is_colourable(cycle_graph(5), 3), 3);
}

TEST_CASE("Petersen graph has chromatic number 3") {
    Graph g = kneser_graph(5, 2);
    CHECK_FALSE(is_colourable(g, 2));
    CHECK_FALSE(oracles::colourable(g, 2));
    check_colouring(g, is_colourable(g, 3), 3);
    CHECK(oracles::colourable(g, 3));
}

TEST_CASE("Grotzsch graph has chromatic number 4") {
    Graph g = grotzsch();
    REQUIRE(g.order() == 11);
    CHECK_FALSE(is_colourable(g, 3));
    CHECK_FALSE(oracles::colourable(g, 3));
    check_colouring(g, is_colourable(g, 4), 4);
}

TEST_CASE("edge cases") {
    CHECK(is_colourable(Graph{}, 0).has_value());
    CHECK_FALSE(is_colourable(Graph::with_order(1, {}), 0));
    check_colouring(Graph::with_order(3, {}), is_colourable(Graph::with_order(3, {}), 1), 1);
    CHECK_FALSE(is_colourable(complete_graph(8), 7));
}

TEST_CASE("is_proper needs every endpoint coloured") {
    Graph g = Graph::with_order(2, {{0, 1}});
    CHECK(is_proper(g, {{0, 0}, {1, 1}}));
    CHECK_FALSE(is_proper(g, {{0, 1}, {1, 1}}));
}

TEST_CASE("list colouring of an edge") {
    Graph g = Graph::with_order(2, {{0, 1}});
    CHECK_FALSE(list_colour(g, {{0, {1}}, {1, {1}}}));
    auto col = list_colour(g, {{0, {1}}, {1, {1, 2}}});
    REQUIRE(col);
    CHECK(*col == Colouring{{0, 1}, {1, 2}});
    CHECK_FALSE(list_colour(g, {{0, {}}, {1, {1}}}));
    CHECK_THROWS_AS(list_colour(g, {{0, {1}}}), std::invalid_argument);
}

TEST_CASE("K_{2,4} cross-pair lists are uncolourable") {
    ListAssignment lists{{0, {1, 2}}, {1, {3, 4}}, {2, {1, 3}}, {3, {1, 4}}, {4, {2, 3}}, {5, {2, 4}}};
    CHECK_FALSE(list_colour(k24(), lists));
    CHECK_FALSE(oracles::list_colourable(k24(), lists));
}

TEST_CASE("any graph with an edge is not 1-choosable") {
    auto r = list_chromatic_at_least(Graph::with_order(3, {{1, 2}}), 2);
    CHECK(r.at_least);
    REQUIRE(r.witness);
    CHECK_FALSE(list_colour(Graph::with_order(3, {{1, 2}}), *r.witness));
    CHECK_FALSE(list_chromatic_at_least(Graph::with_order(3, {}), 2).at_least);
}

TEST_CASE("C4 is 2-choosable") {
    CHECK_FALSE(list_chromatic_at_least(cycle_graph(4), 3).at_least);
    CHECK_FALSE(oracles::list_chromatic_at_least(cycle_graph(4), 3));
    CHECK(list_chromatic_at_least(cycle_graph(4), 2).at_least);
}

TEST_CASE("K4 is not 3-choosable") {
    auto r = list_chromatic_at_least(complete_graph(4), 4);
    CHECK(r.at_least);
    REQUIRE(r.witness);
    CHECK_FALSE(oracles::list_colourable(complete_graph(4), *r.witness));
    CHECK_FALSE(list_chromatic_at_least(complete_graph(4), 5).at_least);
}

TEST_CASE("K_{2,4} is not 2-choosable") {
    auto r = list_chromatic_at_least(k24(), 3);
    CHECK(r.at_least);
    REQUIRE(r.witness);
    for (const auto& [v, list] : *r.witness)
        CHECK(list.size() == 2);
    CHECK_FALSE(oracles::list_colourable(k24(), *r.witness));
}

TEST_CASE("choosability agrees with the exhaustive oracle on small graphs") {
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if (mask >> bit & 1)
                    edges.emplace_back(u, v);
        Graph g = Graph::with_order(4, edges);
        for (int t = 1; t <= 3; ++t) {
            CAPTURE(mask);
            CAPTURE(t);
            CHECK(list_chromatic_at_least(g, t).at_least == oracles::list_chromatic_at_least(g, t));
        }
    }
}

TEST_CASE("choosability respects the vertex cap") {
    ChoosabilityOptions small;
    small.vertex_cap = 4;
    CHECK_THROWS_AS(list_chromatic_at_least(complete_graph(5), 3, small), std::length_error);
    CHECK(list_chromatic_at_least(complete_graph(5), 2, small).at_least);
}

TEST_CASE("t = 1 needs only a nonempty graph") {
    CHECK(list_chromatic_at_least(Graph::with_order(1, {}), 1).at_least);
    CHECK_FALSE(list_chromatic_at_least(Graph{}, 1).at_least);
}

}
