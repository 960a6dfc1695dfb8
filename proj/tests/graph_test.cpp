#include <doctest.h>

#include <stdexcept>

#include "kcx/generators.hpp"
#include "kcx/graph.hpp"

using namespace kcx;

TEST_SUITE("graph") {

TEST_CASE("construction and queries") {
    Graph g = Graph::with_order(4, {{0, 1}, {1, 2}, {2, 3}, {1, 0}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.neighbours(1) == VertexSet{0, 2});
    CHECK(g.degree(3) == 1);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.has_dense_ids());
    CHECK_FALSE(g.is_complete());
}

TEST_CASE("sparse ids") {
    Graph g({10, 3, 7}, {{3, 10}});
    CHECK(g.vertices() == VertexSet{3, 7, 10});
    CHECK_FALSE(g.has_dense_ids());
    CHECK(g.index_of(7) == 1);
    CHECK_THROWS_AS(g.index_of(4), std::out_of_range);
    CHECK_FALSE(g.has_vertex(4));
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(Graph::with_order(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::with_order(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({-1, 2}, {}), std::invalid_argument);
}

TEST_CASE("empty and trivial graphs") {
    Graph e;
    CHECK(e.empty());
    CHECK(e.is_complete());
    CHECK(components(e).empty());
    Graph one = Graph::with_order(1, {});
    CHECK(one.is_complete());
    CHECK(is_connected(one));
}

TEST_CASE("induced subgraph of K4 on all vertices is K4") {
    Graph k4 = complete_graph(4);
    CHECK(induced_subgraph(k4, {0, 1, 2, 3}) == k4);
}

TEST_CASE("induced subgraph of K4 on two vertices is an edge") {
    Graph e = induced_subgraph(complete_graph(4), {0, 1});
    CHECK(e.order() == 2);
    CHECK(e.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("induced subgraph of C5 on {0,1,3}") {
    Graph h = induced_subgraph(cycle_graph(5), {0, 1, 3});
    CHECK(h.vertices() == VertexSet{0, 1, 3});
    CHECK(h.edges() == std::vector<Edge>{{0, 1}});
    CHECK(h.degree(3) == 0);
}

TEST_CASE("induced subgraph rejects unknown vertices") {
    CHECK_THROWS(induced_subgraph(complete_graph(3), {0, 5}));
}

TEST_CASE("components ordered by smallest member") {
    Graph g = Graph::with_order(6, {{4, 5}, {0, 3}, {1, 2}});
    auto parts = components(g);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == VertexSet{0, 3});
    CHECK(parts[1] == VertexSet{1, 2});
    CHECK(parts[2] == VertexSet{4, 5});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(remove_vertices(complete_graph(4), {2})));
}

TEST_CASE("set helpers") {
    CHECK(make_vertex_set({3, 1, 3, 2}) == VertexSet{1, 2, 3});
    CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
    CHECK(set_intersection({1, 3}, {2, 3}) == VertexSet{3});
    CHECK(set_difference({1, 2, 3}, {2}) == VertexSet{1, 3});
    CHECK(contains({1, 4}, 4));
    CHECK_FALSE(contains({1, 4}, 2));
}

}
