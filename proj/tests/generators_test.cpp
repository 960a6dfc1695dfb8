#include <doctest.h>

#include <stdexcept>

#include "kcx/colouring.hpp"
#include "kcx/connectivity.hpp"
#include "kcx/generators.hpp"

using namespace kcx;

namespace {

int chromatic_number(const Graph& g) {
    int t = 0;
    while (!is_colourable(g, t))
        ++t;
    return t;
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("complete graph") {
    Graph g = complete_graph(8);
    CHECK(g.order() == 8);
    CHECK(g.size() == 28);
    CHECK(g.is_complete());
}

TEST_CASE("join of C5 and K5") {
    Graph g = join({cycle_graph(5), complete_graph(5)});
    CHECK(g.order() == 10);
    CHECK(g.size() == 5 + 10 + 25);
    CHECK(chromatic_number(g) == 8);
}

TEST_CASE("glued cliques") {
    Graph g = glued_cliques({15, 15}, 1);
    CHECK(g.order() == 29);
    CHECK(g.size() == 2 * 105);
    CHECK(chromatic_number(g) == 15);
    auto cut = min_vertex_cut(g);
    REQUIRE(std::holds_alternative<VertexSet>(cut));
    CHECK(std::get<VertexSet>(cut).size() == 1);
    CHECK(glued_cliques({8, 8}, 0).order() == 16);
    CHECK_FALSE(is_connected(glued_cliques({8, 8}, 0)));
}

TEST_CASE("Mycielskian raises the chromatic number") {
    Graph g = mycielskian(cycle_graph(5));
    CHECK(g.order() == 11);
    CHECK(g.size() == 20);
    CHECK(chromatic_number(g) == 4);
    CHECK(chromatic_number(mycielskian(mycielskian(complete_graph(2)))) == 4);
}

TEST_CASE("Kneser graphs") {
    Graph p = kneser_graph(5, 2);
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (Vertex v : p.vertices())
        CHECK(p.degree(v) == 3);
    CHECK(chromatic_number(kneser_graph(6, 2)) == 4);
    CHECK_THROWS_AS(kneser_graph(3, 2), std::invalid_argument);
}

TEST_CASE("random graphs are seeded") {
    CHECK(random_graph(20, 0.5, 7) == random_graph(20, 0.5, 7));
    CHECK_FALSE(random_graph(20, 0.5, 7) == random_graph(20, 0.5, 8));
    CHECK(random_graph(10, 0.0, 1).size() == 0);
    CHECK(random_graph(10, 1.0, 1).size() == 45);
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(glued_cliques({3, 3}, 4), std::invalid_argument);
    CHECK_THROWS_AS(random_graph(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("compact specs round-trip") {
    for (std::string text : {"complete:8", "cycle:5", "join(cycle:5,complete:5)", "glued:15,15/1", "kneser:5,2",
                             "mycielski:2", "mycielski:1(cycle:5)", "random:20,0.5@7",
                             "join(cycle:5,cycle:5,cycle:5,cycle:5,cycle:5)"}) {
        CAPTURE(text);
        FamilySpec spec = parse_family(text);
        CHECK(to_string(spec) == text);
        CHECK(generate(parse_family(to_string(spec))) == generate(spec));
    }
    CHECK(generate(parse_family("glued:8,8")) == glued_cliques({8, 8}, 1));
}

TEST_CASE("bad specs") {
    for (std::string text : {"", "triangle:3", "complete:", "complete:x", "cycle:5,6", "join(", "join(cycle:5",
                             "glued:4,4/", "random:5", "kneser:5"}) {
        CAPTURE(text);
        CHECK_THROWS_AS(generate(parse_family(text)), std::invalid_argument);
    }
}

TEST_CASE("relabel to dense ids") {
    Graph g({3, 9, 12}, {{3, 12}});
    Graph d = relabel_dense(g);
    CHECK(d.vertices() == VertexSet{0, 1, 2});
    CHECK(d.edges() == std::vector<Edge>{{0, 2}});
}

}
