#include <doctest.h>

#include <stdexcept>

#include <random>
#include <sstream>

#include "kcx/dimacs.hpp"
#include "kcx/generators.hpp"

using namespace kcx;

TEST_SUITE("dimacs") {

TEST_CASE("reads edge format with comments") {
    std::istringstream in("c a triangle\np edge 3 3\ne 1 2\ne 2 3\nc mid\ne 1 3\n");
    Graph g = read_dimacs(in);
    CHECK(g == complete_graph(3));
}

TEST_CASE("accepts the col keyword") {
    std::istringstream in("p col 2 1\ne 1 2\n");
    CHECK(read_dimacs(in).size() == 1);
}

TEST_CASE("writes the header and 1-based edges") {
    std::string text = to_dimacs(complete_graph(8), "K8");
    CHECK(text.rfind("c K8\np edge 8 28\ne 1 2\n", 0) == 0);
}

TEST_CASE("round trip on random graphs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_graph(static_cast<int>(rng() % 15), 0.4, rng());
        std::istringstream in(to_dimacs(g, "x\ny"));
        CHECK(read_dimacs(in) == g);
    }
}

TEST_CASE("malformed files") {
    for (std::string text : {"", "e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2 2\ne 1 2\n", "p edge 2 1\ne 1\n",
                             "p edge x 1\n", "p edge 2 1\ne 1 1\n", "p edge 2 0\np edge 2 0\n", "p edge 2 1\nq 1 2\n"}) {
        CAPTURE(text);
        std::istringstream in(text);
        CHECK_THROWS_AS(read_dimacs(in), ParseError);
    }
    CHECK_THROWS_AS(read_dimacs_file("/nonexistent/graph.col"), std::runtime_error);
}

TEST_CASE("writing needs dense ids") {
    CHECK_THROWS(to_dimacs(Graph({1, 5}, {})));
}

TEST_CASE("digest depends on the graph only") {
    std::string a = graph_digest(complete_graph(4));
    CHECK(a.size() == 64);
    CHECK(a == graph_digest(complete_graph(4)));
    CHECK(a != graph_digest(cycle_graph(4)));
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

}
