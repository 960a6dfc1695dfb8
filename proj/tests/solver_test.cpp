#include <doctest.h>

#include <stdexcept>

#include "kcx/colouring.hpp"
#include "kcx/generators.hpp"
#include "kcx/random_instances.hpp"
#include "kcx/solver.hpp"

using namespace kcx;
namespace ri = kcx::random_instances;

TEST_SUITE("solver") {

TEST_CASE("triangle with seven colours") {
    Graph g = complete_graph(3);
    auto r = extend(g, Template{}, Palette::plain(7));
    REQUIRE(r.sat());
    CHECK(respects(g, Template{}, Palette::plain(7), *r.colouring));
    CHECK(*r.colouring == Colouring{{0, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("edge with no room left") {
    Graph g = complete_graph(2);
    auto r = extend(g, Template({{0, 0}}, {{1, {1}}}), Palette::plain(2));
    CHECK(r.unsat());
    CHECK_FALSE(r.colouring);
}

TEST_CASE("K8 is not 7-colourable") {
    CHECK(extend(complete_graph(8), Template{}, Palette::plain(7)).unsat());
    CHECK_FALSE(is_colourable(complete_graph(8), 7));
    CHECK(brute_force_extend(complete_graph(8), Template{}, Palette::plain(7)).unsat());
}

TEST_CASE("empty graph") {
    auto r = extend(Graph{}, Template{}, Palette::plain(3));
    REQUIRE(r.sat());
    CHECK(r.colouring->empty());
}

TEST_CASE("malformed templates are rejected before search") {
    Graph g = complete_graph(2);
    CHECK_THROWS_AS(extend(g, Template({{0, 1}, {1, 1}}, {}), Palette::plain(3)), MalformedTemplate);
    CHECK_THROWS_AS(extend(g, Template({{0, 5}}, {}), Palette::plain(3)), MalformedTemplate);
    CHECK_THROWS_AS(brute_force_extend(g, Template({{0, 1}, {1, 1}}, {}), Palette::plain(3)), MalformedTemplate);
}

TEST_CASE("list palettes") {
    Graph g = complete_graph(3);
    Palette lists = Palette::with_lists({{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}});
    CHECK(extend(g, Template{}, lists).unsat());
    lists.lists[2].insert(9);
    auto r = extend(g, Template{}, lists);
    REQUIRE(r.sat());
    CHECK(r.colouring->at(2) == 9);
}

TEST_CASE("join of five 5-cycles needs 15 colours") {
    Graph g = generate(parse_family("join(cycle:5,cycle:5,cycle:5,cycle:5,cycle:5)"));
    CHECK(extend(g, Template{}, Palette::plain(14)).unsat());
    CHECK(extend(g, Template{}, Palette::plain(15)).sat());
}

TEST_CASE("decision budget") {
    Graph g = generate(parse_family("join(cycle:5,cycle:5,cycle:5,cycle:5,cycle:5)"));
    SolverBudget budget;
    budget.max_decisions = 5;
    auto r = extend(g, Template{}, Palette::plain(14), budget);
    CHECK(r.outcome == Outcome::resource_limit);
    CHECK(r.stats.decisions == 6);
}

TEST_CASE("brute force caps") {
    CHECK_THROWS_AS(brute_force_extend(complete_graph(9), Template{}, Palette::plain(3)), std::length_error);
    BruteForceCap cap;
    cap.max_assignments = 100;
    CHECK_THROWS_AS(brute_force_extend(complete_graph(5), Template{}, Palette::plain(3), cap), std::length_error);
}

TEST_CASE("extend agrees with brute force on random instances") {
    ri::Rng rng(23);
    for (int i = 0; i < 400; ++i) {
        Graph g = ri::graph(rng, ri::uniform(rng, 1, 7), 0.5);
        int size = ri::uniform(rng, 2, 5);
        Palette p = i % 2 ? Palette::with_lists(ri::lists(rng, g.vertices(), size, 1, size)) : Palette::plain(size);
        Template t = ri::template_for(rng, g, p, {0.25, 0.5, static_cast<std::size_t>(size - 1), SIZE_MAX, -1, 1});
        CAPTURE(i);
        auto fast = extend(g, t, p);
        auto slow = brute_force_extend(g, t, p);
        CHECK(fast.outcome == slow.outcome);
        if (fast.sat())
            CHECK(respects(g, t, p, *fast.colouring));
    }
}

TEST_CASE("extend is deterministic and monotone") {
    ri::Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        Graph g = ri::graph(rng, ri::uniform(rng, 1, 9), 0.5);
        Palette p = Palette::plain(ri::uniform(rng, 2, 4));
        Template t = ri::template_for(rng, g, p, {0.2, 0.4, 2, SIZE_MAX, -1, 1});
        auto first = extend(g, t, p);
        auto again = extend(g, t, p);
        CHECK(first.outcome == again.outcome);
        CHECK(first.colouring == again.colouring);
        CHECK(first.stats.decisions == again.stats.decisions);
        // More colours or fewer forbidden ones never turn Sat into Unsat.
        if (first.sat()) {
            CHECK(extend(g, t, Palette::plain(p.size + 1)).sat());
            CHECK(extend(g, Template(t.precolour(), {}), p).sat());
        }
    }
}

TEST_CASE("witness validity") {
    Palette p = Palette::plain(7);
    auto valid = is_valid_witness(complete_graph(8), Template{}, 1, p);
    CHECK(valid.status == WitnessStatus::valid);
    CHECK(valid.reason.empty());
    auto heavy = is_valid_witness(complete_graph(8), Template({{0, 0}, {1, 1}, {2, 2}}, {}), 1, p);
    CHECK(heavy.status == WitnessStatus::invalid);
    CHECK(heavy.reason == "degree exceeds 2k^2");
    auto wide = is_valid_witness(complete_graph(15), Template({}, {{0, {0, 1, 2, 3, 4}}}), 2, Palette::plain(14));
    CHECK(wide.status == WitnessStatus::invalid);
    auto sat = is_valid_witness(cycle_graph(5), Template{}, 1, p);
    CHECK(sat.status == WitnessStatus::invalid);
    CHECK(sat.solve.sat());
    SolverBudget budget;
    budget.max_decisions = 1;
    auto slow = is_valid_witness(generate(parse_family("join(cycle:5,cycle:5,cycle:5,cycle:5,cycle:5)")), Template{}, 2,
                                 Palette::plain(14), budget);
    CHECK(slow.status == WitnessStatus::resource_limit);
}

}
