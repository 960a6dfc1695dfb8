#include <doctest.h>

#include <stdexcept>

#include "kcx/generators.hpp"
#include "kcx/random_instances.hpp"
#include "kcx/template.hpp"

using namespace kcx;
namespace ri = kcx::random_instances;

namespace {

Graph path3() {
    return Graph::with_order(3, {{0, 1}, {1, 2}});
}

// Cutting rules re-implemented as a plain loop over (block, load) pairs.
std::vector<VertexSet> reference_intervals(const std::vector<std::vector<std::pair<Vertex, int>>>& blocks, int k) {
    std::vector<VertexSet> out;
    for (const auto& block : blocks) {
        VertexSet cur;
        int load = 0;
        for (auto [v, f] : block) {
            cur.push_back(v);
            load += f;
            if (load > k) {
                out.push_back(cur);
                cur.clear();
                load = 0;
            }
        }
        if (!cur.empty())
            out.push_back(cur);
    }
    return out;
}

}  // namespace

TEST_SUITE("template") {

TEST_CASE("degree") {
    CHECK(degree(Template{}, 3) == 0);
    Template t({{0, 1}, {1, 2}, {2, 3}}, {{3, {1}}, {4, {1, 2}}});
    CHECK(degree(t, 2) == 9);
    Template f({}, {{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}, {4, {1, 2}}});
    CHECK(degree(f, 1) == 10);
}

TEST_CASE("template drops empty forbidden lists and rejects overlap") {
    Template t({{0, 1}}, {{1, {}}});
    CHECK(t.forbidden().empty());
    CHECK_THROWS_AS(Template({{0, 1}}, {{0, {2}}}), MalformedTemplate);
}

TEST_CASE("restriction") {
    Template t({{0, 1}, {1, 2}}, {{2, {3}}, {3, {4}}});
    CHECK(restrict(t, {0, 1, 2, 3}) == t);
    Template r = restrict(t, {2, 3});
    CHECK(r.precolour().empty());
    CHECK(r.forbidden() == std::map<Vertex, ColourSet>{{2, {3}}, {3, {4}}});
}

TEST_CASE("respects") {
    Graph g = path3();
    Palette p = Palette::plain(7);
    CHECK(respects(g, Template{}, p, {{0, 0}, {1, 1}, {2, 0}}));
    CHECK_FALSE(respects(g, Template({{0, 3}}, {}), p, {{0, 2}, {1, 1}, {2, 0}}));
    CHECK_FALSE(respects(g, Template({}, {{1, {5}}}), p, {{0, 0}, {1, 5}, {2, 0}}));
    CHECK_FALSE(respects(g, Template{}, p, {{0, 0}, {1, 0}, {2, 1}}));
    CHECK_FALSE(respects(g, Template{}, p, {{0, 0}, {1, 7}, {2, 1}}));
    CHECK_FALSE(respects(g, Template{}, p, {{0, 0}, {1, 1}}));
    Palette lists = Palette::with_lists({{0, {0}}, {1, {1}}, {2, {2}}});
    CHECK(respects(g, Template{}, lists, {{0, 0}, {1, 1}, {2, 2}}));
    CHECK_FALSE(respects(g, Template{}, lists, {{0, 0}, {1, 1}, {2, 0}}));
}

TEST_CASE("validation") {
    Graph g = path3();
    Palette p = Palette::plain(3);
    CHECK_NOTHROW(validate_template(g, Template({{0, 0}, {2, 0}}, {}), p));
    CHECK_THROWS_AS(validate_template(g, Template({{0, 0}, {1, 0}}, {}), p), MalformedTemplate);
    CHECK_THROWS_AS(validate_template(g, Template({{0, 3}}, {}), p), MalformedTemplate);
    CHECK_THROWS_AS(validate_template(g, Template({{5, 0}}, {}), p), MalformedTemplate);
    CHECK_THROWS_AS(validate_template(g, Template({}, {{7, {0}}}), p), MalformedTemplate);
    Palette lists = Palette::with_lists({{0, {0, 1}}, {1, {0, 1}}});
    CHECK_THROWS_AS(validate_template(g, Template{}, lists), MalformedTemplate);
    lists.lists[2] = {0, 1};
    CHECK_THROWS_AS(validate_template(g, Template({}, {{1, {2}}}), lists), MalformedTemplate);
    CHECK_NOTHROW(validate_template(g, Template({}, {{1, {1}}}), lists));
}

TEST_CASE("strengthening pre-colours heavy vertices") {
    Graph g = complete_graph(15);
    Palette p = Palette::plain(14);
    Template t({{0, 0}}, {{1, {1}}, {3, {0, 2}}});
    Template s = strengthen_witness(g, t, 2, p);
    // Smallest colour outside F(3) and c(S).
    CHECK(s.precolour() == std::map<Vertex, Colour>{{0, 0}, {3, 1}});
    CHECK(s.forbidden() == std::map<Vertex, ColourSet>{{1, {1}}});
    CHECK(degree(s, 2) <= degree(t, 2));
    Template two = strengthen_witness(complete_graph(8), Template({}, {{4, {0}}, {2, {0}}}), 1, Palette::plain(7));
    CHECK(two.precolour() == std::map<Vertex, Colour>{{2, 1}, {4, 2}});
}

TEST_CASE("strengthening leaves light witnesses alone") {
    Template t({{0, 0}}, {{1, {1}}, {2, {4}}});
    CHECK(strengthen_witness(complete_graph(15), t, 2, Palette::plain(14)) == t);
}

TEST_CASE("strengthening preconditions") {
    Palette p = Palette::plain(7);
    CHECK_THROWS_AS(strengthen_witness(complete_graph(8), Template({}, {{0, {0, 1, 2}}}), 1, p), std::invalid_argument);
    CHECK_THROWS_AS(strengthen_witness(complete_graph(8), Template({{0, 0}, {1, 1}, {2, 2}}, {}), 1, p),
                    std::invalid_argument);
}

TEST_CASE("strengthening in list mode picks from the list") {
    Graph g = complete_graph(3);
    Palette lists = Palette::with_lists({{0, {5, 6, 7, 8}}, {1, {0, 1, 2, 3}}, {2, {0, 1, 2, 3}}});
    Template s = strengthen_witness(g, Template({{1, 0}}, {{0, {5}}}), 1, lists);
    CHECK(s.precolour().at(0) == 6);
}

TEST_CASE("available colours exclude F and every colour on S") {
    Template t({{0, 1}, {5, 3}}, {{2, {0}}});
    CHECK(available_colours(t, Palette::plain(5), 2) == ColourSet{2, 4});
}

TEST_CASE("separation template with nothing to push is the restriction") {
    Graph g = path3();
    Template t({}, {{0, {1}}});
    Template tp = derive_separation_template(g, t, Palette::plain(14), 2, {1}, {0}, {2});
    CHECK(tp == restrict(t, {0, 1}));
}

TEST_CASE("separation template forbids the colour of a pre-coloured Z neighbour") {
    Graph g = glued_cliques({15, 15}, 1);
    Template t({{20, 9}}, {});
    VertexSet y, z;
    for (int v = 1; v <= 14; ++v)
        y.push_back(v);
    for (int v = 15; v <= 28; ++v)
        z.push_back(v);
    Template tp = derive_separation_template(g, t, Palette::plain(14), 2, {0}, y, z);
    CHECK(tp.precolour().empty());
    CHECK(tp.forbidden() == std::map<Vertex, ColourSet>{{0, {9}}});
}

TEST_CASE("separation template preconditions") {
    Graph g = path3();
    Palette p = Palette::plain(7);
    CHECK_THROWS_AS(derive_separation_template(g, Template{}, p, 2, {1}, {0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(derive_separation_template(g, Template{}, p, 2, {}, {0}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(derive_separation_template(g, Template{}, p, 1, {1}, {0}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(derive_separation_template(g, Template({}, {{2, {0, 1}}}), p, 2, {1}, {0}, {2}),
                    std::invalid_argument);
}

TEST_CASE("completion template pre-colours the cut") {
    Graph g = path3();
    Template tc = derive_completion_template(g, Template{}, Palette::plain(14), 2, {1}, {2}, {{0, 0}, {1, 4}});
    CHECK(tc.precolour() == std::map<Vertex, Colour>{{1, 4}});
    CHECK(tc.forbidden().empty());
}

TEST_CASE("completion template with X inside S is the restriction") {
    Graph g = path3();
    Template t({{1, 2}}, {{2, {0}}});
    Template tc = derive_completion_template(g, t, Palette::plain(14), 2, {1}, {2}, {{0, 0}, {1, 2}});
    CHECK(tc == restrict(t, {1, 2}));
}

TEST_CASE("completion template rejects a bad c'") {
    Graph g = path3();
    Palette p = Palette::plain(14);
    CHECK_THROWS_AS(derive_completion_template(g, Template{}, p, 2, {1}, {2}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(derive_completion_template(g, Template({{1, 2}}, {}), p, 2, {1}, {2}, {{1, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(derive_completion_template(g, Template({}, {{1, {3}}}), p, 2, {1}, {2}, {{1, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(derive_completion_template(g, Template({{2, 3}}, {}), p, 2, {1}, {2}, {{1, 3}}),
                    std::invalid_argument);
}

TEST_CASE("glue") {
    CHECK(glue({{0, 1}, {1, 2}}, {{1, 2}, {2, 1}}) == Colouring{{0, 1}, {1, 2}, {2, 1}});
    CHECK(glue({{1, 2}}, {{1, 2}, {2, 0}}) == Colouring{{1, 2}, {2, 0}});
    CHECK_THROWS_AS(glue({{1, 2}}, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("rainbow small case") {
    Palette p = Palette::plain(14);
    CHECK(rainbow_small_case(complete_graph(2), Template{}, p, 2) == Colouring{{0, 0}, {1, 1}});
    Template s({{0, 3}, {1, 4}}, {});
    CHECK(rainbow_small_case(complete_graph(2), s, p, 2) == s.precolour());
    Template t({{0, 0}}, {{1, {1, 2}}, {2, {1, 3}}});
    Colouring col = rainbow_small_case(complete_graph(3), t, Palette::plain(21), 3);
    CHECK(respects(complete_graph(3), t, Palette::plain(21), col));
    CHECK(col == Colouring{{0, 0}, {1, 3}, {2, 2}});
    CHECK_THROWS_AS(rainbow_small_case(complete_graph(3), Template{}, p, 2), std::invalid_argument);
}

TEST_CASE("intervals: one per block without forbidden colours") {
    Graph g = Graph::with_order(5, {{0, 3}, {1, 4}});
    auto parts = interval_partition(g, Template{}, 3, {{0, 1, 2}, {3, 4}});
    CHECK(parts.intervals == std::vector<VertexSet>{{0, 1, 2}, {3, 4}});
    CHECK(parts.owner == std::vector<std::size_t>{0, 1});
}

TEST_CASE("intervals: both cutting rules") {
    // v1..v6 are 1..6; loads (1,1,1) then (2,1,0), k = 2.
    Template t({}, {{1, {0}}, {2, {0}}, {3, {0}}, {4, {0, 1}}, {5, {0}}});
    auto parts = cut_intervals(t, 2, {{1, 2, 3}, {4, 5, 6}});
    CHECK(parts.intervals == std::vector<VertexSet>{{1, 2, 3}, {4, 5}, {6}});
    CHECK(parts.owner == std::vector<std::size_t>{0, 1, 1});
    CHECK(reference_intervals({{{1, 1}, {2, 1}, {3, 1}}, {{4, 2}, {5, 1}, {6, 0}}}, 2) == parts.intervals);
    Graph empty = Graph::with_order(7, {});
    CHECK_THROWS_AS(interval_partition(empty, Template({{0, 0}}, t.forbidden()), 2, {{1, 2, 3}, {4, 5, 6}}),
                    std::invalid_argument);
}

TEST_CASE("intervals agree with the reference loop") {
    ri::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int k = ri::uniform(rng, 1, 5);
        std::vector<std::vector<std::pair<Vertex, int>>> blocks(static_cast<std::size_t>(ri::uniform(rng, 0, 4)));
        std::vector<VertexSet> sets;
        std::map<Vertex, ColourSet> forbidden;
        Vertex next = 0;
        for (auto& block : blocks) {
            VertexSet set;
            for (int c = ri::uniform(rng, 0, 5); c > 0; --c) {
                int load = ri::uniform(rng, 0, k + 1);
                for (int j = 0; j < load; ++j)
                    forbidden[next].insert(j);
                block.emplace_back(next, load);
                set.push_back(next++);
            }
            sets.push_back(set);
        }
        CHECK(cut_intervals(Template({}, forbidden), k, sets).intervals == reference_intervals(blocks, k));
    }
}

TEST_CASE("interval preconditions") {
    Graph g = Graph::with_order(3, {{0, 1}});
    CHECK_THROWS_AS(interval_partition(g, Template{}, 2, {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(interval_partition(g, Template{}, 2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(interval_partition(g, Template{}, 2, {{0, 2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(interval_partition(g, Template({}, {{0, {1, 2}}}), 2, {{0, 2}}), std::invalid_argument);
    CHECK(interval_partition(g, Template({{0, 0}, {1, 1}, {2, 0}}, {}), 2, {}).intervals.empty());
}

TEST_CASE("colouring from intervals") {
    Graph g = Graph::with_order(4, {{0, 1}, {2, 3}});
    Template t({{3, 0}}, {{0, {1}}});
    Palette p = Palette::plain(14);
    auto parts = interval_partition(g, t, 3, {{0, 2}, {1}});
    Colouring col = colour_from_intervals(g, t, p, parts);
    CHECK(respects(g, t, p, col));
    CHECK(col == Colouring{{0, 2}, {1, 1}, {2, 2}, {3, 0}});
    Template all({{0, 0}, {1, 1}}, {});
    CHECK(colour_from_intervals(Graph::with_order(2, {{0, 1}}), all, p,
                                interval_partition(Graph::with_order(2, {{0, 1}}), all, 2, {})) == all.precolour());
}

TEST_CASE("colouring from intervals: three overlapping intervals") {
    Graph g = Graph::with_order(3, {{0, 1}, {1, 2}, {0, 2}});
    Template t({}, {{0, {0}}, {1, {0, 1}}, {2, {1}}});
    auto parts = cut_intervals(t, 3, {{0}, {1}, {2}});
    Colouring col = colour_from_intervals(g, t, Palette::plain(21), parts);
    CHECK(col == Colouring{{0, 1}, {1, 2}, {2, 0}});
}

TEST_CASE("list direct completion") {
    Graph e = Graph::with_order(2, {{0, 1}});
    ListAssignment five{{0, {0, 1, 2, 3, 4}}, {1, {0, 1, 2, 3, 4}}};
    auto col = list_direct_completion(e, Template{}, Palette::with_lists(five), 1);
    REQUIRE(col);
    CHECK(respects(e, Template{}, Palette::with_lists(five), *col));
    Template all({{0, 0}, {1, 1}}, {});
    CHECK(list_direct_completion(e, all, Palette::with_lists(five), 1) == all.precolour());
    ListAssignment tight{{0, {0}}, {1, {0}}};
    CHECK_FALSE(list_direct_completion(e, Template{}, Palette::with_lists(tight), 1));
    CHECK_THROWS_AS(list_direct_completion(e, Template{}, Palette::plain(7), 1), std::invalid_argument);
}

TEST_CASE("degree is additive on random splits") {
    ri::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        Graph g = ri::graph(rng, ri::uniform(rng, 1, 10), 0.4);
        Template t = ri::template_for(rng, g, Palette::plain(9), {0.3, 0.5, 4, SIZE_MAX, -1, 3});
        VertexSet a, b;
        for (Vertex v : g.vertices())
            (ri::chance(rng, 0.5) ? a : b).push_back(v);
        CHECK(degree(t, 3) == degree(restrict(t, a), 3) + degree(restrict(t, b), 3));
    }
}

}
