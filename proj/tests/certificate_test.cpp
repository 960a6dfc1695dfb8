#include <doctest.h>

#include <stdexcept>

#include "kcx/certificate_io.hpp"
#include "kcx/dimacs.hpp"
#include "kcx/generators.hpp"

using namespace kcx;

namespace {

ListAssignment uniform(const Graph& g, int size) {
    ListAssignment out;
    for (Vertex v : g.vertices())
        for (int c = 0; c < size; ++c)
            out[v].insert(c);
    return out;
}

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("plain certificates round-trip") {
    Graph g = glued_cliques({15, 15}, 1);
    Certificate cert = extract(g, ExtractConfig::plain(2));
    std::string text = to_text(cert);
    Certificate back = parse_certificate(text);
    CHECK(to_text(back) == text);
    CHECK(back.trace == cert.trace);
    CHECK(back.witness == cert.witness);
    CHECK(back.subgraph == cert.subgraph);
    CHECK(verify_certificate(g, back).accepted);
}

TEST_CASE("list certificates round-trip") {
    Graph g = glued_cliques({9, 9}, 1);
    Certificate cert = extract(g, ExtractConfig::list(2, uniform(g, 8)));
    Certificate back = parse_certificate(to_text(cert));
    CHECK(back.lists == cert.lists);
    CHECK(back.list_witness == cert.list_witness);
    CHECK(to_text(back) == to_text(cert));
}

TEST_CASE("field order is fixed") {
    Json doc = to_json(extract(complete_graph(8), ExtractConfig::plain(1)));
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"format", "input_sha256", "k", "mode", "palette_size", "subgraph", "witness",
                                           "trace", "connectivity", "chromatic", "solver"});
    CHECK(doc["format"] == "kcx-certificate/1");
    CHECK(doc["input_sha256"] == graph_digest(complete_graph(8)));
}

TEST_CASE("malformed certificates") {
    std::string good = to_text(extract(complete_graph(8), ExtractConfig::plain(1)));
    CHECK_THROWS_AS(parse_certificate("{"), ParseError);
    CHECK_THROWS_AS(parse_certificate("[]"), ParseError);
    Json doc = Json::parse(good);
    doc["format"] = "other/1";
    CHECK_THROWS_AS(parse_certificate(doc.dump()), ParseError);
    doc = Json::parse(good);
    doc.erase("subgraph");
    CHECK_THROWS_AS(parse_certificate(doc.dump()), ParseError);
    doc = Json::parse(good);
    doc["mode"] = "rainbow";
    CHECK_THROWS_AS(parse_certificate(doc.dump()), ParseError);
    doc = Json::parse(good);
    doc["k"] = "two";
    CHECK_THROWS_AS(parse_certificate(doc.dump()), ParseError);
    CHECK_THROWS_AS(read_certificate_file("/nonexistent/cert.json"), ParseError);
}

TEST_CASE("list assignments as json") {
    ListAssignment lists{{0, {1, 2}}, {3, {}}};
    CHECK(lists_from_json(to_json(lists)) == lists);
}

}
