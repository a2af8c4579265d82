#include "catch_amalgamated.hpp"

#include "support/fixtures.hpp"
#include "wcm/errors.hpp"
#include "wcm/graph.hpp"

using namespace wcm;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("parse K2 with weight 5") {
    auto g = parse_graph(R"({"n":2,"edges":[[1,2,5]]})");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edges().size() == 1);
    CHECK(g.weight(1, 2) == 5);
    CHECK(g.weight(2, 1) == 5);
}

TEST_CASE("parse rejects weight below one") {
    CHECK_THROWS_WITH(parse_graph(R"({"n":2,"edges":[[1,2,0]]})"), ContainsSubstring("edges[0]") && ContainsSubstring("weight < 1"));
}

TEST_CASE("parse the mixed example graph") {
    auto g = fixture::load("example-2-mixed.json");
    CHECK(g.vertex_count() == 4);
    CHECK(g.weight(1, 2) == 2);
    CHECK(g.weight(2, 3) == 4);
    CHECK(g.weight(3, 4) == 6);
    CHECK(g.weight(1, 3) == 3);
    CHECK(g.labels() == std::vector<std::string>{"v3", "v2", "nu1", "nu0"});
    CHECK(g == fixture::mixed_example(3));
}

TEST_CASE("parse errors carry their location") {
    CHECK_THROWS_AS(parse_graph("{\"n\":2,"), ParseError);
    CHECK_THROWS_WITH(parse_graph(R"({"n":3,"edges":[[1,2,1],[2,1,4]]})"), ContainsSubstring("edges[1]") && ContainsSubstring("duplicate"));
    CHECK_THROWS_WITH(parse_graph(R"({"n":3,"edges":[[1,4,1]]})"), ContainsSubstring("out of range"));
    CHECK_THROWS_WITH(parse_graph(R"({"n":3,"edges":[[2,2,1]]})"), ContainsSubstring("self-loop"));
    CHECK_THROWS_WITH(parse_graph(R"({"n":2,"edges":[[1,2]]})"), ContainsSubstring("triple"));
    CHECK_THROWS_WITH(parse_graph(R"({"n":-1,"edges":[]})"), ContainsSubstring("'n'"));
    CHECK_THROWS_WITH(parse_graph(R"({"n":2})"), ContainsSubstring("edges"));
    CHECK_THROWS_WITH(parse_graph(R"({"n":2,"edges":[],"labels":["a"]})"), ContainsSubstring("labels"));
    CHECK_THROWS_AS(parse_graph("[]"), ParseError);
}

TEST_CASE("key order is irrelevant and output is canonical") {
    auto a = parse_graph(R"({"edges":[[3,1,2],[1,2,7]],"n":3})");
    auto b = parse_graph(R"({"n":3,"edges":[[1,2,7],[1,3,2]]})");
    CHECK(a == b);
    CHECK(serialize_graph(a) == serialize_graph(b));
    CHECK(serialize_graph(a) == "{\"edges\":[[1,2,7],[1,3,2]],\"n\":3}\n");
    CHECK(parse_graph(serialize_graph(a)) == a);
}

TEST_CASE("labels and name survive a round trip") {
    auto g = fixture::load("k6-pendants.json");
    auto h = parse_graph(serialize_graph(g));
    CHECK(h.labels() == g.labels());
    CHECK(h.name() == g.name());
    CHECK(vertex_name(g, 7) == "nu0S");
}

TEST_CASE("graph invariants enforced on construction") {
    WeightedGraph g(3);
    g.add_edge(1, 2, 1);
    CHECK_THROWS_AS(g.add_edge(2, 1, 3), PreconditionError);
    CHECK_THROWS_AS(g.add_edge(1, 1, 3), PreconditionError);
    CHECK_THROWS_AS(g.add_edge(1, 3, 0), PreconditionError);
    CHECK_THROWS_AS(g.add_edge(0, 3, 1), PreconditionError);
}

TEST_CASE("empty graph") {
    auto g = parse_graph(R"({"n":0,"edges":[]})");
    CHECK(g.vertex_count() == 0);
    CHECK(g.edges().empty());
}

TEST_CASE("induced subgraph and relabel") {
    auto g = fixture::mixed_example(3);
    auto h = induced_subgraph(g, {2, 3, 4});
    CHECK(h.vertex_count() == 3);
    CHECK(h.weight(1, 2) == 4);
    CHECK(h.weight(2, 3) == 6);
    CHECK(h.weight(1, 3) == 0);
    auto r = relabel(g, {4, 3, 2, 1});
    CHECK(r.weight(4, 3) == 2);
    CHECK(r.weight(2, 1) == 6);
}
