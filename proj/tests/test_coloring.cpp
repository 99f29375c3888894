#include "doctest.h"

#include "packtotal/coloring.hpp"
#include "packtotal/distance.hpp"
#include "packtotal/graph.hpp"

#include <algorithm>

using namespace packtotal;

TEST_CASE("target names round-trip") {
    for (Target t : {Target::Graph, Target::Line, Target::Total}) {
        CHECK(target_from_name(target_name(t)) == t);
    }
    CHECK(target_name(Target::Total) == "total");
    CHECK_THROWS_AS(target_from_name("edges"), std::invalid_argument);
}

TEST_CASE("required elements per target") {
    Graph p3 = generate_path(3);
    auto verts = required_elements(p3, Target::Graph);
    auto edges = required_elements(p3, Target::Line);
    auto both = required_elements(p3, Target::Total);
    CHECK(verts.size() == 3);
    CHECK(edges.size() == 2);
    CHECK(both.size() == 5);
    CHECK(std::count_if(both.begin(), both.end(),
                        [](const Element& e) { return e.is_vertex(); }) == 3);
}

TEST_CASE("coloring accessors") {
    PackingColoring c;
    c.target = Target::Graph;
    CHECK(c.max_color() == 0);
    CHECK(c.color_count() == 0);
    c.assignment[Element::vertex(0)] = 1;
    c.assignment[Element::vertex(1)] = 3;
    c.assignment[Element::vertex(2)] = 3;
    CHECK(c.color_of(Element::vertex(1)) == 3);
    CHECK(c.color_of(Element::vertex(9)) == 0);
    CHECK(c.max_color() == 3);
    CHECK(c.color_count() == 2);
}

TEST_CASE("validate_packing accepts a known good coloring") {
    // P4 vertices: 1 2 1 3 is a packing coloring of the graph itself.
    Graph p4 = generate_path(4);
    DistanceMatrix d = all_pairs_distances(p4);
    PackingColoring c;
    c.target = Target::Graph;
    c.assignment[Element::vertex(0)] = 1;
    c.assignment[Element::vertex(1)] = 2;
    c.assignment[Element::vertex(2)] = 1;
    c.assignment[Element::vertex(3)] = 3;
    CHECK(validate_packing(p4, d, c).empty());
}

TEST_CASE("validate_packing reports the offending pair") {
    // color 2 at distance 2 violates the packing rule (needs distance > 2)
    Graph p3 = generate_path(3);
    DistanceMatrix d = all_pairs_distances(p3);
    PackingColoring c;
    c.target = Target::Graph;
    c.assignment[Element::vertex(0)] = 2;
    c.assignment[Element::vertex(1)] = 1;
    c.assignment[Element::vertex(2)] = 2;
    auto violations = validate_packing(p3, d, c);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].color == 2);
    CHECK(violations[0].distance == 2);
    CHECK(violations[0].a == Element::vertex(0));
    CHECK(violations[0].b == Element::vertex(2));
    CHECK(violations[0].to_string().find("color 2") != std::string::npos);
}

TEST_CASE("validate_packing checks the total element set") {
    Graph p3 = generate_path(3);
    DistanceMatrix d = all_pairs_distances(p3);
    PackingColoring c;
    c.target = Target::Total;
    c.assignment[Element::vertex(0)] = 1;
    c.assignment[Element::vertex(1)] = 2;
    c.assignment[Element::vertex(2)] = 1;
    c.assignment[Element::edge(0, 1)] = 3;
    // missing edge {1,2}
    CHECK_THROWS_AS(validate_packing(p3, d, c), std::invalid_argument);

    c.assignment[Element::edge(1, 2)] = 4;
    CHECK(validate_packing(p3, d, c).empty());

    // color 1 on adjacent elements: vertex 1 and edge {0,1} are at distance 1
    c.assignment[Element::vertex(1)] = 1;
    c.assignment[Element::edge(0, 1)] = 1;
    auto violations = validate_packing(p3, d, c);
    CHECK_FALSE(violations.empty());
}

TEST_CASE("validate_packing rejects malformed assignments") {
    Graph p3 = generate_path(3);
    DistanceMatrix d = all_pairs_distances(p3);

    PackingColoring foreign;
    foreign.target = Target::Graph;
    foreign.assignment[Element::vertex(0)] = 1;
    foreign.assignment[Element::vertex(1)] = 1;
    foreign.assignment[Element::vertex(2)] = 1;
    foreign.assignment[Element::vertex(5)] = 1;
    CHECK_THROWS_AS(validate_packing(p3, d, foreign), std::invalid_argument);

    PackingColoring nonpositive;
    nonpositive.target = Target::Graph;
    nonpositive.assignment[Element::vertex(0)] = 0;
    nonpositive.assignment[Element::vertex(1)] = 1;
    nonpositive.assignment[Element::vertex(2)] = 1;
    CHECK_THROWS_AS(validate_packing(p3, d, nonpositive), std::invalid_argument);
}

TEST_CASE("same color across components is always fine") {
    Graph two(4, {Edge(0, 1), Edge(2, 3)});
    DistanceMatrix d = all_pairs_distances(two);
    PackingColoring c;
    c.target = Target::Graph;
    for (int v = 0; v < 4; ++v) c.assignment[Element::vertex(v)] = v % 2 + 1;
    CHECK(validate_packing(two, d, c).empty());
}
