#include "doctest.h"

#include "packtotal/distance.hpp"
#include "packtotal/graph.hpp"
#include "packtotal/transform.hpp"

#include <algorithm>
#include <numeric>

using namespace packtotal;

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

long long expected_line_edges(const Graph& g) {
    long long total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += choose2(g.degree(v));
    return total;
}

} // namespace

TEST_CASE("line graph of a path is a shorter path") {
    Graph p5 = generate_path(5);
    LabeledGraph l = line_graph(p5);
    CHECK(l.graph.vertex_count() == 4);
    CHECK(l.graph.edge_count() == 3);
    CHECK(l.graph.to_edge_list() == generate_path(4).to_edge_list());
    for (int i = 0; i < 4; ++i) {
        CHECK(l.labels[i] == Element::edge(p5.edges()[i].u, p5.edges()[i].v));
        CHECK(l.index_of(l.labels[i]) == i);
    }
}

TEST_CASE("line graph of a star is complete") {
    Graph s4 = generate_star(4);
    LabeledGraph l = line_graph(s4);
    CHECK(l.graph.vertex_count() == 4);
    CHECK(l.graph.edge_count() == 6); // K4
}

TEST_CASE("line graph edge count matches the degree formula") {
    for (const Graph& g : {generate_cycle(6), generate_complete_bipartite(2, 3),
                           generate_d12_segment(8), generate_star(5)}) {
        LabeledGraph l = line_graph(g);
        CHECK(l.graph.vertex_count() == g.edge_count());
        CHECK(l.graph.edge_count() == expected_line_edges(g));
    }
}

TEST_CASE("total graph layout and edge count") {
    Graph c4 = generate_cycle(4);
    LabeledGraph t = total_graph(c4);
    int n = c4.vertex_count();
    int m = c4.edge_count();
    CHECK(t.graph.vertex_count() == n + m);
    CHECK(t.graph.edge_count() == m + expected_line_edges(c4) + 2 * m);

    // vertices first, then edges in sorted edge order
    for (int v = 0; v < n; ++v) CHECK(t.labels[v] == Element::vertex(v));
    for (int j = 0; j < m; ++j) {
        CHECK(t.labels[n + j] == Element::edge(c4.edges()[j].u, c4.edges()[j].v));
    }
    CHECK(t.index_of(Element::vertex(2)) == 2);
    CHECK(t.index_of(Element::edge(0, 1)) == n + c4.edge_index(0, 1));
    CHECK(t.index_of(Element::edge(1, 3)) == -1);
}

TEST_CASE("total graph adjacency mirrors incidence") {
    Graph p4 = generate_path(4);
    LabeledGraph t = total_graph(p4);
    int n = p4.vertex_count();
    auto vtx = [&](int v) { return v; };
    auto edg = [&](int u, int v) { return n + p4.edge_index(u, v); };

    // original edges survive
    CHECK(t.graph.has_edge(vtx(0), vtx(1)));
    CHECK_FALSE(t.graph.has_edge(vtx(0), vtx(2)));
    // incident edge pairs
    CHECK(t.graph.has_edge(edg(0, 1), edg(1, 2)));
    CHECK_FALSE(t.graph.has_edge(edg(0, 1), edg(2, 3)));
    // vertex-incident-edge pairs
    CHECK(t.graph.has_edge(vtx(1), edg(0, 1)));
    CHECK(t.graph.has_edge(vtx(1), edg(1, 2)));
    CHECK_FALSE(t.graph.has_edge(vtx(0), edg(1, 2)));
}

TEST_CASE("total graph of a cycle is the square of magnitude double cycle") {
    // T(C_n) is isomorphic to the square of C_{2n} under the interleaving
    // vertex, edge, vertex, edge, ... layout; check by explicit relabeling.
    for (int n : {3, 5, 8, 11}) {
        Graph c = generate_cycle(n);
        LabeledGraph t = total_graph(c);
        REQUIRE(t.graph.vertex_count() == 2 * n);

        // position 2j = vertex j, position 2j+1 = edge {j, j+1 mod n}
        std::vector<int> at_position(2 * n, -1);
        for (int j = 0; j < n; ++j) {
            at_position[2 * j] = t.index_of(Element::vertex(j));
            at_position[2 * j + 1] = t.index_of(Element::edge(j, (j + 1) % n));
        }
        for (int idx : at_position) REQUIRE(idx >= 0);

        // C_{2n} squared: positions adjacent iff cyclic gap is 1 or 2
        for (int a = 0; a < 2 * n; ++a) {
            for (int b = a + 1; b < 2 * n; ++b) {
                int gap = std::min(b - a, 2 * n - (b - a));
                bool expect = gap == 1 || gap == 2;
                CHECK(t.graph.has_edge(at_position[a], at_position[b]) == expect);
            }
        }
    }
}

TEST_CASE("element distance equals total graph distance") {
    for (const Graph& g : {generate_path(6), generate_cycle(7), generate_star(4),
                           generate_complete_bipartite(2, 3)}) {
        DistanceMatrix dg = all_pairs_distances(g);
        LabeledGraph t = total_graph(g);
        DistanceMatrix dt = all_pairs_distances(t.graph);
        int nt = t.graph.vertex_count();
        for (int a = 0; a < nt; ++a) {
            for (int b = 0; b < nt; ++b) {
                CHECK(element_distance(g, dg, t.labels[a], t.labels[b]) == dt.at(a, b));
            }
        }
    }
}
