#include "doctest.h"

#include "packtotal/coloring.hpp"
#include "packtotal/distance.hpp"
#include "packtotal/graph.hpp"
#include "packtotal/solver.hpp"
#include "packtotal/transform.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace packtotal;

namespace {

Graph random_connected_graph(std::mt19937& rng, int max_n) {
    std::uniform_int_distribution<int> size_dist(1, max_n);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    for (;;) {
        int n = size_dist(rng);
        double p = density(rng);
        std::vector<Edge> edges;
        std::bernoulli_distribution keep(p);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (keep(rng)) edges.emplace_back(u, v);
            }
        }
        Graph g(n, std::move(edges));
        if (g.connected()) return g;
    }
}

} // namespace

TEST_CASE("max_i_packing degenerates to independence at i = 1") {
    Graph c5 = generate_cycle(5);
    DistanceMatrix d = all_pairs_distances(c5);
    auto [size, witness] = max_i_packing(c5, d, 1);
    CHECK(size == 2);
    REQUIRE(witness.size() == 2);
    CHECK_FALSE(c5.has_edge(witness[0], witness[1]));
}

TEST_CASE("max_i_packing shrinks as i grows") {
    Graph p7 = generate_path(7);
    DistanceMatrix d = all_pairs_distances(p7);
    // distance > i along a 7-path: ceil(7 / (i+1)) vertices fit
    CHECK(max_i_packing(p7, d, 1).first == 4);
    CHECK(max_i_packing(p7, d, 2).first == 3);
    CHECK(max_i_packing(p7, d, 3).first == 2);
    CHECK(max_i_packing(p7, d, 6).first == 1);
    CHECK_THROWS_AS(max_i_packing(p7, d, 0), std::invalid_argument);
}

TEST_CASE("max_i_packing witness is a real packing") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(rng, 8);
        DistanceMatrix d = all_pairs_distances(g);
        for (int i = 1; i <= 3; ++i) {
            auto [size, witness] = max_i_packing(g, d, i);
            CHECK(static_cast<int>(witness.size()) == size);
            for (std::size_t a = 0; a < witness.size(); ++a) {
                for (std::size_t b = a + 1; b < witness.size(); ++b) {
                    CHECK(d.at(witness[a], witness[b]) > i);
                }
            }
        }
    }
}

TEST_CASE("capacity profile of the total graph of C12 pins nine colors short") {
    Graph c12 = generate_cycle(12);
    LabeledGraph t = total_graph(c12);
    DistanceMatrix d = all_pairs_distances(t.graph);
    CapacityProfile profile = compute_capacity_profile(t.graph, d, 9);
    REQUIRE(profile.k() == 9);
    CHECK(profile.capacity == std::vector<int>{8, 4, 3, 2, 2, 1, 1, 1, 1});
    CHECK(profile.total() == 23);           // nine classes cover at most 23
    CHECK(t.graph.vertex_count() == 24);    // of 24 elements: k = 9 is impossible
    CHECK(capacity_infeasible(t.graph, d, 9));
    CHECK_FALSE(capacity_infeasible(t.graph, d, 10));
}

TEST_CASE("capacity profile is non-increasing") {
    Graph c9 = generate_cycle(9);
    LabeledGraph t = total_graph(c9);
    DistanceMatrix d = all_pairs_distances(t.graph);
    CapacityProfile profile = compute_capacity_profile(t.graph, d, 7);
    for (int i = 1; i < profile.k(); ++i) {
        CHECK(profile.capacity[i] <= profile.capacity[i - 1]);
    }
}

TEST_CASE("six colors are capacity-refuted on larger cycle total graphs") {
    for (int n : {13, 20, 27}) {
        Graph c = generate_cycle(n);
        LabeledGraph t = total_graph(c);
        DistanceMatrix d = all_pairs_distances(t.graph);
        CHECK(capacity_infeasible(t.graph, d, 6));
    }
}

TEST_CASE("solve_k decides small hosts both ways") {
    Graph c5 = generate_cycle(5);
    DistanceMatrix d = all_pairs_distances(c5);

    KResult no = solve_k(c5, d, 3, {});
    CHECK(no.status == SolveStatus::Infeasible);
    CHECK(no.colors.empty());

    KResult yes = solve_k(c5, d, 4, {});
    REQUIRE(yes.status == SolveStatus::Colorable);
    REQUIRE(yes.colors.size() == 5);
    for (int u = 0; u < 5; ++u) {
        CHECK(yes.colors[u] >= 1);
        CHECK(yes.colors[u] <= 4);
        for (int v = u + 1; v < 5; ++v) {
            if (yes.colors[u] == yes.colors[v]) CHECK(d.at(u, v) > yes.colors[u]);
        }
    }
}

TEST_CASE("solve_k is deterministic") {
    Graph c7 = generate_cycle(7);
    DistanceMatrix d = all_pairs_distances(c7);
    KResult a = solve_k(c7, d, 4, {});
    KResult b = solve_k(c7, d, 4, {});
    REQUIRE(a.status == SolveStatus::Colorable);
    CHECK(a.colors == b.colors);
    CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("a tiny node budget yields Timeout, not a wrong answer") {
    // k = 9 is colorable on this host (so the counting shortcut cannot fire),
    // and three nodes cannot cover the 22 assignments a witness needs.
    Graph c11 = generate_cycle(11);
    LabeledGraph t = total_graph(c11);
    DistanceMatrix d = all_pairs_distances(t.graph);
    Budget tiny;
    tiny.node_limit = 3;
    KResult r = solve_k(t.graph, d, 9, tiny);
    CHECK(r.status == SolveStatus::Timeout);
    CHECK(r.colors.empty());
}

TEST_CASE("engine rejects oversized hosts") {
    Graph big = generate_path(kMaxEngineVertices + 1);
    DistanceMatrix d = all_pairs_distances(big);
    CHECK_THROWS_AS(solve_k(big, d, 3, {}), std::invalid_argument);
}

TEST_CASE("complete_partial extends a partial coloring in order") {
    Graph p4 = generate_path(4);
    DistanceMatrix d = all_pairs_distances(p4);
    std::vector<int> fixed{1, 0, 0, 1};
    std::vector<int> order{1, 2};
    KResult r = complete_partial(p4, d, fixed, 3, order, {});
    REQUIRE(r.status == SolveStatus::Colorable);
    CHECK(r.colors[0] == 1);
    CHECK(r.colors[3] == 1);
    // vertex 1: colors 1 (clashes with 0) and 2 tried in order -> 2
    CHECK(r.colors[1] == 2);
    // vertex 2: 1 clashes with 3, 2 clashes with 1 at distance 1, 3 fits
    CHECK(r.colors[2] == 3);
}

TEST_CASE("complete_partial never recolors fixed vertices") {
    Graph p5 = generate_path(5);
    DistanceMatrix d = all_pairs_distances(p5);
    std::vector<int> fixed{2, 0, 1, 0, 2};
    std::vector<int> order{1, 3};
    KResult r = complete_partial(p5, d, fixed, 5, order, {});
    REQUIRE(r.status == SolveStatus::Colorable);
    CHECK(r.colors[0] == 2);
    CHECK(r.colors[2] == 1);
    CHECK(r.colors[4] == 2);
}

TEST_CASE("complete_partial rejects an over-capacity fixed class") {
    // P3 admits at most two vertices of color 1 (the endpoints); pinning
    // all three to color 1 is internally inconsistent.
    Graph p3 = generate_path(3);
    DistanceMatrix d = all_pairs_distances(p3);
    std::vector<int> fixed{1, 1, 1};
    CHECK_THROWS_AS(complete_partial(p3, d, fixed, 3, {}, {}), std::invalid_argument);
}

TEST_CASE("complete_partial reports Infeasible when no completion exists") {
    // C5 with two vertices pinned so that no 3-coloring completes:
    // chi_rho(C5) = 4, so max_color 3 with nothing pinned is already hopeless.
    Graph c5 = generate_cycle(5);
    DistanceMatrix d = all_pairs_distances(c5);
    std::vector<int> fixed(5, 0);
    std::vector<int> order{0, 1, 2, 3, 4};
    KResult r = complete_partial(c5, d, fixed, 3, order, {});
    CHECK(r.status == SolveStatus::Infeasible);
}

TEST_CASE("chi_rho agrees with the brute-force oracle on small graphs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(rng, 7);
        SolveReport report = chi_rho(g);
        REQUIRE(report.status == ReportStatus::Solved);
        CHECK(report.value == brute_force_chi(g));
    }
}

TEST_CASE("solved reports carry a valid witness and full refutation trail") {
    Graph c6 = generate_cycle(6);
    SolveReport report = chi_rho_total(c6);
    REQUIRE(report.status == ReportStatus::Solved);
    CHECK(report.value == 8);
    CHECK(report.lower_bound == 8);
    CHECK(report.upper_bound == 8);

    DistanceMatrix d = all_pairs_distances(c6);
    CHECK(report.witness.target == Target::Total);
    CHECK(validate_packing(c6, d, report.witness).empty());
    CHECK(report.witness.max_color() <= 8);

    REQUIRE(report.refutations.size() == 7);
    for (int k = 1; k <= 7; ++k) {
        CHECK(report.refutations[k - 1].k == k);
        if (report.refutations[k - 1].kind == RefutationKind::Capacity) {
            CHECK(report.refutations[k - 1].stats.nodes == 0);
        }
    }
}

TEST_CASE("chi_rho_total matches chi_rho of the explicit total graph") {
    for (const Graph& g : {generate_path(5), generate_cycle(5), generate_star(3)}) {
        SolveReport direct = chi_rho_total(g);
        SolveReport via_transform = chi_rho(total_graph(g).graph);
        REQUIRE(direct.status == ReportStatus::Solved);
        REQUIRE(via_transform.status == ReportStatus::Solved);
        CHECK(direct.value == via_transform.value);
    }
}

TEST_CASE("chi_rho_index matches chi_rho of the line graph") {
    for (const Graph& g : {generate_path(6), generate_cycle(6), generate_star(4)}) {
        SolveReport direct = chi_rho_index(g);
        SolveReport via_transform = chi_rho(line_graph(g).graph);
        REQUIRE(direct.status == ReportStatus::Solved);
        REQUIRE(via_transform.status == ReportStatus::Solved);
        CHECK(direct.value == via_transform.value);
        CHECK(direct.witness.target == Target::Line);

        DistanceMatrix d = all_pairs_distances(g);
        CHECK(validate_packing(g, d, direct.witness).empty());
    }
    CHECK_THROWS_AS(chi_rho_index(generate_path(1)), std::invalid_argument);
}

TEST_CASE("timeout reports keep sound bounds") {
    Graph c12 = generate_cycle(12);
    Budget tiny;
    tiny.node_limit = 50;
    SolveReport report = chi_rho_total(c12, tiny);
    REQUIRE(report.status == ReportStatus::Timeout);
    CHECK(report.value == -1);
    CHECK(report.lower_bound >= 4);       // Delta + 2 on C12
    CHECK(report.lower_bound <= 10);      // true value
    CHECK(report.upper_bound >= 10);
}

TEST_CASE("small classifier covers the complete case split") {
    CHECK(classify_small(generate_path(1)) == SmallClass::One);
    CHECK(classify_small(generate_path(2)) == SmallClass::Three);
    CHECK(classify_small(generate_path(3)) == SmallClass::Four);
    CHECK(classify_small(generate_path(4)) == SmallClass::AtLeastFive);
    CHECK(classify_small(generate_cycle(3)) == SmallClass::AtLeastFive);
    CHECK(classify_small(generate_star(3)) == SmallClass::AtLeastFive);
    CHECK(small_class_name(SmallClass::Four) == "4");
    CHECK(small_class_name(SmallClass::AtLeastFive) == "at_least_5");

    Graph split(3, {Edge(0, 1)});
    CHECK_THROWS_AS(classify_small(split), std::invalid_argument);
}

TEST_CASE("brute-force oracle enforces its size limit") {
    CHECK_THROWS_AS(brute_force_chi(generate_path(11)), std::invalid_argument);
    CHECK(brute_force_chi(generate_path(1)) == 1);
    CHECK(brute_force_chi(generate_path(2)) == 2);
}

TEST_CASE("status and kind names are stable") {
    CHECK(solve_status_name(SolveStatus::Colorable) == "colorable");
    CHECK(solve_status_name(SolveStatus::Infeasible) == "infeasible");
    CHECK(solve_status_name(SolveStatus::Timeout) == "timeout");
    CHECK(refutation_kind_name(RefutationKind::Capacity) == "capacity");
    CHECK(refutation_kind_name(RefutationKind::ExhaustedSearch) == "exhausted-search");
    CHECK(refutation_kind_name(RefutationKind::Classifier) == "classifier");
}
