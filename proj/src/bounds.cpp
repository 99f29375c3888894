#include "packtotal/bounds.hpp"

#include "packtotal/solver.hpp"
#include "packtotal/transform.hpp"

#include <algorithm>

namespace packtotal {

std::pair<int, std::vector<int>> max_independent_set(const Graph& g) {
    return max_i_packing(g, all_pairs_distances(g), 1);
}

std::pair<int, std::vector<Edge>> max_matching(const Graph& g) {
    LabeledGraph l = line_graph(g);
    if (l.graph.vertex_count() == 0) {
        return {0, {}};
    }
    auto [nu, indices] = max_independent_set(l.graph);
    std::vector<Edge> witness;
    witness.reserve(indices.size());
    for (int idx : indices) {
        const Element& e = l.labels[idx];
        witness.emplace_back(e.u, e.v);
    }
    return {nu, witness};
}

int upper_bound_total(const Graph& g) {
    if (!g.connected()) {
        throw std::invalid_argument("upper_bound_total requires a connected graph");
    }
    int alpha = max_independent_set(g).first;
    int nu = max_matching(g).first;
    return g.vertex_count() + g.edge_count() - std::max(alpha, nu) + 1;
}

namespace {

/// Counting lower bound: the smallest k whose exact per-color capacities on
/// the total graph can cover all elements. Every smaller k is refuted by
/// capacity_infeasible, so the chromatic number is at least the returned k.
int capacity_lower_bound(const Graph& g) {
    LabeledGraph t = total_graph(g);
    DistanceMatrix dist = all_pairs_distances(t.graph);
    int k = 1;
    while (capacity_infeasible(t.graph, dist, k)) {
        ++k;
    }
    return k;
}

int classifier_lower_bound(const Graph& g) {
    switch (classify_small(g)) {
    case SmallClass::One:
        return 1;
    case SmallClass::Three:
        return 3;
    case SmallClass::Four:
        return 4;
    case SmallClass::AtLeastFive:
        return 5;
    }
    return 1;
}

std::pair<int, std::string> lower_bound_connected(const Graph& g) {
    int delta_bound = 0;
    if (g.edge_count() >= 1) {
        delta_bound = degree_stats(g).max_degree + 2;
    }
    int classifier_bound = classifier_lower_bound(g);
    int capacity_bound = capacity_lower_bound(g);

    int best = std::max({delta_bound, classifier_bound, capacity_bound});
    if (delta_bound == best) {
        return {best, "delta_plus_2"};
    }
    if (classifier_bound == best) {
        return {best, "classifier"};
    }
    return {best, "capacity"};
}

} // namespace

std::pair<int, std::string> lower_bound_total(const Graph& g) {
    if (g.vertex_count() < 1) {
        throw std::invalid_argument("lower_bound_total needs at least one vertex");
    }
    if (g.connected()) {
        return lower_bound_connected(g);
    }
    // The invariant of a disconnected graph is the maximum over components.
    std::pair<int, std::string> best{0, ""};
    for (const auto& component : g.components()) {
        auto comp_bound = lower_bound_connected(induced_subgraph(g, component));
        if (comp_bound.first > best.first) {
            best = comp_bound;
        }
    }
    return best;
}

std::optional<int> diameter2_exact(const Graph& g) {
    if (!g.connected()) {
        throw std::invalid_argument("diameter2_exact requires a connected graph");
    }
    if (all_pairs_distances(g).diameter() != 2) {
        return std::nullopt;
    }
    return g.vertex_count() - max_independent_set(g).first + 1;
}

BoundsReport compute_bounds(const Graph& g) {
    if (g.vertex_count() < 1) {
        throw std::invalid_argument("compute_bounds needs at least one vertex");
    }
    BoundsReport report;
    report.alpha = max_independent_set(g).first;
    report.nu = max_matching(g).first;
    report.diameter = all_pairs_distances(g).diameter();

    auto [lower, provenance] = lower_bound_total(g);
    report.lower = lower;
    report.lower_provenance = provenance;

    if (g.connected()) {
        report.upper = upper_bound_total(g);
        if (report.diameter == 2) {
            report.diam2_exact = diameter2_exact(g);
        }
    } else {
        int upper = 0;
        for (const auto& component : g.components()) {
            upper = std::max(upper, upper_bound_total(induced_subgraph(g, component)));
        }
        report.upper = upper;
    }
    return report;
}

} // namespace packtotal
