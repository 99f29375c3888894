#pragma once

#include "packtotal/distance.hpp"
#include "packtotal/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace packtotal {

/// Closed-form information about the packing total chromatic number of a
/// graph, built from exact alpha / nu / diameter values.
struct BoundsReport {
    int alpha = 0;    ///< independence number
    int nu = 0;       ///< matching number
    int diameter = 0; ///< kInfiniteDistance when disconnected

    int lower = 1;                ///< best certified lower bound
    std::string lower_provenance; ///< "delta_plus_2" | "classifier" | "capacity"
    int upper = 1;                ///< vertex+edge-count upper bound

    /// Exact packing chromatic number when the graph has diameter 2.
    std::optional<int> diam2_exact;
};

/// Exact independence number with a witness set (deterministic
/// branch-and-bound; shared engine with the solver's 1-packing).
std::pair<int, std::vector<int>> max_independent_set(const Graph& g);

/// Exact matching number with a witness edge set; computed as a maximum
/// independent set of the line graph.
std::pair<int, std::vector<Edge>> max_matching(const Graph& g);

/// |V| + |E| - max(alpha, nu) + 1 for a connected graph; throws
/// std::invalid_argument on disconnected input.
int upper_bound_total(const Graph& g);

/// Best certified lower bound on the packing total chromatic number: the
/// maximum of Delta+2 (when an edge exists), the small-graph classifier, and
/// the counting bound on the total graph. Returns the value and the name of
/// the binding rule.
std::pair<int, std::string> lower_bound_total(const Graph& g);

/// When diam(g) == 2, the packing chromatic number of g equals
/// |V| - alpha + 1; returns that value, or nullopt for other diameters.
/// Throws std::invalid_argument on disconnected input.
std::optional<int> diameter2_exact(const Graph& g);

/// Full report. On disconnected input, alpha and nu are the whole-graph
/// values and lower/upper aggregate per-component bounds by the maximum.
BoundsReport compute_bounds(const Graph& g);

} // namespace packtotal
