#pragma once

#include "packtotal/distance.hpp"
#include "packtotal/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace packtotal {

/// Which element set of the source graph a coloring covers.
enum class Target { Graph, Line, Total };

std::string target_name(Target t);
Target target_from_name(const std::string& name);

/// A candidate packing coloring: every required element of the target gets a
/// positive color. Two elements may share color i only if their distance
/// exceeds i.
struct PackingColoring {
    Target target = Target::Graph;
    std::map<Element, int> assignment;

    int color_of(const Element& e) const {
        auto it = assignment.find(e);
        return it == assignment.end() ? 0 : it->second;
    }

    /// Number of distinct colors used.
    int color_count() const;

    /// Largest color used (0 when empty).
    int max_color() const;
};

/// One broken constraint: both elements carry `color` at distance <= color.
struct Violation {
    Element a;
    Element b;
    int color = 0;
    int distance = 0;

    std::string to_string() const;
};

/// Elements a coloring with the given target must cover: vertices for
/// Target::Graph, edges for Target::Line, both for Target::Total.
std::vector<Element> required_elements(const Graph& g, Target target);

/// Checks c against the element-distance metric of g; d must be
/// all_pairs_distances(g). Returns every violated pair (empty iff valid).
/// Throws std::invalid_argument when the assignment misses a required
/// element, colors an element not in g, or uses a color < 1.
std::vector<Violation> validate_packing(const Graph& g, const DistanceMatrix& d,
                                        const PackingColoring& c);

} // namespace packtotal
