#include "packtotal/coloring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace packtotal {

std::string target_name(Target t) {
    switch (t) {
    case Target::Graph:
        return "graph";
    case Target::Line:
        return "line";
    case Target::Total:
        return "total";
    }
    return "graph";
}

Target target_from_name(const std::string& name) {
    if (name == "graph") {
        return Target::Graph;
    }
    if (name == "line") {
        return Target::Line;
    }
    if (name == "total") {
        return Target::Total;
    }
    throw std::invalid_argument("unknown target: " + name);
}

int PackingColoring::color_count() const {
    std::set<int> colors;
    for (const auto& [element, color] : assignment) {
        colors.insert(color);
    }
    return static_cast<int>(colors.size());
}

int PackingColoring::max_color() const {
    int best = 0;
    for (const auto& [element, color] : assignment) {
        best = std::max(best, color);
    }
    return best;
}

std::string Violation::to_string() const {
    std::ostringstream out;
    out << a.to_string() << " and " << b.to_string() << " share color " << color
        << " at distance " << distance;
    return out.str();
}

std::vector<Element> required_elements(const Graph& g, Target target) {
    std::vector<Element> result;
    if (target == Target::Graph || target == Target::Total) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            result.push_back(Element::vertex(v));
        }
    }
    if (target == Target::Line || target == Target::Total) {
        for (const Edge& e : g.edges()) {
            result.push_back(Element::edge(e.u, e.v));
        }
    }
    return result;
}

std::vector<Violation> validate_packing(const Graph& g, const DistanceMatrix& d,
                                        const PackingColoring& c) {
    // Completeness: exactly the required elements, each with a positive color.
    const std::vector<Element> required = required_elements(g, c.target);
    for (const Element& e : required) {
        auto it = c.assignment.find(e);
        if (it == c.assignment.end()) {
            throw std::invalid_argument("incomplete assignment: missing " + e.to_string());
        }
        if (it->second < 1) {
            throw std::invalid_argument("non-positive color on " + e.to_string());
        }
    }
    if (c.assignment.size() != required.size()) {
        for (const auto& [element, color] : c.assignment) {
            if (!std::binary_search(required.begin(), required.end(), element)) {
                throw std::invalid_argument("element not in target: " + element.to_string());
            }
        }
    }

    // Group elements by color, then test each same-colored pair.
    std::map<int, std::vector<Element>> classes;
    for (const auto& [element, color] : c.assignment) {
        classes[color].push_back(element);
    }
    std::vector<Violation> violations;
    for (const auto& [color, members] : classes) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                int dist = element_distance(g, d, members[i], members[j]);
                if (dist <= color) {
                    violations.push_back(Violation{members[i], members[j], color, dist});
                }
            }
        }
    }
    return violations;
}

} // namespace packtotal
