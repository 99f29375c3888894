#include "packtotal/constructions.hpp"

#include "packtotal/solver.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace packtotal {

namespace {

// Elements of a path/cycle in walk order: position 2j is vertex j, position
// 2j+1 is the edge {j, j+1} (mod n for cycles). A cycle on n vertices has 2n
// positions, a path has 2n-1.
Element element_at_position(int pos, int n, bool cyclic) {
    if (pos % 2 == 0) return Element::vertex(pos / 2);
    const int j = pos / 2;
    return Element::edge(j, cyclic ? (j + 1) % n : j + 1);
}

int position_of_element(const Element& el, int n) {
    if (el.kind == Element::Kind::Vertex) return 2 * el.u;
    if (el.u == 0 && el.v == n - 1) return 2 * n - 1; // the wrap-around edge
    return 2 * el.u + 1;
}

PackingColoring coloring_from_positions(const std::vector<int>& colors, int n, bool cyclic) {
    PackingColoring c;
    c.target = Target::Total;
    for (int pos = 0; pos < static_cast<int>(colors.size()); ++pos)
        c.assignment[element_at_position(pos, n, cyclic)] = colors[pos];
    return c;
}

// Minimum packing total colorings of short paths, one color per position.
const std::vector<int>& path_table(int n) {
    static const std::map<int, std::vector<int>> tables = {
        {3, {1, 2, 3, 1, 4}},
        {4, {1, 2, 3, 1, 4, 5, 1}},
        {5, {1, 3, 2, 1, 4, 5, 1, 2, 3}},
        {6, {1, 3, 2, 4, 1, 5, 6, 1, 2, 3, 1}},
        {7, {1, 4, 2, 1, 3, 5, 1, 6, 2, 1, 4, 3, 1}},
        {8, {1, 6, 4, 2, 1, 3, 7, 1, 2, 5, 1, 4, 3, 1, 2}},
        {9, {1, 6, 4, 2, 1, 3, 7, 1, 2, 5, 1, 4, 3, 1, 2, 6, 1}},
    };
    return tables.at(n);
}

// Minimum packing total colorings of short cycles, one color per position.
const std::vector<int>& cycle_table(int n) {
    static const std::map<int, std::vector<int>> tables = {
        {3, {1, 2, 3, 1, 4, 5}},
        {4, {1, 2, 3, 4, 1, 5, 6, 7}},
        {5, {1, 3, 2, 1, 4, 5, 1, 2, 6, 7}},
        {6, {1, 3, 2, 1, 4, 5, 1, 6, 2, 1, 7, 8}},
        {7, {4, 5, 1, 3, 2, 6, 1, 7, 8, 1, 3, 2, 1, 9}},
        {8, {3, 2, 1, 4, 5, 1, 2, 3, 1, 6, 7, 2, 1, 8, 9, 1}},
        {9, {4, 2, 1, 3, 5, 1, 2, 6, 1, 4, 7, 1, 3, 2, 1, 8, 9, 1}},
        {10, {5, 1, 2, 6, 1, 4, 3, 2, 1, 7, 8, 1, 2, 3, 4, 1, 9, 2, 1, 10}},
        {11, {1, 3, 2, 1, 6, 7, 1, 2, 3, 1, 5, 4, 1, 2, 8, 3, 1, 9, 2, 1, 4, 5}},
        {12, {1, 5, 2, 1, 3, 6, 1, 7, 2, 1, 4, 3, 1, 5, 2, 1, 8, 9, 1, 2, 3, 1, 4, 10}},
    };
    return tables.at(n);
}

// First matching case of the seam classification, or "" if none applies.
// Positions are element positions on the cycle; the seam edge sits at 2n-1.
std::string classify_seam_conflict(int color, int pos_a, int pos_b, int n) {
    struct Case {
        const char* name;
        std::vector<int> colors;
        int window_start; // window is [window_start, 2n-1]
    };
    const std::vector<Case> cases = {
        {"A", {1, 5}, 2 * n - 1}, {"B", {2}, 2 * n - 2}, {"C", {4}, 2 * n - 3},
        {"D", {6}, 2 * n - 9},    {"E", {7}, 2 * n - 4}, {"F", {8}, 2 * n - 16},
    };
    for (const auto& cs : cases) {
        if (std::find(cs.colors.begin(), cs.colors.end(), color) == cs.colors.end()) continue;
        if (pos_a >= cs.window_start || pos_b >= cs.window_start) return cs.name;
    }
    return "";
}

} // namespace

const PatternTable& d12_pattern() {
    static const PatternTable pattern = {
        8, 1, 2, 6, 1, 4, 3, 2, 1, 5, 7, 1, 2, 3, 4, 1, 6, 2,
        1, 8, 3, 1, 2, 4, 1, 5, 7, 1, 3, 2, 1, 6, 4, 1, 2, 3,
        1, 8, 5, 1, 2, 4, 1, 3, 6, 1, 2, 7, 1, 5, 4, 2, 1, 3,
    };
    return pattern;
}

PackingColoring color_star_total(int n) {
    if (n < 1) throw std::invalid_argument("color_star_total requires n >= 1");
    PackingColoring c;
    c.target = Target::Total;
    c.assignment[Element::vertex(0)] = 2;
    for (int i = 1; i <= n; ++i) {
        c.assignment[Element::vertex(i)] = 1;
        c.assignment[Element::edge(0, i)] = 2 + i;
    }
    return c;
}

PackingColoring color_path_total(int n) {
    if (n < 3) throw std::invalid_argument("color_path_total requires n >= 3");
    if (n <= 9) return coloring_from_positions(path_table(n), n, false);
    // The distance graph D(1,2) on positions 0,1,2,... contains every path's
    // element graph as an induced isometric subgraph, so a prefix of the
    // periodic pattern is a valid 8-color packing total coloring.
    std::vector<int> colors(2 * n - 1);
    const PatternTable& pattern = d12_pattern();
    for (int pos = 0; pos < 2 * n - 1; ++pos) colors[pos] = pattern[pos % 54];
    return coloring_from_positions(colors, n, false);
}

std::pair<PackingColoring, std::vector<SeamConflict>> pattern_on_cycle(int n) {
    if (n < 13) throw std::invalid_argument("pattern_on_cycle requires n >= 13");
    std::vector<int> colors(2 * n);
    const PatternTable& pattern = d12_pattern();
    for (int pos = 0; pos < 2 * n; ++pos) colors[pos] = pattern[pos % 54];
    PackingColoring c = coloring_from_positions(colors, n, true);

    const Graph g = generate_cycle(n);
    const DistanceMatrix d = all_pairs_distances(g);
    std::vector<SeamConflict> conflicts;
    for (const Violation& v : validate_packing(g, d, c)) {
        SeamConflict sc;
        sc.a = v.a;
        sc.b = v.b;
        sc.color = v.color;
        sc.distance = v.distance;
        sc.statement = classify_seam_conflict(v.color, position_of_element(v.a, n),
                                              position_of_element(v.b, n), n);
        conflicts.push_back(sc);
    }
    return {std::move(c), std::move(conflicts)};
}

PackingColoring seam_repair(const LabeledGraph& t, const DistanceMatrix& d,
                            const PackingColoring& c, const std::vector<Element>& window,
                            int max_color) {
    const int n = t.graph.vertex_count();
    if (d.size() != n) throw std::invalid_argument("seam_repair: distance matrix size mismatch");

    // Flatten the labeled coloring onto host vertices.
    std::vector<int> host_color(n, 0);
    for (int v = 0; v < n; ++v) {
        auto it = c.assignment.find(t.labels[static_cast<std::size_t>(v)]);
        if (it == c.assignment.end())
            throw std::invalid_argument("seam_repair: coloring misses element " +
                                        t.labels[static_cast<std::size_t>(v)].to_string());
        if (it->second < 1 || it->second > max_color)
            throw std::invalid_argument("seam_repair: color of element " +
                                        t.labels[static_cast<std::size_t>(v)].to_string() +
                                        " is outside 1..max_color");
        host_color[static_cast<std::size_t>(v)] = it->second;
    }

    std::set<int> window_set;
    std::vector<int> order; // first-occurrence window order
    for (const Element& el : window) {
        const int idx = t.index_of(el);
        if (idx < 0)
            throw std::invalid_argument("seam_repair: window element " + el.to_string() +
                                        " is not in the graph");
        if (window_set.insert(idx).second) order.push_back(idx);
    }

    // Scan every pair: a valid input is returned untouched, and a conflict
    // the window cannot reach is a contract breach even when other conflicts
    // are reachable (fixed pairs are never re-checked by the search).
    bool any_violation = false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (host_color[static_cast<std::size_t>(u)] != host_color[static_cast<std::size_t>(v)])
                continue;
            if (d.at(u, v) > host_color[static_cast<std::size_t>(u)]) continue;
            if (!window_set.count(u) && !window_set.count(v))
                throw std::invalid_argument(
                    "seam_repair: conflict outside the repair window between " +
                    t.labels[static_cast<std::size_t>(u)].to_string() + " and " +
                    t.labels[static_cast<std::size_t>(v)].to_string());
            any_violation = true;
        }
    if (!any_violation) return c;

    std::vector<int> fixed = host_color;
    for (int v : order) fixed[static_cast<std::size_t>(v)] = 0;

    Budget unbounded;
    unbounded.node_limit = std::numeric_limits<long long>::max();
    unbounded.time_limit_secs = std::numeric_limits<double>::infinity();
    KResult result = complete_partial(t.graph, d, fixed, max_color, order, unbounded);
    if (result.status != SolveStatus::Colorable)
        throw SeamRepairError("seam_repair: no valid recoloring of the window with " +
                              std::to_string(max_color) + " colors");

    PackingColoring repaired;
    repaired.target = c.target;
    for (int v = 0; v < n; ++v)
        repaired.assignment[t.labels[static_cast<std::size_t>(v)]] =
            result.colors[static_cast<std::size_t>(v)];
    return repaired;
}

PackingColoring color_cycle_total(int n) {
    if (n < 3) throw std::invalid_argument("color_cycle_total requires n >= 3");
    if (n <= 12) return coloring_from_positions(cycle_table(n), n, true);

    auto [pattern_coloring, conflicts] = pattern_on_cycle(n);
    if (conflicts.empty()) return pattern_coloring;

    // Every wrap conflict sits within element-distance 8 of the seam edge
    // (both endpoints do), so recoloring that neighborhood with up to 11
    // colors always succeeds. Element-distance <= 8 from the seam means a
    // cyclic position offset of at most 16, so the window is enumerated in
    // walk order across the seam — the order the repair search branches in.
    const Graph g = generate_cycle(n);
    std::vector<Element> window;
    std::set<int> positions_seen;
    for (int delta = -16; delta <= 16; ++delta) {
        const int pos = (((2 * n - 1 + delta) % (2 * n)) + 2 * n) % (2 * n);
        if (!positions_seen.insert(pos).second) continue;
        window.push_back(element_at_position(pos, n, true));
    }

    const LabeledGraph t = total_graph(g);
    const DistanceMatrix dt = all_pairs_distances(t.graph);
    return seam_repair(t, dt, pattern_coloring, window, 11);
}

} // namespace packtotal
