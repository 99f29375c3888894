#include "packtotal/transform.hpp"

namespace packtotal {

LabeledGraph line_graph(const Graph& g) {
    const auto& src_edges = g.edges();
    const int m = static_cast<int>(src_edges.size());

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = src_edges[i];
            const Edge& b = src_edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
                edges.emplace_back(i, j);
            }
        }
    }

    LabeledGraph result;
    result.graph = Graph(m, std::move(edges));
    result.labels.reserve(m);
    for (const Edge& e : src_edges) {
        result.labels.push_back(Element::edge(e.u, e.v));
    }
    result.build_index();
    return result;
}

LabeledGraph total_graph(const Graph& g) {
    const int n = g.vertex_count();
    const auto& src_edges = g.edges();
    const int m = static_cast<int>(src_edges.size());

    std::vector<Edge> edges;
    // Original adjacencies between vertices.
    for (const Edge& e : src_edges) {
        edges.emplace_back(e.u, e.v);
    }
    // Incident edge pairs (the line-graph part), shifted by n.
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = src_edges[i];
            const Edge& b = src_edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
                edges.emplace_back(n + i, n + j);
            }
        }
    }
    // Each vertex is adjacent to its incident edges.
    for (int j = 0; j < m; ++j) {
        edges.emplace_back(src_edges[j].u, n + j);
        edges.emplace_back(src_edges[j].v, n + j);
    }

    LabeledGraph result;
    result.graph = Graph(n + m, std::move(edges));
    result.labels.reserve(n + m);
    for (int v = 0; v < n; ++v) {
        result.labels.push_back(Element::vertex(v));
    }
    for (const Edge& e : src_edges) {
        result.labels.push_back(Element::edge(e.u, e.v));
    }
    result.build_index();
    return result;
}

} // namespace packtotal
