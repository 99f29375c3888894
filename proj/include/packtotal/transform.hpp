#pragma once

#include "packtotal/graph.hpp"

#include <map>

namespace packtotal {

/// A graph derived from a source graph, together with the bijection from its
/// vertex indices back to the source elements they represent.
struct LabeledGraph {
    Graph graph;
    std::vector<Element> labels; ///< labels[i] = source element of vertex i

    /// Vertex index carrying the given source element, or -1 if absent.
    int index_of(const Element& e) const {
        auto it = m_index.find(e);
        return it == m_index.end() ? -1 : it->second;
    }

    /// Rebuilds the reverse lookup; called by the constructors below.
    void build_index() {
        m_index.clear();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            m_index.emplace(labels[i], static_cast<int>(i));
        }
    }

private:
    std::map<Element, int> m_index;
};

/// Line graph L(g): one vertex per edge of g, adjacent iff the edges share
/// an endpoint. Vertex i of L(g) is edge i of g (sorted edge order), so
/// |E(L(g))| = sum_v C(deg v, 2).
LabeledGraph line_graph(const Graph& g);

/// Total graph T(g): one vertex per element of g. Vertices 0..n-1 are the
/// vertices of g, vertex n+j is edge j of g. Adjacency: edges of g, incident
/// edge pairs, and vertex-incident-edge pairs, so
/// |E(T(g))| = |E| + sum_v C(deg v, 2) + 2|E|.
LabeledGraph total_graph(const Graph& g);

} // namespace packtotal
