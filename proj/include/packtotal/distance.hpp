#pragma once

#include "packtotal/graph.hpp"

#include <limits>
#include <vector>

namespace packtotal {

/// Sentinel for "no path": large enough to compare as infinity, small enough
/// that sentinel + 1 cannot overflow int.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max() / 4;

/// All-pairs shortest-path hop distances; entries are kInfiniteDistance for
/// vertex pairs in different components. Immutable after construction.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> table) : m_n(n), m_table(std::move(table)) {}

    int size() const { return m_n; }

    int at(int u, int v) const { return m_table[static_cast<std::size_t>(u) * m_n + v]; }

    /// True if every entry is finite.
    bool connected() const;

    /// Largest distance; kInfiniteDistance when disconnected, 0 on K1.
    int diameter() const;

private:
    int m_n = 0;
    std::vector<int> m_table;
};

/// Breadth-first distances from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Distance between two elements of g:
///   vertex-vertex: d(a, b);
///   vertex u, edge cd: min{d(u,c), d(u,d)} + 1;
///   edge ab, edge cd: min{d(a,c), d(a,d), d(b,c), d(b,d)} + 1.
/// Equals the distance between the corresponding vertices of total_graph(g);
/// saturates at kInfiniteDistance across components. Throws
/// std::invalid_argument if an element does not belong to g.
int element_distance(const Graph& g, const DistanceMatrix& d, const Element& a,
                     const Element& b);

} // namespace packtotal
