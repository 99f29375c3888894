#include "packtotal/distance.hpp"

#include <algorithm>
#include <queue>

namespace packtotal {

bool DistanceMatrix::connected() const {
    for (int u = 0; u < m_n; ++u) {
        for (int v = 0; v < m_n; ++v) {
            if (at(u, v) >= kInfiniteDistance) {
                return false;
            }
        }
    }
    return true;
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int u = 0; u < m_n; ++u) {
        for (int v = 0; v < m_n; ++v) {
            best = std::max(best, at(u, v));
        }
    }
    return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> table(static_cast<std::size_t>(n) * n, kInfiniteDistance);
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] >= 0) {
                table[static_cast<std::size_t>(s) * n + v] = dist[v];
            }
        }
    }
    return DistanceMatrix(n, std::move(table));
}

namespace {

void check_element(const Graph& g, const Element& e) {
    if (e.is_vertex()) {
        if (e.u < 0 || e.u >= g.vertex_count()) {
            throw std::invalid_argument("element vertex not in graph: " + e.to_string());
        }
    } else if (!g.has_edge(e.u, e.v)) {
        throw std::invalid_argument("element edge not in graph: " + e.to_string());
    }
}

} // namespace

int element_distance(const Graph& g, const DistanceMatrix& d, const Element& a,
                     const Element& b) {
    check_element(g, a);
    check_element(g, b);

    if (a == b) {
        return 0; // the endpoint rule below would report 1 for an edge and itself
    }
    if (a.is_vertex() && b.is_vertex()) {
        return d.at(a.u, b.u);
    }

    int best = kInfiniteDistance;
    if (a.is_vertex()) { // vertex vs edge
        best = std::min(d.at(a.u, b.u), d.at(a.u, b.v));
    } else if (b.is_vertex()) { // edge vs vertex
        best = std::min(d.at(b.u, a.u), d.at(b.u, a.v));
    } else { // edge vs edge
        best = std::min({d.at(a.u, b.u), d.at(a.u, b.v), d.at(a.v, b.u), d.at(a.v, b.v)});
    }
    if (best >= kInfiniteDistance) {
        return kInfiniteDistance; // saturate instead of kInfiniteDistance + 1
    }
    return best + 1;
}

} // namespace packtotal
