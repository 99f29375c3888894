#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace packtotal {

/// An undirected edge with canonically sorted endpoints (u < v).
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Error raised by parse_edge_list; `kind` distinguishes the failure modes.
class ParseError : public std::runtime_error {
public:
    enum class Kind {
        BadHeader,      ///< first line is not "n m" with n >= 1, m >= 0
        MalformedLine,  ///< an edge line is not two integers
        IndexOutOfRange,///< an endpoint is outside [0, n)
        SelfLoop,       ///< an edge joins a vertex to itself
        DuplicateEdge,  ///< the same unordered pair appears twice
        WrongEdgeCount, ///< fewer/more edge lines than the header promised
    };

    ParseError(Kind kind, const std::string& message)
        : std::runtime_error(message), m_kind(kind) {}

    Kind kind() const { return m_kind; }

private:
    Kind m_kind;
};

/// A simple finite undirected graph with dense vertex indices [0, n).
/// Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `n` vertices with the given edges. Endpoints are
    /// canonicalized, the edge list is sorted. Throws std::invalid_argument
    /// on self-loops, duplicate edges, or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return m_n; }
    int edge_count() const { return static_cast<int>(m_edges.size()); }

    /// Edges in sorted order; the position of an edge in this list is its
    /// stable edge index (used by line/total graph labelings).
    const std::vector<Edge>& edges() const { return m_edges; }

    /// Neighbor lists, each sorted ascending.
    const std::vector<int>& neighbors(int v) const { return m_adj.at(v); }

    int degree(int v) const { return static_cast<int>(m_adj.at(v).size()); }

    bool has_edge(int u, int v) const;

    /// Index of edge {u,v} in edges(), or -1 if absent.
    int edge_index(int u, int v) const;

    /// Serializes to the canonical edge-list text: "n m\n" followed by one
    /// sorted "u v" line per edge. Byte-stable: parse/emit round-trips.
    std::string to_edge_list() const;

    /// True if every vertex is reachable from vertex 0 (K1 is connected;
    /// graphs with n == 0 are vacuously connected).
    bool connected() const;

    /// Vertex sets of the connected components, each sorted, ordered by
    /// their smallest vertex.
    std::vector<std::vector<int>> components() const;

private:
    int m_n = 0;
    std::vector<Edge> m_edges;
    std::vector<std::vector<int>> m_adj;
};

/// A vertex or an edge of a graph: the color-carriers of total coloring.
struct Element {
    enum class Kind { Vertex, Edge };

    Kind kind = Kind::Vertex;
    int u = 0;  ///< vertex id, or smaller edge endpoint
    int v = -1; ///< -1 for a vertex, or larger edge endpoint

    static Element vertex(int id) { return Element{Kind::Vertex, id, -1}; }
    static Element edge(int a, int b) {
        return Element{Kind::Edge, a < b ? a : b, a < b ? b : a};
    }

    bool is_vertex() const { return kind == Kind::Vertex; }
    bool is_edge() const { return kind == Kind::Edge; }

    auto operator<=>(const Element&) const = default;

    /// "u3" for a vertex, "e2-5" for an edge.
    std::string to_string() const;
};

/// Parses the edge-list text format: first line "n m", then m lines "u v".
/// Throws ParseError with a distinct kind per failure mode.
Graph parse_edge_list(const std::string& text);

/// Generator families accepted by generate().
enum class Family { Path, Cycle, Star, CompleteBipartite, D12Segment };

/// Path u_0 - u_1 - ... - u_{n-1}; n >= 1.
Graph generate_path(int n);

/// Cycle u_0 - ... - u_{n-1} - u_0; n >= 3.
Graph generate_cycle(int n);

/// Star K_{1,n}: center vertex 0, leaves 1..n; n >= 1.
Graph generate_star(int n);

/// Complete bipartite K_{m,n}: parts {0..m-1} and {m..m+n-1}; m, n >= 1.
Graph generate_complete_bipartite(int m, int n);

/// Finite window of the distance graph D(1,2): vertices 0..length-1,
/// i ~ j iff |i-j| in {1,2}; length >= 1.
Graph generate_d12_segment(int length);

/// Dispatching generator: params carries the family sizes (one integer,
/// except CompleteBipartite which takes two).
Graph generate(Family family, const std::vector<int>& params);

/// Subgraph induced by a vertex subset (sorted, deduplicated internally);
/// vertex i of the result is vertices[i] of g.
Graph induced_subgraph(const Graph& g, std::vector<int> vertices);

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
};

/// Exact maximum and minimum degree. Throws std::invalid_argument on the
/// empty graph.
DegreeStats degree_stats(const Graph& g);

} // namespace packtotal
