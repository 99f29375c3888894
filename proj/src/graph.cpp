#include "packtotal/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace packtotal {

Graph::Graph(int n, std::vector<Edge> edges) : m_n(n) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be non-negative");
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 0 || e.v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loops are not allowed");
        }
        if (i > 0 && edges[i - 1] == e) {
            throw std::invalid_argument("duplicate edge");
        }
    }
    m_edges = std::move(edges);
    m_adj.assign(m_n, {});
    for (const Edge& e : m_edges) {
        m_adj[e.u].push_back(e.v);
        m_adj[e.v].push_back(e.u);
    }
    for (auto& nbrs : m_adj) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool Graph::has_edge(int u, int v) const {
    return edge_index(u, v) >= 0;
}

int Graph::edge_index(int u, int v) const {
    Edge key(u, v);
    auto it = std::lower_bound(m_edges.begin(), m_edges.end(), key);
    if (it != m_edges.end() && *it == key) {
        return static_cast<int>(it - m_edges.begin());
    }
    return -1;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << m_n << ' ' << edge_count() << '\n';
    for (const Edge& e : m_edges) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

bool Graph::connected() const {
    return components().size() <= 1;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> result;
    std::vector<bool> seen(m_n, false);
    for (int start = 0; start < m_n; ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<int> comp;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : m_adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

std::string Element::to_string() const {
    std::ostringstream out;
    if (is_vertex()) {
        out << 'u' << u;
    } else {
        out << 'e' << u << '-' << v;
    }
    return out.str();
}

namespace {

// Reads one line as exactly two integers; returns false on any other shape.
bool read_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream in(line);
    if (!(in >> a >> b)) {
        return false;
    }
    std::string trailing;
    if (in >> trailing) {
        return false;
    }
    return true;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;

    // Header: "n m".
    if (!std::getline(in, line)) {
        throw ParseError(ParseError::Kind::BadHeader, "missing header line");
    }
    long long n = 0;
    long long m = 0;
    if (!read_two_ints(line, n, m) || n < 1 || m < 0) {
        throw ParseError(ParseError::Kind::BadHeader,
                         "header must be \"n m\" with n >= 1, m >= 0: '" + line + "'");
    }

    std::vector<Edge> edges;
    std::set<Edge> seen;
    long long count = 0;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue; // ignore blank lines
        }
        long long u = 0;
        long long v = 0;
        if (!read_two_ints(line, u, v)) {
            throw ParseError(ParseError::Kind::MalformedLine,
                             "line " + std::to_string(line_no) +
                                 ": expected \"u v\": '" + line + "'");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError(ParseError::Kind::IndexOutOfRange,
                             "line " + std::to_string(line_no) +
                                 ": vertex index out of range [0, " +
                                 std::to_string(n) + ")");
        }
        if (u == v) {
            throw ParseError(ParseError::Kind::SelfLoop,
                             "line " + std::to_string(line_no) + ": self-loop at vertex " +
                                 std::to_string(u));
        }
        Edge e(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(e).second) {
            throw ParseError(ParseError::Kind::DuplicateEdge,
                             "line " + std::to_string(line_no) + ": duplicate edge " +
                                 std::to_string(e.u) + " " + std::to_string(e.v));
        }
        edges.push_back(e);
        ++count;
    }
    if (count != m) {
        throw ParseError(ParseError::Kind::WrongEdgeCount,
                         "header promised " + std::to_string(m) + " edges, found " +
                             std::to_string(count));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph generate_path(int n) {
    if (n < 1) {
        throw std::invalid_argument("path needs at least 1 vertex");
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(edges));
}

Graph generate_cycle(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(n - 1, 0);
    return Graph(n, std::move(edges));
}

Graph generate_star(int n) {
    if (n < 1) {
        throw std::invalid_argument("star needs at least 1 leaf");
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
    }
    return Graph(n + 1, std::move(edges));
}

Graph generate_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("complete bipartite parts must be >= 1");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            edges.emplace_back(i, m + j);
        }
    }
    return Graph(m + n, std::move(edges));
}

Graph generate_d12_segment(int length) {
    if (length < 1) {
        throw std::invalid_argument("d12 segment needs at least 1 vertex");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i) {
        if (i + 1 < length) {
            edges.emplace_back(i, i + 1);
        }
        if (i + 2 < length) {
            edges.emplace_back(i, i + 2);
        }
    }
    return Graph(length, std::move(edges));
}

Graph generate(Family family, const std::vector<int>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw std::invalid_argument("wrong number of generator parameters");
        }
    };
    switch (family) {
    case Family::Path:
        need(1);
        return generate_path(params[0]);
    case Family::Cycle:
        need(1);
        return generate_cycle(params[0]);
    case Family::Star:
        need(1);
        return generate_star(params[0]);
    case Family::CompleteBipartite:
        need(2);
        return generate_complete_bipartite(params[0], params[1]);
    case Family::D12Segment:
        need(1);
        return generate_d12_segment(params[0]);
    }
    throw std::invalid_argument("unknown generator family");
}

Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> position(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument("induced subgraph vertex out of range");
        }
        position[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (position[e.u] >= 0 && position[e.v] >= 0) {
            edges.emplace_back(position[e.u], position[e.v]);
        }
    }
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

DegreeStats degree_stats(const Graph& g) {
    if (g.vertex_count() == 0) {
        throw std::invalid_argument("degree stats of an empty graph");
    }
    DegreeStats stats{0, g.vertex_count()};
    for (int v = 0; v < g.vertex_count(); ++v) {
        stats.max_degree = std::max(stats.max_degree, g.degree(v));
        stats.min_degree = std::min(stats.min_degree, g.degree(v));
    }
    return stats;
}

} // namespace packtotal
