#include "packtotal/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <set>

namespace packtotal {

std::string solve_status_name(SolveStatus s) {
    switch (s) {
    case SolveStatus::Colorable:
        return "colorable";
    case SolveStatus::Infeasible:
        return "infeasible";
    case SolveStatus::Timeout:
        return "timeout";
    }
    return "infeasible";
}

std::string refutation_kind_name(RefutationKind kind) {
    switch (kind) {
    case RefutationKind::Capacity:
        return "capacity";
    case RefutationKind::ExhaustedSearch:
        return "exhausted-search";
    case RefutationKind::Classifier:
        return "classifier";
    }
    return "capacity";
}

long long CapacityProfile::total() const {
    return std::accumulate(capacity.begin(), capacity.end(), 0LL);
}

std::string small_class_name(SmallClass c) {
    switch (c) {
    case SmallClass::One:
        return "1";
    case SmallClass::Three:
        return "3";
    case SmallClass::Four:
        return "4";
    case SmallClass::AtLeastFive:
        return "at_least_5";
    }
    return "at_least_5";
}

namespace {

constexpr int kWords = kMaxEngineVertices / 64;

/// Fixed-capacity bitset over host vertex indices.
struct IndexSet {
    std::array<std::uint64_t, kWords> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int total = 0;
        for (std::uint64_t word : w) {
            total += std::popcount(word);
        }
        return total;
    }

    bool none() const {
        for (std::uint64_t word : w) {
            if (word != 0) {
                return false;
            }
        }
        return true;
    }

    bool subset_of(const IndexSet& other) const {
        for (int i = 0; i < kWords; ++i) {
            if (w[i] & ~other.w[i]) {
                return false;
            }
        }
        return true;
    }

    IndexSet& operator&=(const IndexSet& other) {
        for (int i = 0; i < kWords; ++i) {
            w[i] &= other.w[i];
        }
        return *this;
    }

    IndexSet& operator|=(const IndexSet& other) {
        for (int i = 0; i < kWords; ++i) {
            w[i] |= other.w[i];
        }
        return *this;
    }

    void and_not(const IndexSet& other) {
        for (int i = 0; i < kWords; ++i) {
            w[i] &= ~other.w[i];
        }
    }

    /// Smallest set index, or -1 when empty.
    int first() const {
        for (int i = 0; i < kWords; ++i) {
            if (w[i] != 0) {
                return i * 64 + std::countr_zero(w[i]);
            }
        }
        return -1;
    }

    template <typename Fn>
    void for_each(Fn fn) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t word = w[i];
            while (word != 0) {
                int bit = std::countr_zero(word);
                fn(i * 64 + bit);
                word &= word - 1;
            }
        }
    }
};

IndexSet operator&(IndexSet a, const IndexSet& b) {
    a &= b;
    return a;
}

void check_engine_size(const Graph& g) {
    if (g.vertex_count() > kMaxEngineVertices) {
        throw std::invalid_argument("graph too large for the exact engine (limit " +
                                    std::to_string(kMaxEngineVertices) + " vertices)");
    }
}

/// Adjacency bitsets of the i-th power graph: pow[v] holds every u != v with
/// d(u, v) <= i.
std::vector<IndexSet> power_adjacency(const DistanceMatrix& d, int i) {
    const int n = d.size();
    std::vector<IndexSet> pow(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (d.at(u, v) <= i) {
                pow[u].set(v);
                pow[v].set(u);
            }
        }
    }
    return pow;
}

/// Deterministic branch-and-bound maximum independent set restricted to a
/// candidate vertex set. Each node covers the candidates with a greedy
/// clique cover (index order) and branches on them in descending cover
/// position: an independent set inside the first t cliques has at most t
/// vertices, so the per-candidate bound size + t prunes exactly. The cover
/// is tight on interval-like conflict graphs (powers of paths and cycles),
/// which makes those instances near-linear.
class MisSolver {
public:
    explicit MisSolver(const std::vector<IndexSet>& adj) : m_adj(adj) {}

    std::pair<int, IndexSet> solve(const IndexSet& candidates) {
        m_best = 0;
        m_best_set = IndexSet{};
        IndexSet chosen;
        expand(candidates, chosen, 0);
        return {m_best, m_best_set};
    }

private:
    void expand(IndexSet cand, IndexSet& chosen, int size) {
        if (size + cand.count() <= m_best) {
            return;
        }

        // Simplicial reduction: when the minimum-degree candidate's
        // neighborhood within cand is a clique, including it is optimal (any
        // independent set uses at most one vertex of that clique, and the
        // candidate conflicts with nothing else). Restores chosen on exit.
        // Powers of paths are chordal, so after one branch breaks a cycle the
        // rest of such an instance reduces without branching.
        struct Restore {
            IndexSet& chosen;
            IndexSet added;
            ~Restore() { chosen.and_not(added); }
        } restore{chosen, IndexSet{}};
        for (;;) {
            int pivot = -1;
            int pivot_degree = 0;
            cand.for_each([&](int v) {
                const int deg = (m_adj[v] & cand).count();
                if (pivot < 0 || deg < pivot_degree) {
                    pivot_degree = deg;
                    pivot = v;
                }
            });
            if (pivot < 0) break;
            const IndexSet neighborhood = m_adj[pivot] & cand;
            bool clique = true;
            neighborhood.for_each([&](int u) {
                IndexSet rest = neighborhood;
                rest.reset(u);
                if (!rest.subset_of(m_adj[u])) clique = false;
            });
            if (!clique) break;
            chosen.set(pivot);
            restore.added.set(pivot);
            ++size;
            cand.reset(pivot);
            cand.and_not(m_adj[pivot]);
        }
        if (size > m_best) {
            m_best = size;
            m_best_set = chosen;
        }
        if (cand.none() || size + cand.count() <= m_best) {
            return;
        }

        // Greedy clique cover in index order: each candidate joins the first
        // clique it is fully adjacent to.
        std::vector<IndexSet> cliques;
        std::vector<std::pair<int, int>> order; // (clique index, vertex)
        cand.for_each([&](int v) {
            std::size_t assigned = cliques.size();
            for (std::size_t ci = 0; ci < cliques.size(); ++ci) {
                if (cliques[ci].subset_of(m_adj[v])) {
                    assigned = ci;
                    break;
                }
            }
            if (assigned == cliques.size()) {
                cliques.emplace_back();
            }
            cliques[assigned].set(v);
            order.emplace_back(static_cast<int>(assigned), v);
        });
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });

        for (std::size_t pos = order.size(); pos-- > 0;) {
            const auto [clique_index, v] = order[pos];
            // Everything still in cand lies in cliques 0..clique_index.
            if (size + clique_index + 1 <= m_best) {
                return;
            }
            IndexSet with = cand;
            with.reset(v);
            with.and_not(m_adj[v]);
            chosen.set(v);
            expand(with, chosen, size + 1);
            chosen.reset(v);
            cand.reset(v);
        }
    }

    const std::vector<IndexSet>& m_adj;
    IndexSet m_best_set;
    int m_best = 0;
};

int mis_size(const std::vector<IndexSet>& adj, const IndexSet& candidates) {
    return MisSolver(adj).solve(candidates).first;
}

/// Per-color capacities of a vertex subset, with the arithmetic tail: once
/// the capacity reaches 1 it stays 1 for every larger color.
std::vector<int> capacities_for(const DistanceMatrix& d, const IndexSet& subset, int k) {
    std::vector<int> caps;
    caps.reserve(k);
    for (int i = 1; i <= k; ++i) {
        if (!caps.empty() && caps.back() == 1) {
            caps.push_back(1);
            continue;
        }
        caps.push_back(mis_size(power_adjacency(d, i), subset));
    }
    return caps;
}

/// The backtracking engine behind solve_k and complete_partial: forward
/// checking on per-color availability masks, exact residual-capacity
/// pruning, and interchangeability breaking among unused capacity-1 colors.
class PackingEngine {
public:
    PackingEngine(const Graph& g, const DistanceMatrix& d, int k,
                  std::vector<int> capacities)
        : m_n(g.vertex_count()), m_k(k), m_cap(std::move(capacities)) {
        check_engine_size(g);
        if (k < 1) {
            throw std::invalid_argument("color count must be >= 1");
        }
        if (k > kMaxEngineVertices) {
            throw std::invalid_argument("color count above the engine limit");
        }
        m_conflict.assign(m_k, std::vector<IndexSet>(m_n));
        for (int u = 0; u < m_n; ++u) {
            for (int v = u + 1; v < m_n; ++v) {
                int dist = d.at(u, v);
                if (dist > m_k) {
                    continue;
                }
                // u and v conflict on every color i >= dist.
                for (int i = dist; i <= m_k; ++i) {
                    m_conflict[i - 1][u].set(v);
                    m_conflict[i - 1][v].set(u);
                }
            }
        }
    }

    /// Degree of v in the k-th power graph (union of all conflict relations).
    int power_degree(int v) const { return m_conflict[m_k - 1][v].count(); }

    KResult run(const std::vector<int>& fixed, const std::vector<int>& order,
                const Budget& budget) {
        m_color = fixed;
        m_used.assign(m_k, 0);
        m_avail.assign(m_k, IndexSet{});
        m_uncolored = IndexSet{};
        m_order = order;
        m_nodes = 0;
        m_timed_out = false;
        m_node_limit = budget.node_limit;
        m_time_limit = budget.time_limit_secs;
        m_start = std::chrono::steady_clock::now();

        for (int v : order) {
            m_uncolored.set(v);
        }
        for (int i = 0; i < m_k; ++i) {
            m_avail[i] = m_uncolored;
        }
        for (int v = 0; v < m_n; ++v) {
            int color = fixed[v];
            if (color == 0) {
                continue;
            }
            if (color > m_k) {
                throw std::invalid_argument("fixed color exceeds the color limit");
            }
            ++m_used[color - 1];
            m_avail[color - 1].and_not(m_conflict[color - 1][v]);
        }
        for (int i = 0; i < m_k; ++i) {
            if (m_used[i] > m_cap[i]) {
                throw std::invalid_argument(
                    "fixed assignment already exceeds the capacity of color " +
                    std::to_string(i + 1));
            }
        }

        KResult result;
        bool found = dfs(0);
        result.stats.nodes = m_nodes;
        result.stats.millis = elapsed_millis();
        if (found) {
            result.status = SolveStatus::Colorable;
            result.colors = m_color;
        } else if (m_timed_out) {
            result.status = SolveStatus::Timeout;
        } else {
            result.status = SolveStatus::Infeasible;
        }
        return result;
    }

private:
    double elapsed_millis() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - m_start)
            .count();
    }

    bool dfs(std::size_t pos) {
        // Forward check: every uncolored vertex keeps a feasible color, and
        // the residual class capacities can still cover the uncolored count.
        IndexSet cover;
        long long residual = 0;
        for (int i = 0; i < m_k; ++i) {
            cover |= m_avail[i];
            residual += std::min<long long>(m_cap[i] - m_used[i], m_avail[i].count());
        }
        if (residual < static_cast<long long>(m_order.size() - pos)) {
            return false;
        }
        if (!m_uncolored.subset_of(cover)) {
            return false;
        }
        if (pos == m_order.size()) {
            return true;
        }

        const int v = m_order[pos];
        bool fresh_singleton_tried = false;
        for (int i = 0; i < m_k; ++i) {
            if (!m_avail[i].test(v) || m_used[i] >= m_cap[i]) {
                continue;
            }
            if (m_cap[i] == 1 && m_used[i] == 0) {
                // Unused capacity-1 colors are interchangeable: their classes
                // are singletons, and a singleton class is valid under any
                // color, so only the smallest such color needs to be tried.
                if (fresh_singleton_tried) {
                    continue;
                }
                fresh_singleton_tried = true;
            }

            ++m_nodes;
            if (m_nodes > m_node_limit || ((m_nodes & 0xFFF) == 0 &&
                                           elapsed_millis() > m_time_limit * 1000.0)) {
                m_timed_out = true;
                return false;
            }

            // Assign color i+1 to v.
            IndexSet rows_with_v; // color indices whose avail row contained v
            for (int j = 0; j < m_k; ++j) {
                if (m_avail[j].test(v)) {
                    rows_with_v.set(j);
                    m_avail[j].reset(v);
                }
            }
            IndexSet saved_row = m_avail[i];
            m_avail[i].and_not(m_conflict[i][v]);
            m_uncolored.reset(v);
            m_color[v] = i + 1;
            ++m_used[i];

            if (dfs(pos + 1)) {
                return true;
            }

            --m_used[i];
            m_color[v] = 0;
            m_uncolored.set(v);
            m_avail[i] = saved_row;
            rows_with_v.for_each([&](int j) { m_avail[j].set(v); });
            if (m_timed_out) {
                return false;
            }
        }
        return false;
    }

    int m_n;
    int m_k;
    std::vector<int> m_cap;
    std::vector<std::vector<IndexSet>> m_conflict;

    std::vector<int> m_color;
    std::vector<int> m_used;
    std::vector<IndexSet> m_avail;
    IndexSet m_uncolored;
    std::vector<int> m_order;
    long long m_nodes = 0;
    long long m_node_limit = 0;
    double m_time_limit = 0.0;
    bool m_timed_out = false;
    std::chrono::steady_clock::time_point m_start;
};

/// Branch order for solve_k: decreasing degree in the k-th power graph,
/// ties by vertex index.
std::vector<int> default_order(const PackingEngine& engine, int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return engine.power_degree(a) > engine.power_degree(b);
    });
    return order;
}

IndexSet full_set(int n) {
    IndexSet s;
    for (int v = 0; v < n; ++v) {
        s.set(v);
    }
    return s;
}

IndexSet set_of(const std::vector<int>& vertices) {
    IndexSet s;
    for (int v : vertices) {
        s.set(v);
    }
    return s;
}

} // namespace

std::pair<int, std::vector<int>> max_i_packing(const Graph& g, const DistanceMatrix& d,
                                               int i) {
    check_engine_size(g);
    if (i < 1) {
        throw std::invalid_argument("packing index must be >= 1");
    }
    auto [size, members] = MisSolver(power_adjacency(d, i)).solve(full_set(g.vertex_count()));
    std::vector<int> witness;
    members.for_each([&](int v) { witness.push_back(v); });
    return {size, witness};
}

CapacityProfile compute_capacity_profile(const Graph& g, const DistanceMatrix& d, int k) {
    check_engine_size(g);
    if (k < 1) {
        throw std::invalid_argument("color count must be >= 1");
    }
    CapacityProfile profile;
    profile.capacity = capacities_for(d, full_set(g.vertex_count()), k);
    return profile;
}

bool capacity_infeasible(const Graph& g, const DistanceMatrix& d, int k) {
    check_engine_size(g);
    if (k < 1) {
        throw std::invalid_argument("color count must be >= 1");
    }
    for (const auto& component : g.components()) {
        const IndexSet subset = set_of(component);
        const long long size = static_cast<long long>(component.size());
        long long sum = 0;
        for (int i = 1; i <= k && sum < size; ++i) {
            int cap = mis_size(power_adjacency(d, i), subset);
            if (cap == 1) {
                sum += k - i + 1; // capacities are non-increasing and >= 1
                break;
            }
            sum += cap;
        }
        if (sum < size) {
            return true;
        }
    }
    return false;
}

KResult solve_k(const Graph& g, const DistanceMatrix& d, int k, const Budget& budget) {
    check_engine_size(g);
    if (k < 1) {
        throw std::invalid_argument("color count must be >= 1");
    }
    auto start = std::chrono::steady_clock::now();
    if (capacity_infeasible(g, d, k)) {
        KResult result;
        result.status = SolveStatus::Infeasible;
        result.stats.millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      start)
                .count();
        return result;
    }
    PackingEngine engine(g, d, k, capacities_for(d, full_set(g.vertex_count()), k));
    std::vector<int> fixed(g.vertex_count(), 0);
    return engine.run(fixed, default_order(engine, g.vertex_count()), budget);
}

KResult complete_partial(const Graph& g, const DistanceMatrix& d,
                         const std::vector<int>& fixed, int max_color,
                         const std::vector<int>& order, const Budget& budget) {
    check_engine_size(g);
    if (static_cast<int>(fixed.size()) != g.vertex_count()) {
        throw std::invalid_argument("fixed assignment size must match the vertex count");
    }
    std::set<int> free_set;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (fixed[v] == 0) {
            free_set.insert(v);
        } else if (fixed[v] < 0) {
            throw std::invalid_argument("fixed colors must be positive (or 0 for free)");
        }
    }
    std::set<int> order_set(order.begin(), order.end());
    if (order_set != free_set || order_set.size() != order.size()) {
        throw std::invalid_argument("branch order must list exactly the free vertices");
    }
    PackingEngine engine(g, d, max_color,
                         capacities_for(d, full_set(g.vertex_count()), max_color));
    return engine.run(fixed, order, budget);
}

namespace {

/// Shared chromatic loop over a host graph; labels map host vertices back to
/// source elements for the witness.
SolveReport solve_chromatic(const Graph& host, const std::vector<Element>& labels,
                            Target target, const Budget& budget) {
    check_engine_size(host);
    const int n = host.vertex_count();
    const DistanceMatrix dist = all_pairs_distances(host);
    const auto components = host.components();

    SolveReport report;
    auto start = std::chrono::steady_clock::now();
    auto elapsed_secs = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    };

    // Lazily extended per-component capacity columns for the counting
    // refutation, plus the global profile handed to the engine.
    std::vector<std::vector<int>> comp_caps(components.size());
    std::vector<IndexSet> comp_sets;
    comp_sets.reserve(components.size());
    for (const auto& component : components) {
        comp_sets.push_back(set_of(component));
    }
    std::vector<int> global_caps;

    auto extend_caps = [&](int k) {
        while (static_cast<int>(global_caps.size()) < k) {
            int i = static_cast<int>(global_caps.size()) + 1;
            if (!global_caps.empty() && global_caps.back() == 1) {
                global_caps.push_back(1);
            } else {
                global_caps.push_back(mis_size(power_adjacency(dist, i), full_set(n)));
            }
            for (std::size_t c = 0; c < components.size(); ++c) {
                if (!comp_caps[c].empty() && comp_caps[c].back() == 1) {
                    comp_caps[c].push_back(1);
                } else {
                    comp_caps[c].push_back(mis_size(power_adjacency(dist, i), comp_sets[c]));
                }
            }
        }
    };

    auto capacity_refuted = [&](int k) {
        extend_caps(k);
        for (std::size_t c = 0; c < components.size(); ++c) {
            long long sum = 0;
            for (int i = 0; i < k; ++i) {
                sum += comp_caps[c][i];
            }
            if (sum < static_cast<long long>(components[c].size())) {
                return true;
            }
        }
        return false;
    };

    // Goddard-style fallback upper bound, reported when a run times out:
    // each component can be colored with |comp| - alpha(comp) + 1 colors.
    auto fallback_upper = [&] {
        extend_caps(1);
        int upper = 0;
        for (std::size_t c = 0; c < components.size(); ++c) {
            upper = std::max(upper,
                             static_cast<int>(components[c].size()) - comp_caps[c][0] + 1);
        }
        return std::max(upper, 1);
    };

    for (int k = 1; k <= n; ++k) {
        if (capacity_refuted(k)) {
            report.refutations.push_back(Refutation{k, RefutationKind::Capacity, {}});
            continue;
        }

        Budget remaining;
        remaining.node_limit = budget.node_limit - report.stats.nodes;
        remaining.time_limit_secs = budget.time_limit_secs - elapsed_secs();
        if (remaining.node_limit <= 0 || remaining.time_limit_secs <= 0) {
            report.status = ReportStatus::Timeout;
            report.lower_bound = k;
            report.upper_bound = fallback_upper();
            report.stats.millis = elapsed_secs() * 1000.0;
            return report;
        }

        extend_caps(k);
        PackingEngine engine(host, dist, k,
                             std::vector<int>(global_caps.begin(), global_caps.begin() + k));
        std::vector<int> fixed(n, 0);
        KResult result = engine.run(fixed, default_order(engine, n), remaining);
        report.stats.nodes += result.stats.nodes;

        if (result.status == SolveStatus::Colorable) {
            report.status = ReportStatus::Solved;
            report.value = k;
            report.lower_bound = k;
            report.upper_bound = k;
            report.witness.target = target;
            for (int v = 0; v < n; ++v) {
                report.witness.assignment[labels[v]] = result.colors[v];
            }
            report.stats.millis = elapsed_secs() * 1000.0;
            return report;
        }
        if (result.status == SolveStatus::Infeasible) {
            report.refutations.push_back(
                Refutation{k, RefutationKind::ExhaustedSearch, result.stats});
            continue;
        }
        report.status = ReportStatus::Timeout;
        report.lower_bound = k;
        report.upper_bound = fallback_upper();
        report.stats.millis = elapsed_secs() * 1000.0;
        return report;
    }

    // Unreachable: a rainbow coloring always succeeds at k = n.
    throw std::logic_error("chromatic loop exhausted without a coloring");
}

std::vector<Element> vertex_labels(const Graph& g) {
    std::vector<Element> labels;
    labels.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        labels.push_back(Element::vertex(v));
    }
    return labels;
}

} // namespace

SolveReport chi_rho(const Graph& g, const Budget& budget) {
    if (g.vertex_count() < 1) {
        throw std::invalid_argument("chi_rho needs at least one vertex");
    }
    return solve_chromatic(g, vertex_labels(g), Target::Graph, budget);
}

SolveReport chi_rho_total(const Graph& g, const Budget& budget) {
    if (g.vertex_count() < 1) {
        throw std::invalid_argument("chi_rho_total needs at least one vertex");
    }
    LabeledGraph t = total_graph(g);
    return solve_chromatic(t.graph, t.labels, Target::Total, budget);
}

SolveReport chi_rho_index(const Graph& g, const Budget& budget) {
    if (g.edge_count() < 1) {
        throw std::invalid_argument("chi_rho_index needs at least one edge");
    }
    LabeledGraph l = line_graph(g);
    return solve_chromatic(l.graph, l.labels, Target::Line, budget);
}

int brute_force_chi(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) {
        throw std::invalid_argument("brute_force_chi needs at least one vertex");
    }
    if (n > 10) {
        throw std::invalid_argument("brute_force_chi is limited to 10 vertices");
    }
    const DistanceMatrix dist = all_pairs_distances(g);
    std::vector<int> colors(n, 0);

    // Plain backtracking in vertex-index order, colors ascending; checks the
    // partial assignment against every earlier vertex. Kept free of the
    // production engine's pruning so it stays an independent oracle.
    auto assign = [&](auto&& self, int v, int k) -> bool {
        if (v == n) {
            return true;
        }
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (colors[u] == c && dist.at(u, v) <= c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                colors[v] = c;
                if (self(self, v + 1, k)) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        return false;
    };

    for (int k = 1; k <= n; ++k) {
        if (assign(assign, 0, k)) {
            return k;
        }
    }
    return n; // unreachable: n distinct colors always work
}

SmallClass classify_small(const Graph& g) {
    if (!g.connected() || g.vertex_count() < 1) {
        throw std::invalid_argument("classify_small requires a connected graph");
    }
    const int n = g.vertex_count();
    const int m = g.edge_count();
    // Among connected graphs, (n, m) determines K1, K2, and P3 exactly.
    if (n == 1) {
        return SmallClass::One;
    }
    if (n == 2) {
        return SmallClass::Three;
    }
    if (n == 3 && m == 2) {
        return SmallClass::Four;
    }
    return SmallClass::AtLeastFive;
}

} // namespace packtotal
