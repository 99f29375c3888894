#pragma once

#include "packtotal/coloring.hpp"
#include "packtotal/distance.hpp"
#include "packtotal/graph.hpp"
#include "packtotal/transform.hpp"

#include <string>
#include <utility>
#include <vector>

namespace packtotal {

/// Largest host graph the exact engine accepts.
inline constexpr int kMaxEngineVertices = 512;

/// Search budget: a solve stops with Timeout when either limit is hit.
struct Budget {
    long long node_limit = 100'000'000;
    double time_limit_secs = 600.0;
};

/// Outcome of a single decision query.
enum class SolveStatus { Colorable, Infeasible, Timeout };

std::string solve_status_name(SolveStatus s);

struct SolveStats {
    long long nodes = 0; ///< assignments tried by the backtracking engine
    double millis = 0.0;
};

/// Result of solve_k / complete_partial on a host graph.
struct KResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<int> colors; ///< host vertex -> color; empty unless Colorable
    SolveStats stats;
};

/// Exact per-color class-size limits: capacity[i-1] is the maximum size of
/// an (i)-packing of the host graph, i = 1..k. Non-increasing in i.
struct CapacityProfile {
    std::vector<int> capacity;

    int k() const { return static_cast<int>(capacity.size()); }
    long long total() const;
};

/// How a value of k was ruled out.
enum class RefutationKind { Capacity, ExhaustedSearch, Classifier };

std::string refutation_kind_name(RefutationKind kind);

struct Refutation {
    int k = 0;
    RefutationKind kind = RefutationKind::Capacity;
    SolveStats stats; ///< zero nodes for counting refutations
};

enum class ReportStatus { Solved, Timeout };

/// Outcome of an exact chromatic computation. When Solved, `witness`
/// validates with exactly `value` colors and every k < value carries a
/// refutation record. On Timeout, value is absent (-1) and the bounds carry
/// the best certified information.
struct SolveReport {
    ReportStatus status = ReportStatus::Solved;
    int value = -1;
    int lower_bound = 1;
    int upper_bound = -1;
    PackingColoring witness;
    std::vector<Refutation> refutations;
    SolveStats stats;
};

/// Exact maximum size of a vertex set with pairwise distance > i, together
/// with a witness set: the maximum independent set of the i-th power graph,
/// found by deterministic branch-and-bound. Requires i >= 1.
std::pair<int, std::vector<int>> max_i_packing(const Graph& g, const DistanceMatrix& d,
                                               int i);

/// Exact class-size limits for colors 1..k of the host graph.
CapacityProfile compute_capacity_profile(const Graph& g, const DistanceMatrix& d, int k);

/// Sound (incomplete) refutation by counting: true iff some connected
/// component has sum_{i=1..k} max_i_packing < |component|. A true result
/// proves no packing coloring with colors {1..k} exists.
bool capacity_infeasible(const Graph& g, const DistanceMatrix& d, int k);

/// Decides whether the host graph admits a packing coloring with colors
/// {1..k}. Infeasible is reported only on exhaustive refutation (capacity
/// shortcut or completed backtracking); budget exhaustion yields Timeout.
/// Deterministic: the witness is the first valid assignment in the engine's
/// fixed branching order (vertices by decreasing k-th-power degree, ties by
/// index, colors ascending).
KResult solve_k(const Graph& g, const DistanceMatrix& d, int k, const Budget& budget = {});

/// Searches for a valid extension of a partial coloring: fixed[v] > 0 pins
/// vertex v, fixed[v] == 0 leaves it free. Free vertices are branched in the
/// given order (which must list exactly the free vertices) with colors
/// 1..max_color ascending, so the witness is the lexicographically first
/// valid completion in that order. Fixed vertices are never changed; fixed
/// pairs are not re-checked. Throws std::invalid_argument if a fixed color
/// class already exceeds its exact capacity (such a class is internally in
/// conflict and no completion could be valid).
KResult complete_partial(const Graph& g, const DistanceMatrix& d,
                         const std::vector<int>& fixed, int max_color,
                         const std::vector<int>& order, const Budget& budget = {});

/// Least k such that the graph itself admits a packing coloring with colors
/// {1..k}; witness carries Target::Graph vertex elements.
SolveReport chi_rho(const Graph& g, const Budget& budget = {});

/// Packing total chromatic number: chi_rho on total_graph(g), witness mapped
/// back to the vertices and edges of g (Target::Total).
SolveReport chi_rho_total(const Graph& g, const Budget& budget = {});

/// Packing chromatic index: chi_rho on line_graph(g), witness mapped to the
/// edges of g (Target::Line). Requires at least one edge.
SolveReport chi_rho_index(const Graph& g, const Budget& budget = {});

/// Independent test oracle: plain backtracking in vertex-index order with no
/// capacity machinery, ordering heuristics, or symmetry breaking. Requires
/// |V| <= 10.
int brute_force_chi(const Graph& g);

/// The complete classification of small packing total chromatic numbers for
/// connected graphs: 1 for K1, 3 for K2, 4 for P3 (no connected graph has
/// value 2), and at least 5 for everything else.
enum class SmallClass { One, Three, Four, AtLeastFive };

std::string small_class_name(SmallClass c);

/// Classifies a connected graph by inspection (isomorphism to K1/K2/P3 is
/// decided by vertex and edge counts, which determine these graphs among
/// connected graphs). Throws std::invalid_argument on disconnected input.
SmallClass classify_small(const Graph& g);

} // namespace packtotal
