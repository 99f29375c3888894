// packem: exact packing (total) coloring toolkit — command-line front end.
//
// Subcommands:
//   gen        write a generator family as a canonical edge list
//   chi        exact packing chromatic number of a graph / its line or total graph
//   bounds     closed-form bounds report
//   verify     recheck a coloring certificate from scratch
//   reproduce  run a reproduction suite (paths | cycles | stars | bounds | pattern)
//
// Exit codes: 0 success, 1 suite mismatch / internal failure, 2 parse or
// input error, 3 budget exhausted, 4 certificate verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include "packtotal/bounds.hpp"
#include "packtotal/certificate.hpp"
#include "packtotal/coloring.hpp"
#include "packtotal/constructions.hpp"
#include "packtotal/distance.hpp"
#include "packtotal/graph.hpp"
#include "packtotal/solver.hpp"
#include "packtotal/transform.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::json;
using namespace packtotal;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitVerify = 4;

// ---------------------------------------------------------------------------
// input plumbing

struct GenSpec {
    std::string family;
    std::vector<int> params;
};

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "star") return Family::Star;
    if (name == "complete_bipartite") return Family::CompleteBipartite;
    if (name == "d12") return Family::D12Segment;
    throw std::invalid_argument(
        "unknown family '" + name +
        "' (expected path, cycle, star, complete_bipartite, or d12)");
}

GenSpec parse_gen_spec(const std::string& text) {
    std::istringstream in(text);
    GenSpec spec;
    if (!(in >> spec.family)) throw std::invalid_argument("empty generator spec");
    int value = 0;
    while (in >> value) spec.params.push_back(value);
    if (!in.eof()) throw std::invalid_argument("generator parameters must be integers");
    return spec;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Where a graph came from, for row labeling.
struct GraphInput {
    Graph graph{0, {}};
    std::string family; // generator family or "file"
    int n = 0;
};

GraphInput load_graph(const std::string& file, const std::string& gen) {
    if (file.empty() == gen.empty())
        throw std::invalid_argument("give exactly one input: an edge-list FILE or --gen \"family n [m]\"");
    GraphInput input;
    if (!file.empty()) {
        input.graph = parse_edge_list(read_file(file));
        input.family = "file";
    } else {
        GenSpec spec = parse_gen_spec(gen);
        input.graph = generate(family_from_name(spec.family), spec.params);
        input.family = spec.family;
    }
    input.n = input.graph.vertex_count();
    return input;
}

// ---------------------------------------------------------------------------
// output plumbing

enum class Format { Human, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "human") return Format::Human;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format: " + name);
}

long long ms(double millis) { return std::llround(millis); }

// ---------------------------------------------------------------------------
// chi

std::pair<int, std::string> host_capacity_lower(const Graph& host) {
    const DistanceMatrix d = all_pairs_distances(host);
    int k = 1;
    while (capacity_infeasible(host, d, k)) ++k;
    return {k, "capacity"};
}

int cmd_chi(const GraphInput& input, Target target, const Budget& budget, Format format,
            const std::string& cert_path) {
    SolveReport report;
    switch (target) {
    case Target::Graph: report = chi_rho(input.graph, budget); break;
    case Target::Line: report = chi_rho_index(input.graph, budget); break;
    case Target::Total: report = chi_rho_total(input.graph, budget); break;
    }

    std::pair<int, std::string> lower =
        target == Target::Total ? lower_bound_total(input.graph)
        : target == Target::Line ? host_capacity_lower(line_graph(input.graph).graph)
                                 : host_capacity_lower(input.graph);

    const bool solved = report.status == ReportStatus::Solved;
    std::string written_cert;
    if (solved && !cert_path.empty()) {
        Certificate cert =
            make_certificate(input.graph, target, report.witness, report.value, "search");
        std::ofstream out(cert_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write certificate: " + cert_path);
        out << to_json(cert);
        written_cert = cert_path;
    }

    if (format == Format::Json) {
        json refutations = json::array();
        for (const Refutation& r : report.refutations)
            refutations.push_back({{"k", r.k},
                                   {"kind", refutation_kind_name(r.kind)},
                                   {"nodes", r.stats.nodes}});
        json doc = {
            {"command", "chi"},
            {"target", target_name(target)},
            {"status", solved ? "solved" : "timeout"},
            {"value", solved ? json(report.value) : json(nullptr)},
            {"lower_bound", solved ? report.value : report.lower_bound},
            {"upper_bound", report.upper_bound},
            {"lower_bound_provenance", lower.second},
            {"nodes", report.stats.nodes},
            {"millis", ms(report.stats.millis)},
            {"certificate", written_cert.empty() ? json(nullptr) : json(written_cert)},
            {"refutations", refutations},
        };
        std::cout << doc.dump(2) << "\n";
    } else if (format == Format::Csv) {
        std::cout << "family,n,target,value_or_range,expected,status,nodes,millis\n";
        std::cout << input.family << "," << input.n << "," << target_name(target) << ","
                  << (solved ? std::to_string(report.value)
                             : std::to_string(report.lower_bound) + ".." +
                                   std::to_string(report.upper_bound))
                  << ",," << (solved ? "ok" : "timeout") << "," << report.stats.nodes << ","
                  << ms(report.stats.millis) << "\n";
    } else {
        std::cout << "target: " << target_name(target) << "\n";
        if (solved) {
            std::cout << "value: " << report.value << "\n";
        } else {
            std::cout << "status: timeout (budget exhausted)\n";
            std::cout << "certified range: " << report.lower_bound << ".."
                      << report.upper_bound << "\n";
        }
        std::cout << "lower_bound: " << lower.first << " (" << lower.second << ")\n";
        std::cout << "nodes: " << report.stats.nodes << "\n";
        std::cout << "millis: " << ms(report.stats.millis) << "\n";
        if (!written_cert.empty()) std::cout << "certificate: " << written_cert << "\n";
    }
    return solved ? kExitOk : kExitTimeout;
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(const GraphInput& input, Format format) {
    const BoundsReport report = compute_bounds(input.graph);
    const bool finite_diameter = report.diameter < kInfiniteDistance;
    const std::string diameter_str =
        finite_diameter ? std::to_string(report.diameter) : std::string("inf");

    if (format == Format::Json) {
        json doc = {
            {"command", "bounds"},
            {"alpha", report.alpha},
            {"nu", report.nu},
            {"diameter", finite_diameter ? json(report.diameter) : json(nullptr)},
            {"lower", report.lower},
            {"lower_provenance", report.lower_provenance},
            {"upper", report.upper},
            {"diam2_exact",
             report.diam2_exact ? json(*report.diam2_exact) : json(nullptr)},
        };
        std::cout << doc.dump(2) << "\n";
    } else if (format == Format::Csv) {
        std::cout << "alpha,nu,diameter,lower,lower_provenance,upper,diam2_exact\n";
        std::cout << report.alpha << "," << report.nu << "," << diameter_str << ","
                  << report.lower << "," << report.lower_provenance << "," << report.upper
                  << ","
                  << (report.diam2_exact ? std::to_string(*report.diam2_exact)
                                         : std::string())
                  << "\n";
    } else {
        std::cout << "alpha: " << report.alpha << "\n";
        std::cout << "nu: " << report.nu << "\n";
        std::cout << "diameter: " << diameter_str << "\n";
        std::cout << "lower: " << report.lower << " (" << report.lower_provenance << ")\n";
        std::cout << "upper: " << report.upper << "\n";
        if (report.diam2_exact)
            std::cout << "diam2_exact: " << *report.diam2_exact << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& cert_path, Format format) {
    Certificate cert = certificate_from_json(read_file(cert_path));
    const VerificationResult result = verify_certificate(cert);

    if (format == Format::Json) {
        json violations = json::array();
        for (const Violation& v : result.violations)
            violations.push_back({{"a", v.a.to_string()},
                                  {"b", v.b.to_string()},
                                  {"color", v.color},
                                  {"distance", v.distance}});
        json doc = {
            {"command", "verify"},
            {"valid", result.valid},
            {"message", result.message},
            {"violations", violations},
        };
        std::cout << doc.dump(2) << "\n";
    } else if (format == Format::Csv) {
        std::cout << "valid,violations,message\n";
        std::cout << (result.valid ? "true" : "false") << "," << result.violations.size()
                  << ",\"" << result.message << "\"\n";
    } else {
        std::cout << (result.valid ? "PASS" : "FAIL") << ": " << result.message << "\n";
        for (const Violation& v : result.violations) std::cout << "  " << v.to_string() << "\n";
    }
    return result.valid ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// reproduce

struct Row {
    std::string family;
    int n = 0;
    std::string target = "total";
    std::string value;    // computed value or certified range
    std::string expected; // known value or range
    std::string status;   // ok | mismatch | timeout | error
    long long nodes = 0;
    double millis = 0.0;
};

int suite_threads(std::size_t task_count) {
    int cap = 0;
    if (const char* env = std::getenv("PACKEM_THREADS")) cap = std::atoi(env);
    if (cap < 1) {
        unsigned hw = std::thread::hardware_concurrency();
        cap = hw ? static_cast<int>(hw) : 1;
    }
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cap), task_count));
}

// Runs tasks concurrently (PACKEM_THREADS caps the worker count) but keeps
// results in task order so output is deterministic.
void run_tasks(std::vector<std::function<void()>>& tasks) {
    if (tasks.empty()) return;
    const int workers = suite_threads(tasks.size());
    if (workers <= 1) {
        for (auto& task : tasks) task();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                tasks[i]();
            }
        });
    for (auto& t : pool) t.join();
}

Row exact_row(const std::string& family, int n, const Graph& g, int expected,
              const Budget& budget) {
    Row row;
    row.family = family;
    row.n = n;
    row.expected = std::to_string(expected);
    const SolveReport report = chi_rho_total(g, budget);
    row.nodes = report.stats.nodes;
    row.millis = report.stats.millis;
    if (report.status == ReportStatus::Timeout) {
        row.value = std::to_string(report.lower_bound) + ".." + std::to_string(report.upper_bound);
        row.status = "timeout";
        return row;
    }
    row.value = std::to_string(report.value);
    row.status = report.value == expected ? "ok" : "mismatch";
    return row;
}

// Certifies value ∈ [lo, hi]: exhaustive infeasibility at lo-1 colors plus a
// validated construction with at most hi colors.
Row range_row(const std::string& family, int n, const Graph& g, int lo, int hi,
              const PackingColoring& construction, const Budget& budget) {
    Row row;
    row.family = family;
    row.n = n;
    row.expected = std::to_string(lo) + ".." + std::to_string(hi);

    const LabeledGraph t = total_graph(g);
    const DistanceMatrix d = all_pairs_distances(t.graph);
    const KResult refute = solve_k(t.graph, d, lo - 1, budget);
    row.nodes = refute.stats.nodes;
    row.millis = refute.stats.millis;
    if (refute.status == SolveStatus::Timeout) {
        row.value = "?.." + std::to_string(hi);
        row.status = "timeout";
        return row;
    }
    const bool lower_ok = refute.status == SolveStatus::Infeasible;

    bool upper_ok = construction.max_color() <= hi;
    if (upper_ok) {
        const DistanceMatrix dg = all_pairs_distances(g);
        upper_ok = validate_packing(g, dg, construction).empty();
    }
    row.value = (lower_ok ? std::to_string(lo) : "?") + ".." +
                (upper_ok ? std::to_string(hi) : "?");
    row.status = lower_ok && upper_ok ? "ok" : "mismatch";
    return row;
}

std::vector<Row> suite_stars(const Budget& budget) {
    std::vector<Row> rows(8);
    std::vector<std::function<void()>> tasks;
    for (int n = 1; n <= 8; ++n)
        tasks.emplace_back([n, &rows, &budget] {
            Row row = exact_row("star", n, generate_star(n), n + 2, budget);
            if (row.status == "ok") {
                const Graph g = generate_star(n);
                const DistanceMatrix d = all_pairs_distances(g);
                if (!validate_packing(g, d, color_star_total(n)).empty()) row.status = "mismatch";
            }
            rows[static_cast<std::size_t>(n - 1)] = std::move(row);
        });
    run_tasks(tasks);
    return rows;
}

std::vector<Row> suite_paths(const Budget& budget) {
    const std::vector<int> exact = {4, 5, 5, 6, 6, 7, 7}; // n = 3..9
    std::vector<Row> rows(12);
    std::vector<std::function<void()>> tasks;
    for (int n = 3; n <= 9; ++n)
        tasks.emplace_back([n, &rows, &exact, &budget] {
            rows[static_cast<std::size_t>(n - 3)] =
                exact_row("path", n, generate_path(n), exact[static_cast<std::size_t>(n - 3)],
                          budget);
        });
    for (int n = 10; n <= 14; ++n)
        tasks.emplace_back([n, &rows, &budget] {
            rows[static_cast<std::size_t>(n - 3)] =
                range_row("path", n, generate_path(n), 7, 8, color_path_total(n), budget);
        });
    run_tasks(tasks);
    return rows;
}

std::vector<Row> suite_cycles(int max_n, const Budget& budget) {
    const std::vector<int> exact = {5, 7, 7, 8, 9, 9, 9, 10, 9, 10}; // n = 3..12
    const int last = std::max(max_n, 12);
    std::vector<Row> rows(static_cast<std::size_t>(last - 2));
    std::vector<std::function<void()>> tasks;
    for (int n = 3; n <= 12; ++n)
        tasks.emplace_back([n, &rows, &exact, &budget] {
            rows[static_cast<std::size_t>(n - 3)] =
                exact_row("cycle", n, generate_cycle(n), exact[static_cast<std::size_t>(n - 3)],
                          budget);
        });
    for (int n = 13; n <= last; ++n)
        tasks.emplace_back([n, &rows, &budget] {
            rows[static_cast<std::size_t>(n - 3)] =
                range_row("cycle", n, generate_cycle(n), 7, 11, color_cycle_total(n), budget);
        });
    run_tasks(tasks);
    return rows;
}

std::vector<Row> suite_pattern() {
    std::vector<Row> rows;
    for (int n : {27, 54}) {
        Row row;
        row.family = "pattern";
        row.n = n;
        row.expected = "8";
        auto [coloring, conflicts] = pattern_on_cycle(n);
        const Graph g = generate_cycle(n);
        const DistanceMatrix d = all_pairs_distances(g);
        const bool valid =
            conflicts.empty() && validate_packing(g, d, coloring).empty() &&
            coloring.max_color() == 8;
        row.value = std::to_string(coloring.max_color());
        row.status = valid ? "ok" : "mismatch";
        rows.push_back(std::move(row));
    }
    return rows;
}

// The random-graph bound checks: four rows, each counting how many sampled
// instances satisfy the corresponding exact inequality.
std::vector<Row> suite_bounds(const Budget& budget) {
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<int> size_dist(1, 7);
    std::uniform_real_distribution<double> density(0.25, 0.85);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    auto random_connected = [&]() {
        for (;;) {
            const int n = size_dist(rng);
            const double p = density(rng);
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng) < p) edges.push_back(Edge{u, v});
            Graph g(n, edges);
            if (g.connected()) return g;
        }
    };

    constexpr int kGraphs = 200;
    constexpr int kPairs = 100;
    std::vector<Graph> graphs;
    graphs.reserve(kGraphs);
    for (int i = 0; i < kGraphs; ++i) graphs.push_back(random_connected());

    // Subgraph pairs: keep a random nonempty vertex subset, then a random
    // subset of the induced edges.
    std::vector<std::pair<Graph, Graph>> pairs;
    pairs.reserve(kPairs);
    for (int i = 0; i < kPairs; ++i) {
        const Graph g = random_connected();
        std::vector<int> kept;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (coin(rng) < 0.85) kept.push_back(v);
        if (kept.empty()) kept.push_back(0);
        const Graph induced = induced_subgraph(g, kept);
        std::vector<Edge> sub_edges;
        for (const Edge& e : induced.edges())
            if (coin(rng) < 0.75) sub_edges.push_back(e);
        pairs.emplace_back(g, Graph(induced.vertex_count(), sub_edges));
    }

    struct GraphOutcome {
        bool timeout = false;
        bool prop1 = false, prop2 = false, prop3 = false;
        long long nodes = 0;
        double millis = 0.0;
    };
    struct PairOutcome {
        bool timeout = false;
        bool mono = false;
        long long nodes = 0;
        double millis = 0.0;
    };
    std::vector<GraphOutcome> graph_outcomes(kGraphs);
    std::vector<PairOutcome> pair_outcomes(kPairs);

    std::vector<std::function<void()>> tasks;
    for (int i = 0; i < kGraphs; ++i)
        tasks.emplace_back([i, &graphs, &graph_outcomes, &budget] {
            const Graph& g = graphs[static_cast<std::size_t>(i)];
            GraphOutcome out;
            const SolveReport total = chi_rho_total(g, budget);
            const SolveReport base = chi_rho(g, budget);
            out.nodes = total.stats.nodes + base.stats.nodes;
            out.millis = total.stats.millis + base.stats.millis;
            if (total.status == ReportStatus::Timeout || base.status == ReportStatus::Timeout) {
                out.timeout = true;
            } else {
                out.prop1 = total.value >= base.value;
                out.prop2 = g.edge_count() == 0 ||
                            total.value >= degree_stats(g).max_degree + 2;
                out.prop3 = total.value <= upper_bound_total(g);
            }
            graph_outcomes[static_cast<std::size_t>(i)] = out;
        });
    for (int i = 0; i < kPairs; ++i)
        tasks.emplace_back([i, &pairs, &pair_outcomes, &budget] {
            const auto& [g, h] = pairs[static_cast<std::size_t>(i)];
            PairOutcome out;
            const SolveReport whole = chi_rho_total(g, budget);
            const SolveReport sub = chi_rho_total(h, budget);
            out.nodes = whole.stats.nodes + sub.stats.nodes;
            out.millis = whole.stats.millis + sub.stats.millis;
            if (whole.status == ReportStatus::Timeout || sub.status == ReportStatus::Timeout)
                out.timeout = true;
            else
                out.mono = sub.value <= whole.value;
            pair_outcomes[static_cast<std::size_t>(i)] = out;
        });
    run_tasks(tasks);

    auto fold = [](const std::string& name, int total, int passes, bool timed_out,
                   long long nodes, double millis) {
        Row row;
        row.family = name;
        row.n = total;
        row.value = std::to_string(passes) + "/" + std::to_string(total);
        row.expected = std::to_string(total) + "/" + std::to_string(total);
        row.status = timed_out ? "timeout" : (passes == total ? "ok" : "mismatch");
        row.nodes = nodes;
        row.millis = millis;
        return row;
    };

    int p1 = 0, p2 = 0, p3 = 0;
    bool timed_out = false;
    long long g_nodes = 0;
    double g_millis = 0.0;
    for (const GraphOutcome& out : graph_outcomes) {
        timed_out = timed_out || out.timeout;
        p1 += out.prop1 ? 1 : 0;
        p2 += out.prop2 ? 1 : 0;
        p3 += out.prop3 ? 1 : 0;
        g_nodes += out.nodes;
        g_millis += out.millis;
    }
    int mono = 0;
    bool pair_timeout = false;
    long long pair_nodes = 0;
    double pair_millis = 0.0;
    for (const PairOutcome& out : pair_outcomes) {
        pair_timeout = pair_timeout || out.timeout;
        mono += out.mono ? 1 : 0;
        pair_nodes += out.nodes;
        pair_millis += out.millis;
    }

    return {
        fold("lower-vs-chi", kGraphs, p1, timed_out, g_nodes, g_millis),
        fold("lower-delta-plus-2", kGraphs, p2, timed_out, 0, 0.0),
        fold("upper-alpha-nu", kGraphs, p3, timed_out, 0, 0.0),
        fold("subgraph-monotone", kPairs, mono, pair_timeout, pair_nodes, pair_millis),
    };
}

void print_rows(const std::vector<Row>& rows, const std::string& suite, Format format) {
    if (format == Format::Json) {
        json out = json::array();
        for (const Row& row : rows)
            out.push_back({{"family", row.family},
                           {"n", row.n},
                           {"target", row.target},
                           {"value_or_range", row.value},
                           {"expected", row.expected},
                           {"status", row.status},
                           {"nodes", row.nodes},
                           {"millis", ms(row.millis)}});
        bool ok = true;
        for (const Row& row : rows) ok = ok && row.status == "ok";
        json doc = {{"command", "reproduce"}, {"suite", suite}, {"ok", ok}, {"rows", out}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == Format::Csv) {
        std::cout << "family,n,target,value_or_range,expected,status,nodes,millis\n";
        for (const Row& row : rows)
            std::cout << row.family << "," << row.n << "," << row.target << "," << row.value
                      << "," << row.expected << "," << row.status << "," << row.nodes << ","
                      << ms(row.millis) << "\n";
    } else {
        std::cout << "suite: " << suite << "\n";
        for (const Row& row : rows) {
            std::ostringstream line;
            line << "  " << row.family << " n=" << row.n << " [" << row.target
                 << "]  value=" << row.value << "  expected=" << row.expected << "  "
                 << row.status << "  (nodes=" << row.nodes << ", millis=" << ms(row.millis)
                 << ")";
            std::cout << line.str() << "\n";
        }
    }
}

int cmd_reproduce(const std::string& suite, int max_n, const Budget& budget, Format format) {
    std::vector<Row> rows;
    if (suite == "stars")
        rows = suite_stars(budget);
    else if (suite == "paths")
        rows = suite_paths(budget);
    else if (suite == "cycles")
        rows = suite_cycles(max_n, budget);
    else if (suite == "pattern")
        rows = suite_pattern();
    else if (suite == "bounds")
        rows = suite_bounds(budget);
    else
        throw std::invalid_argument(
            "unknown suite '" + suite +
            "' (expected paths, cycles, stars, bounds, or pattern)");

    print_rows(rows, suite, format);
    bool any_timeout = false, all_ok = true;
    for (const Row& row : rows) {
        any_timeout = any_timeout || row.status == "timeout";
        all_ok = all_ok && row.status == "ok";
    }
    if (any_timeout) return kExitTimeout;
    return all_ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const std::string& family, const std::vector<int>& params,
            const std::string& out_path) {
    const Graph g = generate(family_from_name(family), params);
    const std::string text = g.to_edge_list();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << text;
        std::cout << g.vertex_count() << " " << g.edge_count() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact packing (total) coloring toolkit"};
    app.require_subcommand(1);

    // gen
    std::string gen_family;
    std::vector<int> gen_params;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "write a generator family as an edge list");
    gen->add_option("family", gen_family, "path | cycle | star | complete_bipartite | d12")
        ->required();
    gen->add_option("params", gen_params, "integer parameters (n, or m n)")
        ->required()
        ->expected(1, 2);
    gen->add_option("-o,--output", gen_out, "write the edge list to this file");

    // shared chi/bounds inputs
    std::string in_file, in_gen, format_name = "human", cert_path;
    std::string target_str = "total";
    Budget budget;

    CLI::App* chi = app.add_subcommand("chi", "exact packing chromatic number");
    chi->add_option("file", in_file, "edge-list file");
    chi->add_option("--gen", in_gen, "generator spec, e.g. \"cycle 7\"");
    chi->add_option("--target", target_str, "graph | line | total (default total)");
    chi->add_option("--budget-nodes", budget.node_limit, "search node limit");
    chi->add_option("--budget-secs", budget.time_limit_secs, "wall-clock limit in seconds");
    chi->add_option("--format", format_name, "human | json | csv");
    chi->add_option("--cert", cert_path, "write the witness certificate to this path");

    CLI::App* bounds = app.add_subcommand("bounds", "closed-form bounds report");
    bounds->add_option("file", in_file, "edge-list file");
    bounds->add_option("--gen", in_gen, "generator spec, e.g. \"cycle 7\"");
    bounds->add_option("--format", format_name, "human | json | csv");

    std::string verify_path;
    CLI::App* verify = app.add_subcommand("verify", "recheck a coloring certificate");
    verify->add_option("certificate", verify_path, "certificate JSON file");
    verify->add_option("--cert", cert_path, "certificate JSON file (alternative spelling)");
    verify->add_option("--format", format_name, "human | json | csv");

    std::string suite;
    int max_n = 16;
    CLI::App* reproduce = app.add_subcommand("reproduce", "run a reproduction suite");
    reproduce->add_option("suite", suite, "paths | cycles | stars | bounds | pattern")
        ->required();
    reproduce->add_option("--max-n", max_n, "largest cycle length for the cycles suite");
    reproduce->add_option("--budget-nodes", budget.node_limit, "search node limit per row");
    reproduce->add_option("--budget-secs", budget.time_limit_secs,
                          "wall-clock limit in seconds per row");
    reproduce->add_option("--format", format_name, "human | json | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        const Format format = parse_format(format_name);
        if (gen->parsed()) return cmd_gen(gen_family, gen_params, gen_out);
        if (chi->parsed()) {
            if (budget.node_limit < 1 || budget.time_limit_secs <= 0)
                throw std::invalid_argument("budget values must be positive");
            return cmd_chi(load_graph(in_file, in_gen), target_from_name(target_str), budget,
                           format, cert_path);
        }
        if (bounds->parsed()) return cmd_bounds(load_graph(in_file, in_gen), format);
        if (verify->parsed()) {
            if (verify_path.empty()) verify_path = cert_path;
            if (verify_path.empty())
                throw std::invalid_argument("verify needs a certificate path");
            return cmd_verify(verify_path, format);
        }
        if (reproduce->parsed()) {
            if (budget.node_limit < 1 || budget.time_limit_secs <= 0)
                throw std::invalid_argument("budget values must be positive");
            if (max_n < 3) throw std::invalid_argument("--max-n must be at least 3");
            return cmd_reproduce(suite, max_n, budget, format);
        }
        return kExitParse;
    } catch (const CertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
