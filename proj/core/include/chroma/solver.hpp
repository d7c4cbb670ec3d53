#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chroma/distgraph.hpp"

namespace chroma {

// Largest k the bit-domain solver supports.
inline constexpr int kMaxColors = 64;

enum class ColoringStatus { colorable, not_colorable, budget_exhausted };

std::string_view to_string(ColoringStatus status);

struct SearchStats {
    std::uint64_t search_nodes = 0;
    double elapsed_seconds = 0.0;
    std::size_t seed_clique_size = 0;
};

struct ColoringOutcome {
    ColoringStatus status = ColoringStatus::budget_exhausted;
    std::vector<int> assignment;  // vertex -> color in [0, k); set iff colorable
    SearchStats stats;

    bool colorable() const { return status == ColoringStatus::colorable; }
};

struct SolverProgress {
    std::uint64_t search_nodes = 0;
    double elapsed_seconds = 0.0;
};

struct SolveOptions {
    // Unlimited when empty.
    std::optional<std::chrono::duration<double>> time_budget;
    // Seeds the clique restarts only; branching is deterministic.
    std::uint64_t seed = 0;
    bool seed_clique = true;
    int clique_restarts = 200;
    std::chrono::duration<double> heartbeat_interval = std::chrono::seconds(10);
    std::function<void(const SolverProgress&)> on_progress;
};

/// Decides whether `graph` admits a proper coloring with at most k colors.
///
/// Branch and bound over vertices in saturation-degree order. A greedy clique
/// is pre-colored with distinct colors, new colors are opened one at a time,
/// and a vertex whose remaining palette is empty prunes the branch. The
/// result is exact unless the time budget runs out, in which case status is
/// budget_exhausted; that status never stands for not_colorable.
ColoringOutcome k_colorable(const Graph& graph, int k, const SolveOptions& options = {});

inline ColoringOutcome k_colorable(const DistanceGraph& graph, int k,
                                   const SolveOptions& options = {}) {
    return k_colorable(graph.graph, k, options);
}

// Least k in [lo, hi] for which the graph is k-colorable. When lo > 1 the
// graph must not be (lo - 1)-colorable. Throws inconsistent_bounds when the
// bracket is wrong and budget_exhausted when a decision times out.
int chromatic_number(const Graph& graph, int lo, int hi, const SolveOptions& options = {});

bool verify_coloring(const Graph& graph, const std::vector<int>& assignment);

// Greedy clique: restart 0 scans vertices by decreasing degree, later
// restarts perturb the order with a generator seeded by `seed`.
std::vector<int> greedy_clique(const Graph& graph, int restarts, std::uint64_t seed);

// DIMACS CNF: variable (i-1)*k + c for vertex i, color c (both 1-based); one
// at-least-one clause per vertex, one binary clause per (edge, color).
std::string export_cnf(const Graph& graph, int k);

// CPLEX LP text of the coloring integer program with color-use variables.
// Conflict rows are emitted for both orientations of every edge.
std::string export_lp(const Graph& graph, int k);

}  // namespace chroma
