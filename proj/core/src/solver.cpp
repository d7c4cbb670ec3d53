#include "chroma/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "chroma/error.hpp"

namespace chroma {

std::string_view to_string(ColoringStatus status) {
    switch (status) {
        case ColoringStatus::colorable: return "colorable";
        case ColoringStatus::not_colorable: return "not_colorable";
        case ColoringStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;
using Palette = std::uint64_t;

struct BudgetExhausted {};

Palette low_bits(int count) {
    return count >= 64 ? ~Palette{0} : (Palette{1} << count) - 1;
}

class DsaturSearch {
public:
    DsaturSearch(const Graph& graph, int k, const SolveOptions& options)
        : k_(k),
          options_(options),
          adj_(graph.adjacency()),
          palette_(graph.vertex_count, low_bits(k)),
          color_(graph.vertex_count, -1),
          uncolored_degree_(graph.vertex_count),
          position_(graph.vertex_count),
          reason_(graph.vertex_count * static_cast<std::size_t>(k), 0),
          words_(graph.vertex_count / 64 + 2),
          conflict_(graph.vertex_count + 2, std::vector<std::uint64_t>(words_)),
          start_(Clock::now()),
          last_heartbeat_(start_) {
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            uncolored_degree_[v] = static_cast<int>(adj_[v].size());
            position_[v] = static_cast<int>(v);
            uncolored_.push_back(static_cast<int>(v));
        }
        if (options_.time_budget) deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(*options_.time_budget);
    }

    ColoringOutcome run(const std::vector<int>& clique) {
        ColoringOutcome out;
        try {
            out.status = solve(clique) ? ColoringStatus::colorable : ColoringStatus::not_colorable;
        } catch (const BudgetExhausted&) {
            out.status = ColoringStatus::budget_exhausted;
        }
        if (out.status == ColoringStatus::colorable) out.assignment = color_;
        out.stats.search_nodes = nodes_;
        out.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        out.stats.seed_clique_size = clique.size();
        return out;
    }

private:
    bool solve(const std::vector<int>& clique) {
        if (static_cast<int>(clique.size()) > k_) return false;
        for (std::size_t i = 0; i < clique.size(); ++i) {
            const int v = clique[i];
            const int c = static_cast<int>(i);
            if (!(palette_[v] >> c & 1U)) return false;
            if (assign(v, c, 0) >= 0) return false;
        }
        used_ = static_cast<int>(clique.size());
        return search(1);
    }

    // Colors v with c at search depth `depth` and strikes c from uncolored
    // neighbours, remembering the depth as the reason. Returns a wiped-out
    // neighbour or -1.
    int assign(int v, int c, int depth) {
        color_[v] = c;
        remove_uncolored(v);
        int wiped = -1;
        const Palette bit = Palette{1} << c;
        for (int u : adj_[v]) {
            if (color_[u] >= 0) continue;
            --uncolored_degree_[u];
            if (palette_[u] & bit) {
                palette_[u] &= ~bit;
                reason_[static_cast<std::size_t>(u) * k_ + c] = depth;
                trail_.push_back(u);
                if (palette_[u] == 0 && wiped < 0) wiped = u;
            }
        }
        return wiped;
    }

    void unassign(int v, int c, std::size_t mark) {
        const Palette bit = Palette{1} << c;
        while (trail_.size() > mark) {
            palette_[trail_.back()] |= bit;
            trail_.pop_back();
        }
        for (int u : adj_[v]) {
            if (color_[u] < 0) ++uncolored_degree_[u];
        }
        restore_uncolored(v);
        color_[v] = -1;
    }

    void remove_uncolored(int v) {
        const int pos = position_[v];
        const int last = uncolored_.back();
        uncolored_[pos] = last;
        position_[last] = pos;
        uncolored_.pop_back();
        removed_positions_.push_back(pos);
    }

    void restore_uncolored(int v) {
        const int pos = removed_positions_.back();
        removed_positions_.pop_back();
        if (pos == static_cast<int>(uncolored_.size())) {
            uncolored_.push_back(v);
        } else {
            const int moved = uncolored_[pos];
            uncolored_.push_back(moved);
            position_[moved] = static_cast<int>(uncolored_.size()) - 1;
            uncolored_[pos] = v;
        }
        position_[v] = pos;
    }

    int select() const {
        int best = -1;
        int best_free = 0;
        int best_degree = -1;
        for (int v : uncolored_) {
            const int free = std::popcount(palette_[v]);
            const int deg = uncolored_degree_[v];
            if (best < 0 || free < best_free || (free == best_free && (deg > best_degree ||
                                                                      (deg == best_degree && v < best)))) {
                best = v;
                best_free = free;
                best_degree = deg;
            }
        }
        return best;
    }

    void tick() {
        ++nodes_;
        if ((nodes_ & 1023U) != 0) return;
        const auto now = Clock::now();
        if (deadline_ && now >= *deadline_) throw BudgetExhausted{};
        if (options_.on_progress && now - last_heartbeat_ >= options_.heartbeat_interval) {
            last_heartbeat_ = now;
            options_.on_progress({nodes_, std::chrono::duration<double>(now - start_).count()});
        }
    }

    void clear(std::vector<std::uint64_t>& set) { std::fill(set.begin(), set.end(), 0); }

    // Depth 0 marks the seeded clique, which never takes part in backjumping.
    static void add(std::vector<std::uint64_t>& set, int depth) {
        if (depth > 0) set[static_cast<std::size_t>(depth) / 64] |= std::uint64_t{1} << (depth % 64);
    }

    static bool contains(const std::vector<std::uint64_t>& set, int depth) {
        return set[static_cast<std::size_t>(depth) / 64] >> (depth % 64) & 1U;
    }

    void add_reasons(std::vector<std::uint64_t>& set, int u, Palette colors) {
        while (colors) {
            const int c = std::countr_zero(colors);
            colors &= colors - 1;
            add(set, reason_[static_cast<std::size_t>(u) * k_ + c]);
        }
    }

    // Forward checking with conflict-directed backjumping. On failure,
    // conflict_[depth] holds the shallower depths responsible, and a parent
    // missing from that set returns at once.
    bool search(int depth) {
        if (uncolored_.empty()) return true;
        tick();
        const int v = select();
        auto& conf = conflict_[static_cast<std::size_t>(depth)];
        clear(conf);
        // Colors >= used_ are interchangeable, so only the lowest one is tried;
        // every earlier vertex avoids them, so they share its conflict set.
        const Palette allowed = low_bits(std::min(used_ + 1, k_));
        add_reasons(conf, v, allowed & ~palette_[v]);
        Palette candidates = palette_[v] & allowed;
        while (candidates) {
            const int c = std::countr_zero(candidates);
            candidates &= candidates - 1;
            const std::size_t mark = trail_.size();
            const bool opened = c == used_;
            const int wiped = assign(v, c, depth);
            if (wiped >= 0) {
                add_reasons(conf, wiped, low_bits(k_));
            } else {
                if (opened) ++used_;
                if (search(depth + 1)) return true;
                if (opened) --used_;
                const auto& below = conflict_[static_cast<std::size_t>(depth) + 1];
                if (!contains(below, depth)) {
                    unassign(v, c, mark);
                    conf = below;
                    return false;
                }
                for (std::size_t w = 0; w < words_; ++w) conf[w] |= below[w];
            }
            unassign(v, c, mark);
        }
        conf[static_cast<std::size_t>(depth) / 64] &= ~(std::uint64_t{1} << (depth % 64));
        return false;
    }

    int k_;
    const SolveOptions& options_;
    std::vector<std::vector<int>> adj_;
    std::vector<Palette> palette_;
    std::vector<int> color_;
    std::vector<int> uncolored_degree_;
    std::vector<int> uncolored_;
    std::vector<int> position_;
    std::vector<int> removed_positions_;
    std::vector<int> trail_;
    std::vector<int> reason_;  // (vertex, color) -> depth that struck the color
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> conflict_;
    int used_ = 0;
    std::uint64_t nodes_ = 0;
    Clock::time_point start_;
    Clock::time_point last_heartbeat_;
    std::optional<Clock::time_point> deadline_;
};

}  // namespace

std::vector<int> greedy_clique(const Graph& graph, int restarts, std::uint64_t seed) {
    const std::size_t n = graph.vertex_count;
    if (n == 0) return {};
    const auto adj = graph.adjacency();
    std::vector<std::vector<char>> is_adj(n, std::vector<char>(n, 0));
    for (const Edge& e : graph.edges) {
        is_adj[e.u][e.v] = 1;
        is_adj[e.v][e.u] = 1;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return adj[a].size() > adj[b].size(); });

    std::mt19937_64 rng(seed);
    std::vector<int> best;
    for (int r = 0; r < std::max(1, restarts); ++r) {
        std::vector<int> trial = order;
        if (r > 0) {
            // Random start vertex, then the degree order with random tie jitter.
            std::vector<std::uint64_t> key(n);
            for (std::size_t v = 0; v < n; ++v) key[v] = rng();
            std::stable_sort(trial.begin(), trial.end(), [&](int a, int b) {
                if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
                return key[a] < key[b];
            });
            std::rotate(trial.begin(), trial.begin() + static_cast<std::ptrdiff_t>(rng() % n), trial.end());
        }
        std::vector<int> clique;
        for (int v : trial) {
            bool fits = true;
            for (int u : clique) {
                if (!is_adj[u][v]) {
                    fits = false;
                    break;
                }
            }
            if (fits) clique.push_back(v);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

ColoringOutcome k_colorable(const Graph& graph, int k, const SolveOptions& options) {
    if (k < 1) throw Error(ErrorCode::invalid_argument, "k_colorable: k must be >= 1");
    if (k > kMaxColors && static_cast<std::size_t>(k) < graph.vertex_count) {
        throw Error(ErrorCode::invalid_argument, "k_colorable: k above 64 is not supported");
    }
    if (static_cast<std::size_t>(k) >= graph.vertex_count) {
        ColoringOutcome out;
        out.status = ColoringStatus::colorable;
        out.assignment.resize(graph.vertex_count);
        std::iota(out.assignment.begin(), out.assignment.end(), 0);
        return out;
    }
    std::vector<int> clique;
    if (options.seed_clique) clique = greedy_clique(graph, options.clique_restarts, options.seed);
    DsaturSearch search(graph, k, options);
    return search.run(clique);
}

int chromatic_number(const Graph& graph, int lo, int hi, const SolveOptions& options) {
    if (lo < 1 || lo > hi) {
        throw Error(ErrorCode::invalid_argument, "chromatic_number: need 1 <= lo <= hi");
    }
    auto decide = [&](int k) {
        const ColoringOutcome out = k_colorable(graph, k, options);
        if (out.status == ColoringStatus::budget_exhausted) {
            throw Error(ErrorCode::budget_exhausted,
                        "chromatic_number: budget exhausted at k=" + std::to_string(k));
        }
        return out.colorable();
    };
    if (lo > 1 && decide(lo - 1)) {
        throw Error(ErrorCode::inconsistent_bounds,
                    "chromatic_number: graph is already (lo-1)-colorable");
    }
    for (int k = lo; k <= hi; ++k) {
        if (decide(k)) return k;
    }
    throw Error(ErrorCode::inconsistent_bounds, "chromatic_number: graph is not hi-colorable");
}

bool verify_coloring(const Graph& graph, const std::vector<int>& assignment) {
    if (assignment.size() != graph.vertex_count) return false;
    return std::none_of(graph.edges.begin(), graph.edges.end(),
                        [&](const Edge& e) { return assignment[e.u] == assignment[e.v]; });
}

std::string export_cnf(const Graph& graph, int k) {
    if (k < 1) throw Error(ErrorCode::invalid_argument, "export_cnf: k must be >= 1");
    const std::size_t n = graph.vertex_count;
    const auto var = [k](std::size_t vertex, int c) {
        return static_cast<long long>(vertex) * k + c + 1;
    };
    std::ostringstream out;
    out << "p cnf " << n * static_cast<std::size_t>(k) << ' '
        << n + graph.edges.size() * static_cast<std::size_t>(k) << '\n';
    for (std::size_t v = 0; v < n; ++v) {
        for (int c = 0; c < k; ++c) out << var(v, c) << ' ';
        out << "0\n";
    }
    for (const Edge& e : graph.edges) {
        for (int c = 0; c < k; ++c) {
            out << -var(static_cast<std::size_t>(e.u), c) << ' '
                << -var(static_cast<std::size_t>(e.v), c) << " 0\n";
        }
    }
    return out.str();
}

std::string export_lp(const Graph& graph, int k) {
    if (k < 1) throw Error(ErrorCode::invalid_argument, "export_lp: k must be >= 1");
    const std::size_t n = graph.vertex_count;
    const auto x = [](std::size_t vertex, int c) {
        return "x" + std::to_string(vertex + 1) + "_" + std::to_string(c + 1);
    };
    const auto y = [](int c) { return "y" + std::to_string(c + 1); };

    std::ostringstream out;
    out << "\\ coloring model: " << n << " vertices, " << graph.edges.size() << " edges, K = " << k
        << '\n';
    out << "Minimize\n obj:";
    for (int c = 0; c < k; ++c) out << (c ? " + " : " ") << c + 1 << ' ' << y(c);
    out << "\nSubject To\n";
    for (std::size_t v = 0; v < n; ++v) {
        out << " cover_" << v + 1 << ':';
        for (int c = 0; c < k; ++c) out << (c ? " + " : " ") << x(v, c);
        out << " >= 1\n";
    }
    // One row per ordered pair (i, j) in E, as in the model's index set.
    for (const Edge& e : graph.edges) {
        for (const auto& [i, j] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            for (int c = 0; c < k; ++c) {
                out << " conflict_" << i + 1 << '_' << j + 1 << '_' << c + 1 << ": "
                    << x(static_cast<std::size_t>(i), c) << " + "
                    << x(static_cast<std::size_t>(j), c) << " <= 1\n";
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (int c = 0; c < k; ++c) {
            out << " link_" << v + 1 << '_' << c + 1 << ": " << x(v, c) << " - " << y(c)
                << " <= 0\n";
        }
    }
    out << "Binary\n";
    for (std::size_t v = 0; v < n; ++v) {
        for (int c = 0; c < k; ++c) out << ' ' << x(v, c) << '\n';
    }
    for (int c = 0; c < k; ++c) out << ' ' << y(c) << '\n';
    out << "End\n";
    return out.str();
}

}  // namespace chroma
