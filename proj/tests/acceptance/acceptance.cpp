// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Set CHROMA_ACCEPTANCE_STRETCH=1 to also attempt the full-size two-circle
// refutation with a 600 s budget.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iterator>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "chroma/annulus.hpp"
#include "chroma/cli/commands.hpp"
#include "chroma/distgraph.hpp"
#include "chroma/eightcol.hpp"
#include "chroma/error.hpp"
#include "chroma/hexcolor.hpp"
#include "chroma/solver.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "reference_hex_table.hpp"

namespace {

using namespace chroma;
using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::ostringstream notes;

    Check() { notes << std::setprecision(9); }

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void report(const char* id, const char* title, const std::function<void(Check&)>& body) {
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.notes << " [exception: " << e.what() << "]";
    }
    if (!c.ok) ++failures;
    std::cout << id << ' ' << (c.ok ? "PASS" : "FAIL") << "  " << title << c.notes.str() << std::endl;
}

// AC1 ---------------------------------------------------------------------

void ac1(Check& c) {
    struct Row {
        int k, s;
        double expected, tol;
    };
    const Row rows[] = {
        {3, 9, std::sqrt(2 - 2 * std::sin(kPi / 18)), 1e-6},
        {4, 12, std::sqrt(2.0), 1e-6},
        {6, 12, std::sqrt(3.0), 1e-6},
        {7, 14, 2 * std::cos(kPi / 7), 1e-6},
        {8, 16, std::sqrt(2 + std::sqrt(2.0)), 1e-6},
        {5, 10, 1.61803, 1e-5},
    };
    double worst_ms = 0.0;
    for (const Row& r : rows) {
        const auto t0 = Clock::now();
        const double b = annulus::radial_max_b(r.k, r.s).b;
        const double ms = seconds_since(t0) * 1e3;
        worst_ms = std::max(worst_ms, ms);
        c.require(std::abs(b - r.expected) <= r.tol,
                  "k=" + std::to_string(r.k) + " got " + std::to_string(b));
        c.require(ms < 1.0, "k=" + std::to_string(r.k) + " took " + std::to_string(ms) + " ms");
    }
    c.notes << " (slowest " << worst_ms << " ms; k=5 yields " << annulus::radial_max_b(5, 10).b
            << ", not the 0.618 of sqrt(3/2 - sqrt(5)/2))";
}

// AC2 ---------------------------------------------------------------------

void ac2(Check& c) {
    std::ostringstream args_out, err;
    const auto t0 = Clock::now();
    const int code = cli::run({"hex-table", "--p-max", "10", "--q-max", "10", "--format", "json"}, args_out, err);
    const double secs = seconds_since(t0);
    c.require(code == 0, "hex-table exit " + std::to_string(code) + ": " + err.str());
    const auto rows = nlohmann::json::parse(args_out.str());

    std::multiset<std::tuple<int, int, int>> got, want;
    std::map<std::tuple<int, int, int>, double> got_b;
    for (const auto& r : rows) {
        const auto key = std::tuple{r["N"].get<int>(), r["p"].get<int>(), r["q"].get<int>()};
        got.insert(key);
        got_b[key] = r["b"].get<double>();
    }
    const auto& reference = fixture::reference_hex_table();
    int closed_checked = 0, closed_bad = 0;
    for (const auto& r : reference) {
        const auto key = std::tuple{r.n, r.p, r.q};
        want.insert(key);
        if (auto it = got_b.find(key); it != got_b.end()) {
            ++closed_checked;
            if (std::abs(it->second - r.b) > 1e-6) ++closed_bad;
        }
    }
    c.require(closed_bad == 0, std::to_string(closed_bad) + " closed-form mismatches");
    c.require(closed_checked >= 15, "only " + std::to_string(closed_checked) + " closed forms comparable");
    c.require(secs < 60.0, "took " + std::to_string(secs) + " s");

    std::vector<std::tuple<int, int, int>> extra, missing;
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    auto show = [](const std::vector<std::tuple<int, int, int>>& v) {
        std::string s;
        for (auto [n, p, q] : v) s += " (N=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q) + ")";
        return s.empty() ? std::string(" none") : s;
    };
    c.require(extra.empty() && missing.empty(), "(N,p,q) multiset differs from the reference table");
    c.notes << " (" << rows.size() << " rows vs " << reference.size() << " reference; " << closed_checked
            << " closed forms within 1e-6; " << secs << " s; computed-only:" << show(extra)
            << "; reference-only:" << show(missing) << ")";
}

// AC3 ---------------------------------------------------------------------

void ac3(Check& c) {
    const auto t0 = Clock::now();
    int schemes = 0;
    for (int p = 0; p <= 10; ++p) {
        for (int q = p; q <= 10; ++q) {
            if (p == 0 && q == 0) continue;
            ++schemes;
            const hex::HexScheme s(p, q);
            const oracle::TriangularLattice lattice(p, q);
            std::map<oracle::CosetKey, int> classes;
            std::set<int> colors;
            const int w = 4 * (p + q);
            bool consistent = true;
            for (int i = -w; i <= w && consistent; ++i) {
                for (int j = -w; j <= w; ++j) {
                    const int col = s.color_of_tile(i, j);
                    auto [it, fresh] = classes.emplace(lattice.key(i, j), col);
                    if (it->second != col) consistent = false;
                    colors.insert(col);
                }
            }
            const int expected = p * p + p * q + q * q;
            c.require(consistent, "color not constant on a coset for (" + std::to_string(p) + "," + std::to_string(q) + ")");
            c.require(static_cast<int>(classes.size()) == expected && static_cast<int>(colors.size()) == expected,
                      "orbit count for (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    }
    const double secs = seconds_since(t0);
    c.require(secs < 10.0, "took " + std::to_string(secs) + " s");
    c.notes << " (" << schemes << " schemes, " << secs << " s)";
}

// AC4 ---------------------------------------------------------------------

void ac4(Check& c) {
    // hex_b_max is undefined (no_valid_b) when same-colored tiles come closer
    // than 1; there the same separation distance is compared with the bound.
    int compared = 0, by_separation = 0;
    for (int r = 1; r <= 6; ++r) {
        const std::array<std::tuple<int, int, double, const char*>, 3> checks{{
            {r, r + 1, std::sqrt(9.0 * r * r - 3.0 * r + 1.0) / 2, "exoo"},
            {r, r, 1.5 * r - 1, "lonc"},
            {r, 0, std::sqrt(3.0) * (r - 1) / 2, "gjssw"},
        }};
        for (const auto& [p, q, bound, name] : checks) {
            const hex::HexScheme s(p, q);
            double got = 0.0;
            if (s.color_count() >= 2 && hex::same_color_min_distance(s) >= 1.0) {
                got = hex::hex_b_max(s);
            } else {
                got = hex::same_color_min_distance(s);
                ++by_separation;
            }
            ++compared;
            c.require(got >= bound - 1e-9, std::string(name) + " r=" + std::to_string(r));
        }
    }
    c.notes << " (" << compared << " comparisons, " << by_separation
            << " below b=1 compared via same-color separation)";
}

// AC5 ---------------------------------------------------------------------

void ac5(Check& c) {
    std::ostringstream out, err;
    const auto t0 = Clock::now();
    const int code = cli::run({"eight-opt", "--tol", "1e-6"}, out, err);
    const double secs = seconds_since(t0);
    c.require(code == 0, "eight-opt exit " + std::to_string(code));
    const auto j = nlohmann::json::parse(out.str());
    const double b = j["b"], x = j["x"], y = j["y"];
    const auto lhs = eight::constraint_lhs(x, y);
    c.require(b >= 1.3744 && b <= 1.3755, "b out of [1.3744, 1.3755]");
    c.require(std::abs(lhs[0] - 1.0) <= 1e-4, "constraint 1 not tight");
    c.require(std::abs(lhs[2] - 1.0) <= 1e-4, "constraint 3 not tight");
    c.require(lhs[1] - b >= 0.29, "constraint 2 slack below 0.29");
    c.require(secs < 30.0, "took " + std::to_string(secs) + " s");
    c.notes << " (b=" << b << " x=" << x << " y=" << y << " slack2=" << lhs[1] - b << ", " << secs << " s)";
}

// AC6 ---------------------------------------------------------------------

void ac6(Check& c) {
    const Graph moser = graph_from_points(oracle::moser_spindle(), 1.0001).graph;
    const auto t0 = Clock::now();
    const auto three = k_colorable(moser, 3);
    const auto four = k_colorable(moser, 4);
    const double secs = seconds_since(t0);
    c.require(moser.edges.size() == 11, "spindle should have 11 edges");
    c.require(three.status == ColoringStatus::not_colorable, "spindle 3-colorable?");
    c.require(four.status == ColoringStatus::colorable && verify_coloring(moser, four.assignment),
              "spindle not 4-colorable");
    c.require(secs < 1.0, "spindle took " + std::to_string(secs) + " s");

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> n_dist(2, 12);
    std::bernoulli_distribution take(0.35);
    int disagreements = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = n_dist(rng);
        std::vector<int> jumps;
        for (int d = 1; d <= n / 2; ++d)
            if (take(rng)) jumps.push_back(d);
        const Graph g = oracle::circulant(n, jumps);
        for (int k : {2, 3, 4}) {
            if (k_colorable(g, k).colorable() != oracle::brute_colorable(g, k)) ++disagreements;
        }
    }
    c.require(disagreements == 0, std::to_string(disagreements) + " disagreements with brute force");
    c.notes << " (spindle " << secs * 1e3 << " ms; 600 circulant queries)";
}

// AC7 ---------------------------------------------------------------------

void ac7(Check& c) {
    const double b = 1.48;
    std::set<ColoringStatus> verdicts;
    std::ostringstream detail;
    for (double eps : stability_eps(b)) {
        for (std::uint64_t seed : {0ULL, 1ULL}) {
            SolveOptions opts;
            opts.seed = seed;
            opts.time_budget = std::chrono::seconds(120);
            const auto r = annulus::certify_lower_bound(2, b, eps, 95, 5, opts);
            verdicts.insert(r.outcome.status);
            c.require(r.outcome.status != ColoringStatus::budget_exhausted, "budget exhausted at desk scale");
            if (r.outcome.status == ColoringStatus::not_colorable) {
                c.require(r.plane_lower_bound == 8, "lifted bound is not 8");
            }
            if (r.outcome.status == ColoringStatus::colorable) {
                const auto g = build_graph(annulus::circle_config(2, b, eps, 95), b, eps);
                c.require(verify_coloring(g.graph, r.outcome.assignment), "certificate rejected");
            }
        }
    }
    c.require(verdicts.size() == 1, "verdict differs across eps or seed");
    c.notes << " (n=95, 4 colors: " << to_string(*verdicts.begin()) << " for all 3 eps x 2 seeds";
    if (*verdicts.begin() == ColoringStatus::not_colorable) c.notes << "; χ(G_[1,1.48]) ≥ 8";
    c.notes << ")";
}

void ac7_stretch() {
    if (std::getenv("CHROMA_ACCEPTANCE_STRETCH") == nullptr) {
        std::cout << "AC7-stretch SKIP  full-size two-circle refutation (set CHROMA_ACCEPTANCE_STRETCH=1)" << std::endl;
        return;
    }
    const double b = 1.48;
    SolveOptions opts;
    opts.time_budget = std::chrono::seconds(600);
    opts.on_progress = [](const SolverProgress& p) {
        std::cerr << "progress: nodes=" << p.search_nodes << " elapsed=" << p.elapsed_seconds << "s\n";
    };
    const auto r = annulus::certify_lower_bound(2, b, default_eps(b), std::nullopt, 5, opts);
    std::cout << "AC7-stretch " << (r.outcome.status == ColoringStatus::not_colorable ? "PASS" : "INFO")
              << "  full-size two-circle config (" << r.vertices << " vertices): " << to_string(r.outcome.status)
              << " after " << r.outcome.stats.search_nodes << " nodes, " << r.outcome.stats.elapsed_seconds << " s";
    if (r.plane_lower_bound) std::cout << "; χ(G_[1,1.48]) ≥ " << *r.plane_lower_bound;
    std::cout << std::endl;
}

// AC8 ---------------------------------------------------------------------

void ac8(Check& c) {
    for (int k = 1; k <= 10; ++k) c.require(annulus::lift_lower_bound(k) == k + 3, "k=" + std::to_string(k));
}

// AC9 ---------------------------------------------------------------------

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + CHROMA_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void ac9(Check& c) {
    const std::vector<std::string> commands{
        "annulus-upper",
        "annulus-upper --k 5 --format json",
        "annulus-lower --case 1 --n 65 --k 4 --b 1.35",
        "annulus-lower --case 2 --n 95 --k 5 --b 1.48 --seed 7 --format json",
        "threshold --case 1 --n 65 --k 4 --b-lo 1.25 --b-hi 1.35 --tol 1e-3",
        "hex-table --p-max 10 --q-max 10",
        "min-colors --b-min 1.3 --b-max 14 --b-step 0.1",
        "eight-opt --tol 1e-6",
        "export --case 2 --b 1.48 --n 95 --format dimacs",
        "export --case 2 --b 1.48 --n 95 --format cnf --k 4",
        "export --case 2 --b 1.48 --n 95 --format lp --k 4",
        "export --case 3 --b 1.72 --n 60 --format json",
        "annulus-bounds",
        "scheme --p 4 --q 7",
    };
    for (const auto& args : commands) {
        const auto a = run_cli(args), b = run_cli(args);
        c.require(a.first == 0 && b.first == 0, "'" + args + "' exit " + std::to_string(a.first));
        c.require(!a.second.empty() && a.second == b.second, "'" + args + "' output differs");
    }
    c.notes << " (" << commands.size() << " commands, each run twice)";
}

}  // namespace

int main() {
    std::cout << std::setprecision(9);
    report("AC1", "radial closed forms reproduce the reference annulus upper bounds", ac1);
    report("AC2", "hex-table 10,10 reproduces the reference (p,q) table", ac2);
    report("AC3", "color count p^2+pq+q^2 equals orbit enumeration for p<=q<=10", ac3);
    report("AC4", "named families meet their family bounds for r=1..6", ac4);
    report("AC5", "eight-color optimum b in [1.3744,1.3755] with constraints 1,3 tight", ac5);
    report("AC6", "solver: Moser spindle and brute-force agreement on 200 circulants", ac6);
    report("AC7", "desk-scale two-circle verdict stable across eps and seeds", ac7);
    ac7_stretch();
    report("AC8", "lift adds exactly three colors for k=1..10", ac8);
    report("AC9", "every CLI command is byte-identical across repeated runs", ac9);
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " acceptance criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
