#include "chroma/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "chroma/annulus.hpp"
#include "chroma/distgraph.hpp"
#include "chroma/eightcol.hpp"
#include "chroma/error.hpp"
#include "chroma/format.hpp"
#include "chroma/hexcolor.hpp"
#include "chroma/solver.hpp"
#include "json.hpp"

namespace chroma::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
    std::string out_path;
    std::string format;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format,
                const std::vector<std::string>& formats) {
    c.format = default_format;
    cmd->add_option("--out", c.out_path, "Write the primary output to this file instead of stdout");
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::invalid_argument, "cannot open output file '" + c.out_path + "'");
    file << text;
    if (!file) throw Error(ErrorCode::invalid_argument, "failed writing '" + c.out_path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SolveOptions make_solve_options(const CLI::Option* budget_opt, double budget_seconds,
                                std::uint64_t seed, std::ostream& err) {
    SolveOptions opts;
    if (budget_opt->count() > 0) {
        if (!(budget_seconds > 0.0)) throw Error(ErrorCode::invalid_argument, "--budget must be > 0");
        opts.time_budget = std::chrono::duration<double>(budget_seconds);
    }
    opts.seed = seed;
    opts.on_progress = [&err](const SolverProgress& p) {
        err << "progress: nodes=" << p.search_nodes << " elapsed=" << format_real(p.elapsed_seconds)
            << "s\n";
        err.flush();
    };
    return opts;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::budget_exhausted:
            return kExitBudget;
        case ErrorCode::invalid_argument:
        case ErrorCode::no_valid_b:
        case ErrorCode::out_of_table:
        case ErrorCode::none_found:
        case ErrorCode::bracket_invalid:
        case ErrorCode::inconsistent_bounds:
            return kExitUsage;
        default:
            return kExitInternal;
    }
}

std::string lifted_claim(double b, int bound) {
    return "χ(G_[1," + format_real(b) + "]) ≥ " + std::to_string(bound);
}

std::string join(const std::vector<int>& values, char sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += sep;
        s += std::to_string(values[i]);
    }
    return s;
}

// -- annulus-upper ---------------------------------------------------------

std::string annulus_upper(const Common& c, std::optional<int> k, std::optional<int> s_max) {
    std::vector<int> ks;
    if (k) {
        ks.push_back(*k);
    } else {
        for (int i = 3; i <= 8; ++i) ks.push_back(i);
    }
    std::vector<annulus::RadialBound> rows;
    for (int kk : ks) rows.push_back(annulus::radial_best(kk, s_max.value_or(10 * kk)));

    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            arr.push_back({{"k", r.k}, {"s", r.s}, {"b_max", r.b}, {"binding", annulus::to_string(r.binding)}});
        }
        return dump(arr);
    }
    std::ostringstream out;
    out << "k,s,b_max,binding\n";
    for (const auto& r : rows) {
        out << r.k << ',' << r.s << ',' << format_real(r.b) << ',' << annulus::to_string(r.binding) << '\n';
    }
    return out.str();
}

// -- annulus-lower ---------------------------------------------------------

std::string annulus_lower_text(const Common& c, const annulus::LowerBoundReport& r) {
    const std::string claim = r.plane_lower_bound ? lifted_claim(r.b, *r.plane_lower_bound) : "";
    if (c.format == "json") {
        Json j;
        j["case"] = r.case_index;
        j["b"] = r.b;
        j["eps"] = r.eps;
        j["n"] = r.n;
        j["vertices"] = r.vertices;
        j["edges"] = r.edges;
        j["k"] = r.k;
        j["colors_tested"] = r.k - 1;
        j["status"] = to_string(r.outcome.status);
        j["search_nodes"] = r.outcome.stats.search_nodes;
        j["seed_clique"] = r.outcome.stats.seed_clique_size;
        j["plane_lower_bound"] = r.plane_lower_bound ? Json(*r.plane_lower_bound) : Json(nullptr);
        j["claim"] = claim;
        return dump(j);
    }
    std::ostringstream out;
    out << "case,b,eps,n,vertices,edges,k,colors_tested,status,search_nodes,seed_clique,claim\n";
    out << r.case_index << ',' << format_real(r.b) << ',' << format_real(r.eps) << ',' << r.n << ','
        << r.vertices << ',' << r.edges << ',' << r.k << ',' << (r.k - 1) << ','
        << to_string(r.outcome.status) << ',' << r.outcome.stats.search_nodes << ','
        << r.outcome.stats.seed_clique_size << ',' << claim << '\n';
    if (!claim.empty()) out << claim << '\n';
    return out.str();
}

// -- threshold -------------------------------------------------------------

std::string threshold_text(const Common& c, int case_index, int n, int k, double tol,
                           const std::vector<double>& scales, const annulus::ThresholdResult& r) {
    if (c.format == "json") {
        Json per = Json::array();
        for (std::size_t i = 0; i < scales.size(); ++i) {
            per.push_back({{"eps_scale", scales[i]}, {"b_star", r.per_eps[i]}});
        }
        Json j;
        j["case"] = case_index;
        j["n"] = n;
        j["k"] = k;
        j["tol"] = tol;
        j["b_star"] = r.b_star;
        j["per_eps"] = per;
        j["solver_calls"] = r.solver_calls;
        return dump(j);
    }
    std::ostringstream out;
    out << "case,n,k,tol,eps_scale,b_star\n";
    for (std::size_t i = 0; i < scales.size(); ++i) {
        out << case_index << ',' << n << ',' << k << ',' << format_real(tol) << ','
            << format_real(scales[i]) << ',' << format_real(r.per_eps[i]) << '\n';
    }
    out << case_index << ',' << n << ',' << k << ',' << format_real(tol) << ",median,"
        << format_real(r.b_star) << '\n';
    return out.str();
}

// -- hex-table / min-colors / scheme ---------------------------------------

std::string hex_table_text(const Common& c, const std::vector<hex::ParetoRow>& rows) {
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back({{"b", r.b}, {"N", r.n}, {"p", r.p}, {"q", r.q}});
        return dump(arr);
    }
    return hex::pareto_csv(rows);
}

std::vector<double> min_colors_grid(const std::vector<double>& single, const CLI::Option* min_opt,
                              double b_min, double b_max, double b_step) {
    if (!single.empty()) return single;
    if (min_opt->count() == 0) throw Error(ErrorCode::invalid_argument, "min-colors needs --b or --b-min/--b-max/--b-step");
    if (!(b_step > 0.0) || !(b_max >= b_min)) {
        throw Error(ErrorCode::invalid_argument, "min-colors needs b-step > 0 and b-max >= b-min");
    }
    std::vector<double> grid;
    const auto count = static_cast<long long>(std::floor((b_max - b_min) / b_step + 1e-9)) + 1;
    for (long long i = 0; i < count; ++i) {
        // Rounding keeps grid points free of accumulated drift.
        grid.push_back(std::round((b_min + static_cast<double>(i) * b_step) * 1e9) / 1e9);
    }
    return grid;
}

std::string min_colors_text(const Common& c, const std::vector<hex::MinColorsPoint>& pts) {
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& p : pts) arr.push_back({{"b", p.b}, {"min_colors", p.min_colors}});
        return dump(arr);
    }
    return hex::min_colors_csv(pts);
}

std::string scheme_text(const Common& c, const hex::HexScheme& scheme,
                        std::optional<hex::Family> family, int r) {
    Json j = Json::parse(hex::scheme_descriptor_json(scheme));
    if (family) {
        j["family"] = hex::to_string(*family);
        j["r"] = r;
        j["family_bound"] = hex::family_bound(*family, r);
    }
    if (c.format == "json") return dump(j);
    std::ostringstream out;
    out << "p,q,N,b_max" << (family ? ",family,r,family_bound" : "") << '\n';
    out << scheme.p() << ',' << scheme.q() << ',' << scheme.color_count() << ','
        << (j["b_max"].is_null() ? std::string() : format_real(j["b_max"].get<double>()));
    if (family) out << ',' << hex::to_string(*family) << ',' << r << ',' << format_real(hex::family_bound(*family, r));
    out << '\n';
    return out.str();
}

// -- eight-opt -------------------------------------------------------------

std::string eight_text(const Common& c, const eight::EightOptimum& opt) {
    if (c.format == "json") return eight::to_json(opt) + "\n";
    std::ostringstream out;
    out << "b,x,y,active_constraints,slack_1,slack_2,slack_3,slack_4\n";
    out << format_real(opt.b) << ',' << format_real(opt.x) << ',' << format_real(opt.y) << ','
        << join(opt.active_constraints, ';');
    for (double s : opt.slacks) out << ',' << format_real(s);
    out << '\n';
    return out.str();
}

// -- annulus-bounds --------------------------------------------------------

std::string annulus_bounds_text(const Common& c, const std::vector<annulus::AnnulusBoundsRow>& rows) {
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            arr.push_back({{"b_lo", r.b_lo}, {"b_hi", r.b_hi}, {"lower", r.lower}, {"upper", r.upper},
                           {"source", r.source}});
        }
        return dump(arr);
    }
    return annulus::annulus_bounds_csv(rows);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CHROMA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min<long>(v, hw));
    }
    return hw;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds on the chromatic number of planar distance graphs G_[1,b]", "chroma"};
    app.require_subcommand(1);
    const std::vector<std::string> tabular{"csv", "json"};

    // annulus-upper
    Common up_c;
    std::optional<int> up_k, up_smax;
    auto* up = app.add_subcommand("annulus-upper", "Best radial annulus coloring for k colors");
    add_common(up, up_c, "csv", tabular);
    up->add_option("--k", up_k, "Number of colors (default: 3..8)");
    up->add_option("--s-max", up_smax, "Largest sector count to try (default 10k)");

    // annulus-lower
    Common lo_c;
    int lo_case = 0;
    double lo_b = 0.0, lo_eps = 0.0, lo_budget = 0.0;
    std::optional<int> lo_n, lo_k;
    auto* lo = app.add_subcommand("annulus-lower", "Refute (k-1)-colorability of a circle configuration");
    add_common(lo, lo_c, "csv", tabular);
    lo->add_option("--case", lo_case, "Configuration case 1..5")->required()->check(CLI::Range(1, annulus::kCaseCount));
    lo->add_option("--b", lo_b, "Interval end b > 1")->required();
    auto* lo_eps_opt = lo->add_option("--eps", lo_eps, "Radius offset (default (b-1)*1e-6)");
    lo->add_option("--n", lo_n, "Points per circle (default: full configuration)");
    lo->add_option("--k", lo_k, "Annulus colors to certify (default: the case's value)");
    auto* lo_budget_opt = lo->add_option("--budget", lo_budget, "Solver time budget in seconds");

    // threshold
    Common th_c;
    int th_case = 0;
    std::optional<int> th_n, th_k;
    double th_lo = 0.0, th_hi = 0.0, th_tol = 1e-4, th_budget = 0.0;
    auto* th = app.add_subcommand("threshold", "Bisect the smallest b forcing k annulus colors");
    add_common(th, th_c, "csv", tabular);
    th->add_option("--case", th_case, "Configuration case 1..5")->required()->check(CLI::Range(1, annulus::kCaseCount));
    th->add_option("--n", th_n, "Points per circle (default: full configuration)");
    th->add_option("--k", th_k, "Annulus colors (default: the case's value)");
    th->add_option("--b-lo", th_lo, "Lower bracket end")->required();
    th->add_option("--b-hi", th_hi, "Upper bracket end")->required();
    th->add_option("--tol", th_tol, "Bisection tolerance")->capture_default_str();
    auto* th_budget_opt = th->add_option("--budget", th_budget, "Time budget per solver call in seconds");

    // hex-table
    Common ht_c;
    int ht_pmax = 10, ht_qmax = 10;
    auto* ht = app.add_subcommand("hex-table", "Pareto-optimal (p,q) hexagonal colorings");
    add_common(ht, ht_c, "csv", tabular);
    ht->add_option("--p-max", ht_pmax)->capture_default_str();
    ht->add_option("--q-max", ht_qmax)->capture_default_str();

    // min-colors
    Common mc_c;
    std::vector<double> mc_b;
    double mc_min = 0.0, mc_max = 0.0, mc_step = 0.1;
    int mc_search = 10;
    auto* mc = app.add_subcommand("min-colors", "Fewest colors of a (p,q) scheme valid for each b");
    add_common(mc, mc_c, "csv", tabular);
    mc->add_option("--b", mc_b, "Explicit b values");
    auto* mc_min_opt = mc->add_option("--b-min", mc_min, "Grid start");
    mc->add_option("--b-max", mc_max, "Grid end");
    mc->add_option("--b-step", mc_step, "Grid step")->capture_default_str();
    mc->add_option("--search-max", mc_search, "Largest p and q considered")->capture_default_str();

    // eight-opt
    Common e8_c;
    double e8_tol = 1e-6;
    auto* e8 = app.add_subcommand("eight-opt", "Maximize b for the eight-color tiling constraints");
    add_common(e8, e8_c, "json", tabular);
    e8->add_option("--tol", e8_tol)->capture_default_str();

    // export
    Common ex_c;
    std::optional<int> ex_case, ex_n, ex_k;
    double ex_b = 0.0, ex_eps = 0.0;
    std::string ex_config;
    auto* ex = app.add_subcommand("export", "Write a configuration graph as DIMACS, CNF, LP or JSON");
    add_common(ex, ex_c, "dimacs", {"dimacs", "cnf", "lp", "json"});
    ex->add_option("--config", ex_config, "Point configuration JSON file");
    ex->add_option("--case", ex_case, "Configuration case 1..5")->check(CLI::Range(1, annulus::kCaseCount));
    auto* ex_b_opt = ex->add_option("--b", ex_b, "Interval end b > 1");
    auto* ex_eps_opt = ex->add_option("--eps", ex_eps, "Radius offset (default (b-1)*1e-6)");
    ex->add_option("--n", ex_n, "Points per circle");
    ex->add_option("--k", ex_k, "Colors (cnf and lp)");

    // annulus-bounds
    Common ab_c;
    std::optional<double> ab_b;
    auto* ab = app.add_subcommand("annulus-bounds", "Known bounds for the annulus chromatic number");
    add_common(ab, ab_c, "csv", tabular);
    ab->add_option("--b", ab_b, "Look up the row containing b");

    // scheme
    Common sc_c;
    std::optional<int> sc_p, sc_q, sc_r;
    std::string sc_family;
    auto* sc = app.add_subcommand("scheme", "Describe a (p,q) hexagonal coloring");
    add_common(sc, sc_c, "json", tabular);
    sc->add_option("--p", sc_p);
    sc->add_option("--q", sc_q);
    sc->add_option("--family", sc_family, "Named family: exoo, lonc or gjssw");
    sc->add_option("--r", sc_r, "Family parameter");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << to_string(ErrorCode::invalid_argument) << ": " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*up) {
            emit(up_c, annulus_upper(up_c, up_k, up_smax), out);
        } else if (*lo) {
            const double eps = lo_eps_opt->count() ? lo_eps : default_eps(lo_b);
            const int k = lo_k.value_or(annulus::case_info(lo_case).annulus_colors);
            const auto report = annulus::certify_lower_bound(
                lo_case, lo_b, eps, lo_n, k, make_solve_options(lo_budget_opt, lo_budget, lo_c.seed, err));
            emit(lo_c, annulus_lower_text(lo_c, report), out);
            if (report.outcome.status == ColoringStatus::budget_exhausted) {
                err << "error: " << to_string(ErrorCode::budget_exhausted) << ": solver budget ran out after "
                    << report.outcome.stats.search_nodes << " nodes\n";
                return kExitBudget;
            }
        } else if (*th) {
            const int k = th_k.value_or(annulus::case_info(th_case).annulus_colors);
            annulus::ThresholdOptions opts;
            opts.solve = make_solve_options(th_budget_opt, th_budget, th_c.seed, err);
            const auto r = annulus::threshold_bisect(th_case, th_n, k, th_lo, th_hi, th_tol, opts);
            const int n = th_n.value_or(annulus::case_info(th_case).full_n);
            emit(th_c, threshold_text(th_c, th_case, n, k, th_tol, opts.eps_scales, r), out);
        } else if (*ht) {
            emit(ht_c, hex_table_text(ht_c, hex::pareto_schemes(ht_pmax, ht_qmax, thread_cap())), out);
        } else if (*mc) {
            const auto grid = min_colors_grid(mc_b, mc_min_opt, mc_min, mc_max, mc_step);
            const hex::SchemeCatalog catalog(mc_search, thread_cap());
            std::vector<hex::MinColorsPoint> pts;
            for (double b : grid) pts.push_back({b, catalog.best_for(b).n});
            emit(mc_c, min_colors_text(mc_c, pts), out);
        } else if (*e8) {
            if (!(e8_tol > 0.0)) throw Error(ErrorCode::invalid_argument, "--tol must be > 0");
            emit(e8_c, eight_text(e8_c, eight::maximize_b(e8_tol)), out);
        } else if (*ex) {
            PointConfigDocument doc;
            if (!ex_config.empty()) {
                doc = point_config_from_json(read_file(ex_config));
            } else {
                if (!ex_case || ex_b_opt->count() == 0) {
                    throw Error(ErrorCode::invalid_argument, "export needs --config or --case with --b");
                }
                doc.b = ex_b;
                doc.eps = ex_eps_opt->count() ? ex_eps : default_eps(ex_b);
                doc.config = annulus::circle_config(*ex_case, doc.b, doc.eps, ex_n);
            }
            if (ex_c.format == "json") {
                emit(ex_c, to_json(doc) + "\n", out);
            } else {
                const DistanceGraph g = build_graph(doc.config, doc.b, doc.eps);
                if (ex_c.format == "dimacs") {
                    emit(ex_c, export_dimacs(g.graph), out);
                } else {
                    if (!ex_k || *ex_k < 1) throw Error(ErrorCode::invalid_argument, "--k >= 1 is required for cnf and lp");
                    emit(ex_c, ex_c.format == "cnf" ? export_cnf(g.graph, *ex_k) : export_lp(g.graph, *ex_k), out);
                }
            }
        } else if (*ab) {
            const auto rows = ab_b ? std::vector{annulus::annulus_bounds(*ab_b)} : annulus::annulus_bounds_rows();
            emit(ab_c, annulus_bounds_text(ab_c, rows), out);
        } else if (*sc) {
            if (!sc_family.empty()) {
                if (!sc_r) throw Error(ErrorCode::invalid_argument, "--family needs --r");
                const hex::Family fam = hex::parse_family(sc_family);
                emit(sc_c, scheme_text(sc_c, hex::named_family(fam, *sc_r), fam, *sc_r), out);
            } else {
                if (!sc_p || !sc_q) throw Error(ErrorCode::invalid_argument, "scheme needs --p and --q, or --family and --r");
                emit(sc_c, scheme_text(sc_c, hex::HexScheme(*sc_p, *sc_q), std::nullopt, 0), out);
            }
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace chroma::cli
