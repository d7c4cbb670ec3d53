#include "chroma/annulus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "chroma/error.hpp"
#include "chroma/format.hpp"
#include "chroma/geom.hpp"

namespace chroma::annulus {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

RadialScheme RadialScheme::make(int k, int s, double b) {
    if (k < 2) throw Error(ErrorCode::invalid_argument, "RadialScheme: k must be >= 2");
    if (s < 1 || s % k != 0) throw Error(ErrorCode::invalid_argument, "RadialScheme: k must divide s");
    if (s < 2 * k - 1) throw Error(ErrorCode::invalid_argument, "RadialScheme: s must be >= 2k - 1");
    if (!(b > 1.0)) throw Error(ErrorCode::invalid_argument, "RadialScheme: b must exceed 1");
    return RadialScheme{k, s, b};
}

double RadialScheme::alpha() const { return 2.0 * kPi / s; }

int radial_color(const RadialScheme& scheme, double angle) {
    double a = std::fmod(angle, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    int sector = static_cast<int>(std::floor(a / scheme.alpha()));
    sector = std::clamp(sector, 0, scheme.s - 1);
    return sector % scheme.k;
}

RadialConstraints radial_constraints(int k, int s, double b) {
    const RadialScheme scheme = RadialScheme::make(k, s, b);
    const double a = scheme.alpha();
    return {chord(b, a), mixed_chord(b, 1.0, a), chord(1.0, (k - 1) * a)};
}

std::string_view to_string(Binding binding) {
    switch (binding) {
        case Binding::outer_chord: return "outer_chord";
        case Binding::mixed_chord: return "mixed_chord";
        case Binding::inner_gap: return "inner_gap";
    }
    return "unknown";
}

RadialBound radial_max_b(int k, int s) {
    // Validate k, s with a placeholder b; b itself is the unknown here.
    const double a = RadialScheme::make(k, s, 2.0).alpha();
    // d1 = b * chord(1, a) <= 1
    const double by_outer = 1.0 / chord(1.0, a);
    // d2^2 = b^2 + 1 - 2b cos a <= 1  <=>  b <= 2 cos a
    const double by_mixed = 2.0 * std::cos(a);
    // gap >= b
    const double by_gap = chord(1.0, (k - 1) * a);

    RadialBound out{k, s, by_outer, Binding::outer_chord};
    if (by_mixed < out.b) out = {k, s, by_mixed, Binding::mixed_chord};
    if (by_gap < out.b) out = {k, s, by_gap, Binding::inner_gap};
    if (!(out.b > 1.0)) {
        throw Error(ErrorCode::no_valid_b, "radial_max_b: no b > 1 for k=" + std::to_string(k) +
                                               ", s=" + std::to_string(s));
    }
    return out;
}

RadialBound radial_best(int k, int s_max) {
    if (k < 2) throw Error(ErrorCode::invalid_argument, "radial_best: k must be >= 2");
    std::optional<RadialBound> best;
    for (int s = k; s <= s_max; s += k) {
        if (s < 2 * k - 1) continue;
        try {
            const RadialBound cand = radial_max_b(k, s);
            if (!best || cand.b > best->b) best = cand;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::no_valid_b) throw;
        }
    }
    if (!best) {
        throw Error(ErrorCode::no_valid_b,
                    "radial_best: no radial scheme with b > 1 for k=" + std::to_string(k));
    }
    return *best;
}

std::optional<RadialViolation> find_radial_violation(int k, int s, double b, std::uint64_t samples,
                                                     std::uint64_t seed) {
    const RadialScheme scheme = RadialScheme::make(k, s, b);
    const double a = scheme.alpha();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto sample = [&](int sector, double& angle, double& radius) {
        const double u = unit(rng);
        if (u < 0.25) {
            angle = sector * a;
        } else if (u < 0.5) {
            angle = (sector + 1) * a - 1e-12;
        } else {
            angle = (sector + unit(rng)) * a;
        }
        const double w = unit(rng);
        radius = w < 0.25 ? 1.0 : (w < 0.5 ? b : 1.0 + (b - 1.0) * unit(rng));
    };

    const int per_color = s / k;
    for (std::uint64_t t = 0; t < samples; ++t) {
        const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(s));
        const int j = (i + k * static_cast<int>(rng() % static_cast<std::uint64_t>(per_color))) % s;
        RadialViolation v{};
        sample(i, v.angle_a, v.radius_a);
        sample(j, v.angle_b, v.radius_b);
        if (radial_color(scheme, v.angle_a) != radial_color(scheme, v.angle_b)) continue;
        const Point2 p{v.radius_a * std::cos(v.angle_a), v.radius_a * std::sin(v.angle_a)};
        const Point2 q{v.radius_b * std::cos(v.angle_b), v.radius_b * std::sin(v.angle_b)};
        v.distance = dist(p, q);
        if (v.distance > 1.0 + kGeomTolerance && v.distance < b - kGeomTolerance) return v;
    }
    return std::nullopt;
}

const CaseInfo& case_info(int case_index) {
    static const std::array<CaseInfo, kCaseCount> cases{{
        {1, 2, 1300, 4, std::sqrt(2.0 - 2.0 * std::sin(18.0 * kPi / 325.0))},
        {2, 2, 190, 5, std::sqrt(2.0 + 2.0 * std::sin(kPi / 38.0))},
        {3, 3, 180, 6, std::sqrt(2.0 + 2.0 * std::sin(7.0 * kPi / 45.0))},
        {4, 3, 120, 7, 2.0 * std::sqrt(2.0) - 1.0},
        {5, 3, 120, 8, (5.0 - std::sqrt(2.0) + std::sqrt(6.0)) / 3.0},
    }};
    if (case_index < 1 || case_index > kCaseCount) {
        throw Error(ErrorCode::invalid_argument,
                    "case must be in 1..5, got " + std::to_string(case_index));
    }
    return cases[static_cast<std::size_t>(case_index - 1)];
}

PointConfig circle_config(int case_index, double b, double eps, std::optional<int> n_override) {
    const CaseInfo& info = case_info(case_index);
    if (!(b > 1.0)) throw Error(ErrorCode::invalid_argument, "circle_config: b must exceed 1");
    if (!(eps >= 0.0) || !(eps < (b - 1.0) / 2.0)) {
        throw Error(ErrorCode::invalid_argument, "circle_config: need 0 <= eps < (b - 1) / 2");
    }
    const int n = n_override.value_or(info.full_n);
    if (n < 1) throw Error(ErrorCode::invalid_argument, "circle_config: n must be >= 1");
    PointConfig config;
    config.circles.push_back({n, 1.0 + eps});
    if (info.circles == 3) config.circles.push_back({n, (1.0 + b) / 2.0});
    config.circles.push_back({n, b - eps});
    return config;
}

int lift_lower_bound(int annulus_colors) {
    if (annulus_colors < 1) {
        throw Error(ErrorCode::invalid_argument, "lift_lower_bound: annulus colors must be >= 1");
    }
    return annulus_colors + 3;
}

LowerBoundReport certify_lower_bound(int case_index, double b, double eps,
                                     std::optional<int> n_override, int k,
                                     const SolveOptions& options) {
    if (k < 2) throw Error(ErrorCode::invalid_argument, "certify_lower_bound: k must be >= 2");
    const PointConfig config = circle_config(case_index, b, eps, n_override);
    const DistanceGraph graph = build_graph(config, b, eps);

    LowerBoundReport report;
    report.case_index = case_index;
    report.b = b;
    report.eps = eps;
    report.n = config.circles.front().n;
    report.vertices = graph.vertex_count();
    report.edges = graph.edge_count();
    report.k = k;
    report.outcome = k_colorable(graph, k - 1, options);
    if (report.outcome.status == ColoringStatus::not_colorable) {
        report.plane_lower_bound = lift_lower_bound(k);
    }
    return report;
}

ThresholdResult threshold_bisect(int case_index, std::optional<int> n_override, int k,
                                 double b_lo, double b_hi, double tol,
                                 const ThresholdOptions& options) {
    case_info(case_index);
    if (k < 2) throw Error(ErrorCode::invalid_argument, "threshold_bisect: k must be >= 2");
    if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "threshold_bisect: tol must be > 0");
    if (!(b_lo > 1.0) || !(b_lo < b_hi)) {
        throw Error(ErrorCode::bracket_invalid, "threshold_bisect: need 1 < b_lo < b_hi");
    }
    if (options.eps_scales.empty()) {
        throw Error(ErrorCode::invalid_argument, "threshold_bisect: no eps scales");
    }

    ThresholdResult result;
    for (double scale : options.eps_scales) {
        auto needs_k = [&](double b) {
            const double eps = (b - 1.0) * scale;
            const DistanceGraph g = build_graph(circle_config(case_index, b, eps, n_override), b, eps);
            ++result.solver_calls;
            const ColoringOutcome out = k_colorable(g, k - 1, options.solve);
            if (out.status == ColoringStatus::budget_exhausted) {
                throw Error(ErrorCode::budget_exhausted,
                            "threshold_bisect: solver budget exhausted at b=" + format_real(b));
            }
            return out.status == ColoringStatus::not_colorable;
        };

        if (!needs_k(b_hi)) {
            throw Error(ErrorCode::bracket_invalid,
                        "threshold_bisect: configuration is (k-1)-colorable at b_hi");
        }
        if (needs_k(b_lo)) {
            throw Error(ErrorCode::bracket_invalid,
                        "threshold_bisect: configuration already needs k colors at b_lo");
        }
        double lo = b_lo;
        double hi = b_hi;
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            (needs_k(mid) ? hi : lo) = mid;
        }
        const double b_star = 0.5 * (lo + hi);
        if (!needs_k(b_star + tol) || (b_star - tol > 1.0 && needs_k(b_star - tol))) {
            throw Error(ErrorCode::non_monotone_detected,
                        "threshold_bisect: verdict flips around b*=" + format_real(b_star));
        }
        result.per_eps.push_back(b_star);
    }

    const auto [mn, mx] = std::minmax_element(result.per_eps.begin(), result.per_eps.end());
    if (*mx - *mn > std::max(1e-6, tol)) {
        throw Error(ErrorCode::eps_unstable, "threshold_bisect: thresholds differ across eps by " +
                                                 format_real(*mx - *mn));
    }
    result.b_star = result.per_eps[result.per_eps.size() / 2];
    return result;
}

namespace {

// (k, s) of the reference radial colorings, one per k = 3..8.
constexpr std::array<std::pair<int, int>, 6> kTableSchemes{{{3, 9}, {4, 12}, {5, 10}, {6, 12}, {7, 14}, {8, 16}}};

struct Breakpoint {
    double b;
    std::string source;
};

}  // namespace

std::vector<AnnulusBoundsRow> annulus_bounds_rows() {
    std::vector<std::pair<int, double>> upper_marks;  // (colors, largest b)
    std::vector<Breakpoint> points;
    for (auto [k, s] : kTableSchemes) {
        const double b = radial_max_b(k, s).b;
        upper_marks.emplace_back(k, b);
        points.push_back({b, "radial-" + std::to_string(k) + "-" + std::to_string(s)});
    }
    const double last = upper_marks.back().second;
    for (int c = 1; c <= kCaseCount; ++c) {
        const CaseInfo& info = case_info(c);
        if (info.threshold < last) points.push_back({info.threshold, "thm5-case-" + std::to_string(c)});
    }
    std::sort(points.begin(), points.end(), [](const Breakpoint& x, const Breakpoint& y) { return x.b < y.b; });

    std::vector<AnnulusBoundsRow> rows;
    double prev = 1.0;
    for (const Breakpoint& p : points) {
        AnnulusBoundsRow row;
        row.b_lo = prev;
        row.b_hi = p.b;
        row.lower = 3;
        for (int c = 1; c <= kCaseCount; ++c) {
            if (case_info(c).threshold < p.b) row.lower = case_info(c).annulus_colors;
        }
        row.upper = 0;
        for (auto [k, b] : upper_marks) {
            if (b >= p.b) {
                row.upper = k;
                break;
            }
        }
        row.source = p.source;
        rows.push_back(row);
        prev = p.b;
    }
    return rows;
}

AnnulusBoundsRow annulus_bounds(double b) {
    for (const AnnulusBoundsRow& row : annulus_bounds_rows()) {
        if (b > row.b_lo && b <= row.b_hi) return row;
    }
    throw Error(ErrorCode::out_of_table, "annulus-bounds: b=" + format_real(b) + " is outside (1, sqrt(2+sqrt(2))]");
}

std::string annulus_bounds_csv(const std::vector<AnnulusBoundsRow>& rows) {
    std::ostringstream out;
    out << "b_lo,b_hi,lower,upper,source\n";
    for (const AnnulusBoundsRow& r : rows) {
        out << format_real(r.b_lo) << ',' << format_real(r.b_hi) << ',' << r.lower << ',' << r.upper
            << ',' << r.source << '\n';
    }
    return out.str();
}

}  // namespace chroma::annulus
