#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/distgraph.hpp"
#include "chroma/solver.hpp"

namespace chroma::annulus {

/// Angular coloring of the annulus 1 <= |p| <= b: s equal sectors of width
/// 2*pi/s, colored cyclically with k colors. Sector j is the half-open
/// angle range [j*alpha, (j+1)*alpha).
struct RadialScheme {
    int k = 0;
    int s = 0;
    double b = 0.0;

    // Throws invalid_argument unless k >= 2, k | s, s >= 2k - 1 and b > 1.
    static RadialScheme make(int k, int s, double b);
    double alpha() const;
};

// Color of direction `angle` (radians, normalized into [0, 2pi) first).
int radial_color(const RadialScheme& scheme, double angle);

struct RadialConstraints {
    double d1 = 0.0;   // outer-outer chord across one sector
    double d2 = 0.0;   // outer-inner chord across one sector
    double gap = 0.0;  // inner chord between nearest same-colored sectors
};

RadialConstraints radial_constraints(int k, int s, double b);

enum class Binding { outer_chord, mixed_chord, inner_gap };
std::string_view to_string(Binding binding);

struct RadialBound {
    int k = 0;
    int s = 0;
    double b = 0.0;
    Binding binding = Binding::inner_gap;
};

// Largest b for which the scheme is proper: min(1/chord(1,a), 2cos(a),
// chord(1,(k-1)a)). Throws no_valid_b when that is <= 1.
RadialBound radial_max_b(int k, int s);

// Best s among multiples of k up to s_max (ties to smaller s).
// Throws no_valid_b when no s gives b > 1.
RadialBound radial_best(int k, int s_max);

// Randomized search for a same-colored pair at distance in
// (1 + 1e-9, b - 1e-9). Half the sampled points sit on sector edges and
// boundary circles, where the extremal pairs live.
struct RadialViolation {
    double angle_a, radius_a, angle_b, radius_b, distance;
};
std::optional<RadialViolation> find_radial_violation(int k, int s, double b,
                                                     std::uint64_t samples, std::uint64_t seed);

// --- lower-bound configurations ------------------------------------------

inline constexpr int kCaseCount = 5;

struct CaseInfo {
    int index;             // 1..5
    int circles;           // 2 or 3
    int full_n;            // points per circle in the full-size configuration
    int annulus_colors;    // colors the configuration forces on the annulus
    double threshold;      // configuration works for every b above this
};

const CaseInfo& case_info(int case_index);

// Circles at radii 1+eps, [(1+b)/2,] b-eps with n points each
// (n = n_override when given). Throws invalid_argument for a bad case.
PointConfig circle_config(int case_index, double b, double eps,
                          std::optional<int> n_override = std::nullopt);

// A k-color lower bound on the annulus yields k + 3 on the whole plane.
int lift_lower_bound(int annulus_colors);

struct LowerBoundReport {
    int case_index = 0;
    double b = 0.0;
    double eps = 0.0;
    int n = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    int k = 0;  // annulus colors to certify; the solver decides (k-1)-colorability
    ColoringOutcome outcome;
    // Set when the configuration is not (k-1)-colorable.
    std::optional<int> plane_lower_bound;
};

LowerBoundReport certify_lower_bound(int case_index, double b, double eps,
                                     std::optional<int> n_override, int k,
                                     const SolveOptions& options = {});

struct ThresholdOptions {
    // Multipliers m giving eps = (b - 1) * m; all runs must agree.
    std::vector<double> eps_scales{1e-5, 1e-6, 1e-7};
    SolveOptions solve;
};

struct ThresholdResult {
    double b_star = 0.0;
    std::vector<double> per_eps;  // b* for each eps scale, same order
    int solver_calls = 0;
};

/// Smallest b (to within tol) from which the configuration needs k colors.
///
/// Both bracket ends are checked first (bracket_invalid otherwise); the
/// answer is re-verified at b* - tol and b* + tol since the outer circle
/// moves with b (non_monotone_detected on failure). Runs once per eps scale
/// and throws eps_unstable if the answers differ by more than max(1e-6, tol).
ThresholdResult threshold_bisect(int case_index, std::optional<int> n_override, int k,
                                 double b_lo, double b_hi, double tol,
                                 const ThresholdOptions& options = {});

// --- bounds table for the annulus ------------------------------------------

struct AnnulusBoundsRow {
    double b_lo = 0.0;  // open end
    double b_hi = 0.0;  // closed end
    int lower = 0;
    int upper = 0;
    std::string source;  // what fixes b_hi: "thm5-case-i" or "radial-k-s"
};

// All rows for 1 < b <= sqrt(2 + sqrt(2)), ascending.
std::vector<AnnulusBoundsRow> annulus_bounds_rows();

// Row containing b; throws out_of_table beyond the last row or for b <= 1.
AnnulusBoundsRow annulus_bounds(double b);

std::string annulus_bounds_csv(const std::vector<AnnulusBoundsRow>& rows);

}  // namespace chroma::annulus
