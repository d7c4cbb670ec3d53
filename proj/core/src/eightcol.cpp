#include "chroma/eightcol.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "chroma/error.hpp"
#include "json.hpp"

namespace chroma::eight {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kFeasTol = 1e-12;

// b achieved at (x, y): restrictions 2 and 4 both bound b from above.
double achievable_b(double x, double y) {
    const auto c = constraint_lhs(x, y);
    return std::min(c[1], std::sqrt(c[3]));
}

bool shape_ok(double x, double y) {
    const auto c = constraint_lhs(x, y);
    return x > 0.0 && y > 0.0 && c[0] <= 1.0 + kFeasTol && c[2] <= 1.0 + kFeasTol;
}

using Residual = std::function<std::array<double, 2>(double, double)>;

struct NewtonResult {
    double x, y, residual;
};

std::optional<NewtonResult> newton(const Residual& f, double x, double y) {
    constexpr double h = 1e-7;
    for (int it = 0; it < 100; ++it) {
        const auto r = f(x, y);
        const double res = std::max(std::abs(r[0]), std::abs(r[1]));
        if (res < 1e-14) return NewtonResult{x, y, res};
        const auto rxp = f(x + h, y), rxm = f(x - h, y);
        const auto ryp = f(x, y + h), rym = f(x, y - h);
        const double a = (rxp[0] - rxm[0]) / (2 * h), bb = (ryp[0] - rym[0]) / (2 * h);
        const double c = (rxp[1] - rxm[1]) / (2 * h), d = (ryp[1] - rym[1]) / (2 * h);
        const double det = a * d - bb * c;
        if (!std::isfinite(det) || std::abs(det) < 1e-300) return std::nullopt;
        const double dx = (d * r[0] - bb * r[1]) / det;
        const double dy = (-c * r[0] + a * r[1]) / det;
        x -= dx;
        y -= dy;
        if (!std::isfinite(x) || !std::isfinite(y)) return std::nullopt;
        if (std::max(std::abs(dx), std::abs(dy)) < 1e-16) break;
    }
    const auto r = f(x, y);
    return NewtonResult{x, y, std::max(std::abs(r[0]), std::abs(r[1]))};
}

}  // namespace

std::array<double, 4> constraint_lhs(double x, double y) {
    const double c3a = 2.0 * y - x / (2.0 * kSqrt3);
    const double c4a = 1.5 * y * kSqrt3;
    const double c4b = y / 2.0 + x / kSqrt3;
    return {y * kSqrt3 + x, 2.0 * y * kSqrt3 - x, c3a * c3a + (x / 2.0) * (x / 2.0),
            c4a * c4a + c4b * c4b};
}

std::array<double, 4> slacks(const EightParams& params) {
    const auto c = constraint_lhs(params.x, params.y);
    return {1.0 - c[0], c[1] - params.b, 1.0 - c[2], c[3] - params.b * params.b};
}

bool feasible(const EightParams& params) {
    if (!std::isfinite(params.x) || !std::isfinite(params.y) || !std::isfinite(params.b) ||
        params.x < 0.0 || params.y < 0.0 || params.b < 0.0) {
        throw Error(ErrorCode::invalid_argument, "feasible: parameters must be finite and non-negative");
    }
    const auto s = slacks(params);
    return std::all_of(s.begin(), s.end(), [](double v) { return v >= -kFeasTol; });
}

EightOptimum maximize_b(double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "maximize_b: tol must be > 0");

    // Coarse scan; the grid maximum of min(c2, sqrt(c4)) is the limit a
    // bisection on b over the same grid converges to.
    constexpr int kSteps = 1000;
    double grid_b = -1.0, gx = 0.0, gy = 0.0;
    for (int i = 1; i < kSteps; ++i) {
        for (int j = 1; j < kSteps; ++j) {
            const double x = i / static_cast<double>(kSteps);
            const double y = j / static_cast<double>(kSteps);
            if (!shape_ok(x, y)) continue;
            const double b = achievable_b(x, y);
            if (b > grid_b) {
                grid_b = b;
                gx = x;
                gy = y;
            }
        }
    }
    if (grid_b <= 0.0) throw Error(ErrorCode::tolerance_not_reached, "maximize_b: empty feasible grid");

    const Residual r13 = [](double x, double y) {
        const auto c = constraint_lhs(x, y);
        return std::array<double, 2>{c[0] - 1.0, c[2] - 1.0};
    };
    const Residual r124 = [](double x, double y) {
        const auto c = constraint_lhs(x, y);
        return std::array<double, 2>{c[0] - 1.0, c[1] - std::sqrt(c[3])};
    };
    const Residual r324 = [](double x, double y) {
        const auto c = constraint_lhs(x, y);
        return std::array<double, 2>{c[2] - 1.0, c[1] - std::sqrt(c[3])};
    };

    std::optional<EightOptimum> best;
    for (const Residual* f : {&r13, &r124, &r324}) {
        const auto sol = newton(*f, gx, gy);
        if (!sol || sol->residual > tol || !shape_ok(sol->x, sol->y)) continue;
        const double b = achievable_b(sol->x, sol->y);
        if (!best || b > best->b) {
            best = EightOptimum{};
            best->b = b;
            best->x = sol->x;
            best->y = sol->y;
        }
    }
    if (!best || best->b < grid_b - tol) {
        throw Error(ErrorCode::tolerance_not_reached,
                    "maximize_b: Newton refinement did not reach the requested tolerance");
    }
    best->grid_b = grid_b;
    best->slacks = slacks({best->x, best->y, best->b});
    for (int i = 0; i < 4; ++i) {
        if (std::abs(best->slacks[static_cast<std::size_t>(i)]) <= 1e-9) best->active_constraints.push_back(i + 1);
    }
    return *best;
}

std::string to_json(const EightOptimum& opt) {
    nlohmann::ordered_json j;
    j["b"] = opt.b;
    j["x"] = opt.x;
    j["y"] = opt.y;
    j["active_constraints"] = opt.active_constraints;
    j["slacks"] = opt.slacks;
    return j.dump(2);
}

}  // namespace chroma::eight
