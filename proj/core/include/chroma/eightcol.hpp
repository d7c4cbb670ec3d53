#pragma once

#include <array>
#include <string>
#include <vector>

namespace chroma::eight {

/// Shape parameters of the eight-color tiling: x sizes the small triangles
/// in the eighth color, y the enlarged hexagons; b is the interval end.
struct EightParams {
    double x = 0.0;
    double y = 0.0;
    double b = 0.0;
};

// Left-hand sides of the four restrictions, in order:
//   y*sqrt3 + x <= 1
//   2y*sqrt3 - x >= b
//   (2y - x/(2 sqrt3))^2 + (x/2)^2 <= 1
//   (3/2 y sqrt3)^2 + (y/2 + x/sqrt3)^2 >= b^2
std::array<double, 4> constraint_lhs(double x, double y);

// Signed slacks, non-negative when satisfied: 1 - c1, c2 - b, 1 - c3, c4 - b^2.
std::array<double, 4> slacks(const EightParams& params);

// All four restrictions hold up to 1e-12. Throws invalid_argument for
// negative or non-finite parameters.
bool feasible(const EightParams& params);

struct EightOptimum {
    double b = 0.0;
    double x = 0.0;
    double y = 0.0;
    std::vector<int> active_constraints;  // 1-based, |slack| <= 1e-9
    std::array<double, 4> slacks{};
    double grid_b = 0.0;  // best value on the coarse grid before refinement
};

/// Largest b admitting feasible (x, y).
///
/// A 1e-3 grid over (0,1)^2 locates the best region, then Newton's method
/// polishes each candidate active set ({1,3} with b from restriction 4, and
/// {1, 2=4}, {3, 2=4}); the best feasible refinement wins. Throws
/// tolerance_not_reached when no refinement converges to `tol`.
EightOptimum maximize_b(double tol);

std::string to_json(const EightOptimum& opt);

}  // namespace chroma::eight
