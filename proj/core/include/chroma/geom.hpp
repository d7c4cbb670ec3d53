#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace chroma {

// Absolute tolerance for comparing geometric quantities against thresholds.
inline constexpr double kGeomTolerance = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

double dist(Point2 p, Point2 q);

// Distance between two points on a circle of the given radius separated by
// central angle `angle` (law of cosines). Requires radius >= 0, angle in [0, pi].
double chord(double radius, double angle);

// Distance between a point at radius r1 and a point at radius r2 whose
// directions differ by `angle`.
double mixed_chord(double r1, double r2, double angle);

double point_segment_distance(Point2 p, Point2 a, Point2 b);
double segment_distance(Point2 a, Point2 b, Point2 c, Point2 d);

/// Strictly convex polygon with counterclockwise vertices.
///
/// Construction validates the invariants and throws Error(invalid_argument)
/// on fewer than three vertices, clockwise order or a reflex/flat corner.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point2> vertices);

    std::span<const Point2> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    Point2 centroid() const;
    ConvexPolygon translated(Point2 offset) const;
    ConvexPolygon scaled(double factor) const;

    // Closed containment test with absolute slack `tol`.
    bool contains(Point2 p, double tol = 0.0) const;

private:
    ConvexPolygon(std::vector<Point2> vertices, bool /*trusted*/) : vertices_(std::move(vertices)) {}

    std::vector<Point2> vertices_;
};

ConvexPolygon regular_polygon(int sides, double circumradius, double first_vertex_angle,
                              Point2 center = {});

// Zero when the closed polygons intersect, otherwise the smallest distance
// between their boundaries (all edge pairs are compared).
double polygon_min_distance(const ConvexPolygon& a, const ConvexPolygon& b);

double polygon_diameter(const ConvexPolygon& a);

}  // namespace chroma
