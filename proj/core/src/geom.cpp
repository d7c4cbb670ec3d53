#include "chroma/geom.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "chroma/error.hpp"

namespace chroma {

double dist(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

double chord(double radius, double angle) {
    if (!(radius >= 0.0)) {
        throw Error(ErrorCode::invalid_argument, "chord: radius must be non-negative");
    }
    if (angle < -1e-12 || angle > std::numbers::pi + 1e-12) {
        throw Error(ErrorCode::invalid_argument, "chord: angle must lie in [0, pi]");
    }
    return 2.0 * radius * std::sin(0.5 * std::clamp(angle, 0.0, std::numbers::pi));
}

double mixed_chord(double r1, double r2, double angle) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "mixed_chord: radii must be positive");
    }
    // (r1 - r2)^2 + 4 r1 r2 sin^2(angle/2) avoids cancellation for small angles.
    const double half = std::sin(0.5 * angle);
    const double dr = r1 - r2;
    return std::sqrt(dr * dr + 4.0 * r1 * r2 * half * half);
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

namespace {

int orientation_sign(Point2 a, Point2 b, Point2 c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point2 p, Point2 a, Point2 b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int o1 = orientation_sign(a, b, c);
    const int o2 = orientation_sign(a, b, d);
    const int o3 = orientation_sign(c, d, a);
    const int o4 = orientation_sign(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

}  // namespace

double segment_distance(Point2 a, Point2 b, Point2 c, Point2 d) {
    if (segments_intersect(a, b, c, d)) return 0.0;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) {
        throw Error(ErrorCode::invalid_argument, "ConvexPolygon: need at least 3 vertices");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e1 = vertices_[(i + 1) % n] - vertices_[i];
        const Point2 e2 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
        // Sine of the turning angle must be positive (scale invariant).
        if (!(cross(e1, e2) > 1e-12 * norm(e1) * norm(e2))) {
            throw Error(ErrorCode::invalid_argument,
                        "ConvexPolygon: vertices must be strictly convex and counterclockwise");
        }
    }
    double winding = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e1 = vertices_[(i + 1) % n] - vertices_[i];
        const Point2 e2 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
        winding += std::atan2(cross(e1, e2), dot(e1, e2));
    }
    // A star polygon turns left everywhere but winds more than once.
    if (std::abs(winding - 2.0 * std::numbers::pi) > 1e-6) {
        throw Error(ErrorCode::invalid_argument, "ConvexPolygon: vertices wind more than once");
    }
}

Point2 ConvexPolygon::centroid() const {
    double area2 = 0.0;
    Point2 acc;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        const double w = cross(a, b);
        area2 += w;
        acc = acc + w * (a + b);
    }
    return (1.0 / (3.0 * area2)) * acc;
}

ConvexPolygon ConvexPolygon::translated(Point2 offset) const {
    std::vector<Point2> out;
    out.reserve(vertices_.size());
    for (Point2 v : vertices_) out.push_back(v + offset);
    return ConvexPolygon(std::move(out), true);
}

ConvexPolygon ConvexPolygon::scaled(double factor) const {
    if (!(factor > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "ConvexPolygon::scaled: factor must be positive");
    }
    std::vector<Point2> out;
    out.reserve(vertices_.size());
    for (Point2 v : vertices_) out.push_back(factor * v);
    return ConvexPolygon(std::move(out), true);
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        const Point2 e = b - a;
        // Signed distance of p to the edge line; negative means outside.
        if (cross(e, p - a) / norm(e) < -tol) return false;
    }
    return true;
}

ConvexPolygon regular_polygon(int sides, double circumradius, double first_vertex_angle,
                              Point2 center) {
    if (sides < 3 || !(circumradius > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "regular_polygon: need sides >= 3 and radius > 0");
    }
    std::vector<Point2> v;
    v.reserve(static_cast<std::size_t>(sides));
    for (int i = 0; i < sides; ++i) {
        const double t = first_vertex_angle + 2.0 * std::numbers::pi * i / sides;
        v.push_back(center + Point2{circumradius * std::cos(t), circumradius * std::sin(t)});
    }
    return ConvexPolygon(std::move(v));
}

double polygon_min_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
    const auto va = a.vertices();
    const auto vb = b.vertices();
    if (a.contains(vb[0]) || b.contains(va[0])) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < va.size(); ++i) {
        const Point2 p0 = va[i];
        const Point2 p1 = va[(i + 1) % va.size()];
        for (std::size_t j = 0; j < vb.size(); ++j) {
            best = std::min(best, segment_distance(p0, p1, vb[j], vb[(j + 1) % vb.size()]));
            if (best == 0.0) return 0.0;
        }
    }
    return best;
}

double polygon_diameter(const ConvexPolygon& a) {
    const auto v = a.vertices();
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, dist(v[i], v[j]));
    }
    return best;
}

}  // namespace chroma
