#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chroma/geom.hpp"

namespace chroma {

// Slack applied at both ends of the [1, b] edge interval to absorb float noise.
inline constexpr double kEdgeTolerance = 1e-12;

/// n points evenly spaced on a circle of radius r, the first on the upward
/// vertical half-line through the center.
struct CircleSpec {
    int n = 0;
    double r = 0.0;

    friend bool operator==(const CircleSpec&, const CircleSpec&) = default;
};

struct PointConfig {
    std::vector<CircleSpec> circles;
    Point2 center{};

    // Throws Error(invalid_argument) when empty, when a circle has n < 1 or
    // r <= 0, or when two circles share a radius.
    void validate() const;
    std::size_t point_count() const;
};

struct Edge {
    int u = 0;  // u < v
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph; edges are sorted, unique and loop-free.
struct Graph {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;

    // Normalizes orientation, drops loops and duplicates, sorts.
    static Graph from_edges(std::size_t vertex_count, std::vector<Edge> edges);
    std::vector<std::vector<int>> adjacency() const;
};

struct DistanceGraph {
    std::vector<Point2> points;
    Graph graph;
    double b = 0.0;
    double eps = 0.0;

    std::size_t vertex_count() const { return graph.vertex_count; }
    std::size_t edge_count() const { return graph.edges.size(); }
};

std::vector<Point2> circle_points(int n, double r, Point2 center = {});

// Default annulus shrink when the caller gives none: (b - 1) * 1e-6.
double default_eps(double b);

// The three shrink values every reported threshold must be stable across.
std::vector<double> stability_eps(double b);

// Edge iff distance in [1 - kEdgeTolerance, b + kEdgeTolerance].
// Requires b > 1 and 0 <= eps < (b - 1) / 2; radii are taken as given.
DistanceGraph build_graph(const PointConfig& config, double b, double eps);

// Same edge predicate on an arbitrary point list (test fixtures, spindles).
DistanceGraph graph_from_points(std::vector<Point2> points, double b, double eps = 0.0);

// "p edge N M" followed by one "e i j" line per edge, 1-indexed.
std::string export_dimacs(const Graph& graph);

/// PointConfig together with the interval end and annulus shrink it was
/// built for; serialized as {"circles":[{"n":..,"r":..}],"b":..,"eps":..}.
struct PointConfigDocument {
    PointConfig config;
    double b = 0.0;
    double eps = 0.0;
};

std::string to_json(const PointConfigDocument& doc);
PointConfigDocument point_config_from_json(std::string_view text);

}  // namespace chroma
