#include "chroma/distgraph.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "chroma/error.hpp"
#include "json.hpp"

namespace chroma {

void PointConfig::validate() const {
    if (circles.empty()) throw Error(ErrorCode::invalid_argument, "PointConfig: no circles");
    for (std::size_t i = 0; i < circles.size(); ++i) {
        const CircleSpec& c = circles[i];
        if (c.n < 1) throw Error(ErrorCode::invalid_argument, "PointConfig: circle with n < 1");
        if (!(c.r > 0.0)) throw Error(ErrorCode::invalid_argument, "PointConfig: radius must be > 0");
        for (std::size_t j = 0; j < i; ++j) {
            if (circles[j].r == c.r) {
                throw Error(ErrorCode::invalid_argument, "PointConfig: two circles share a radius");
            }
        }
    }
}

std::size_t PointConfig::point_count() const {
    std::size_t total = 0;
    for (const CircleSpec& c : circles) total += static_cast<std::size_t>(c.n);
    return total;
}

Graph Graph::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
    Graph g;
    g.vertex_count = vertex_count;
    g.edges.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u == e.v) continue;
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || static_cast<std::size_t>(e.v) >= vertex_count) {
            throw Error(ErrorCode::invalid_argument, "Graph: edge endpoint out of range");
        }
        g.edges.push_back(e);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

std::vector<Point2> circle_points(int n, double r, Point2 center) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "circle_points: n must be >= 1");
    if (!(r > 0.0)) throw Error(ErrorCode::invalid_argument, "circle_points: r must be > 0");
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / n;
        pts.push_back(center + Point2{r * std::sin(t), r * std::cos(t)});
    }
    return pts;
}

double default_eps(double b) { return (b - 1.0) * 1e-6; }

std::vector<double> stability_eps(double b) {
    return {(b - 1.0) * 1e-5, (b - 1.0) * 1e-6, (b - 1.0) * 1e-7};
}

namespace {

void check_interval(double b, double eps) {
    if (!(b > 1.0)) throw Error(ErrorCode::invalid_argument, "build_graph: b must exceed 1");
    if (!(eps >= 0.0) || !(eps < (b - 1.0) / 2.0)) {
        throw Error(ErrorCode::invalid_argument,
                    "build_graph: eps must satisfy 0 <= eps < (b - 1) / 2 (annulus empty)");
    }
}

}  // namespace

DistanceGraph graph_from_points(std::vector<Point2> points, double b, double eps) {
    check_interval(b, eps);
    const double lo = 1.0 - kEdgeTolerance;
    const double hi = b + kEdgeTolerance;
    std::vector<Edge> edges;
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = dist(points[i], points[j]);
            if (d >= lo && d <= hi) edges.push_back({i, j});
        }
    }
    DistanceGraph g;
    g.graph.vertex_count = points.size();
    g.graph.edges = std::move(edges);  // generated sorted and unique
    g.points = std::move(points);
    g.b = b;
    g.eps = eps;
    return g;
}

DistanceGraph build_graph(const PointConfig& config, double b, double eps) {
    config.validate();
    check_interval(b, eps);
    std::vector<Point2> pts;
    pts.reserve(config.point_count());
    for (const CircleSpec& c : config.circles) {
        auto ring = circle_points(c.n, c.r, config.center);
        pts.insert(pts.end(), ring.begin(), ring.end());
    }
    return graph_from_points(std::move(pts), b, eps);
}

std::string export_dimacs(const Graph& graph) {
    std::ostringstream out;
    out << "p edge " << graph.vertex_count << ' ' << graph.edges.size() << '\n';
    for (const Edge& e : graph.edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

std::string to_json(const PointConfigDocument& doc) {
    nlohmann::ordered_json j;
    j["circles"] = nlohmann::ordered_json::array();
    for (const CircleSpec& c : doc.config.circles) {
        j["circles"].push_back({{"n", c.n}, {"r", c.r}});
    }
    j["b"] = doc.b;
    j["eps"] = doc.eps;
    return j.dump();
}

PointConfigDocument point_config_from_json(std::string_view text) {
    PointConfigDocument doc;
    try {
        const auto j = nlohmann::json::parse(text);
        for (const auto& c : j.at("circles")) {
            doc.config.circles.push_back({c.at("n").get<int>(), c.at("r").get<double>()});
        }
        doc.b = j.at("b").get<double>();
        doc.eps = j.value("eps", default_eps(doc.b));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::invalid_argument, std::string("point config json: ") + e.what());
    }
    doc.config.validate();
    return doc;
}

}  // namespace chroma
