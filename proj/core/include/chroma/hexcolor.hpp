#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chroma/geom.hpp"

namespace chroma::hex {

// Lattice steps between neighbouring tile centers.
Point2 step_east();        // (sqrt(3)/2, 0)
Point2 step_south_east();  // (sqrt(3)/4, -3/4)

struct TileIndex {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend auto operator<=>(const TileIndex&, const TileIndex&) = default;
};

Point2 tile_center(std::int64_t i, std::int64_t j);

// Regular hexagon with two vertical sides, centered at the origin, diameter 1.
const ConvexPolygon& base_tile();
ConvexPolygon tile(std::int64_t i, std::int64_t j);

// Tile owning p. Tiles are the Voronoi cells of the centers; a point on a
// shared boundary goes to the lexicographically smallest (i, j) among the
// equidistant centers, which makes the assignment a partition.
TileIndex point_to_tile(Point2 p);

/// (p,q)-coloring: tiles whose indices differ by an element of the sublattice
/// spanned by (p, q) and (p+q, -p) share a color.
class HexScheme {
public:
    HexScheme(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    int color_count() const { return static_cast<int>(p_ * p_ + p_ * q_ + q_ * q_); }

    // Plane translations k*v + l*v_bar between same-colored tiles.
    Point2 v() const;
    Point2 v_bar() const;

    // Coset representative inside the half-open fundamental parallelogram.
    TileIndex reduce(std::int64_t i, std::int64_t j) const;
    // Index of the coset in the lexicographically sorted representatives.
    int color_of_tile(std::int64_t i, std::int64_t j) const;
    std::span<const TileIndex> representatives() const { return representatives_; }

private:
    std::int64_t p_;
    std::int64_t q_;
    std::vector<TileIndex> representatives_;
};

// Distance between the base tile and its nearest distinct same-colored tile.
double same_color_min_distance(const HexScheme& scheme);

// Largest b for which the scheme colors G_[1,b] properly. Throws no_valid_b
// when the scheme has a single color or same-colored tiles come closer than 1.
double hex_b_max(const HexScheme& scheme);
double hex_b_max(int p, int q);

struct ParetoRow {
    double b = 0.0;
    int n = 0;
    int p = 0;
    int q = 0;
};

// Valid schemes with p <= p_max, p <= q <= q_max, reduced to the Pareto
// front (a row is dropped if another row reaches at least the same b with
// strictly fewer colors), ascending by b.
// `threads` = 0 picks the hardware concurrency.
std::vector<ParetoRow> pareto_schemes(int p_max, int q_max, unsigned threads = 1);
std::string pareto_csv(const std::vector<ParetoRow>& rows);

struct SchemeChoice {
    int p = 0;
    int q = 0;
    int n = 0;
    double b_max = 0.0;
};

/// Every valid scheme with 0 <= p, q <= search_max and its b_max.
class SchemeCatalog {
public:
    explicit SchemeCatalog(int search_max, unsigned threads = 1);

    // Fewest colors among schemes with b_max >= b (within 1e-9), ties to the
    // lexicographically smallest (p, q). Throws none_found.
    SchemeChoice best_for(double b) const;
    std::span<const SchemeChoice> entries() const { return entries_; }

private:
    std::vector<SchemeChoice> entries_;  // sorted by (p, q)
};

SchemeChoice best_scheme_for_b(double b, int search_max);

struct MinColorsPoint {
    double b = 0.0;
    int min_colors = 0;
};
std::string min_colors_csv(const std::vector<MinColorsPoint>& points);

enum class Family { exoo, lonc, gjssw };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

// exoo -> (r, r+1), lonc -> (r, r), gjssw -> (r, 0); r >= 1.
HexScheme named_family(Family family, int r);
// Largest b the family formula guarantees.
double family_bound(Family family, int r);
int family_color_count(Family family, int r);

// Monte Carlo search for a same-colored pair at distance in
// [1 + 1e-9, b - 1e-9]. Even samples take x uniform over one period cell and
// y = x + r*u with r uniform in [1, b]; odd samples pair boundary points of
// H_{0,0} and a nearby same-colored tile. True when none is found.
bool verify_scheme_sampled(const HexScheme& scheme, double b, std::uint64_t samples,
                           std::uint64_t seed);

// {"p":..,"q":..,"N":..,"b_max":..}; b_max is null for schemes with no valid b.
std::string scheme_descriptor_json(const HexScheme& scheme);

}  // namespace chroma::hex
