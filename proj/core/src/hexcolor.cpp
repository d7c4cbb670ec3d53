#include "chroma/hexcolor.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "chroma/error.hpp"
#include "chroma/format.hpp"
#include "json.hpp"

namespace chroma::hex {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Runs fn(index) for index in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += threads) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

Point2 step_east() { return {kSqrt3 / 2.0, 0.0}; }
Point2 step_south_east() { return {kSqrt3 / 4.0, -0.75}; }

Point2 tile_center(std::int64_t i, std::int64_t j) {
    return static_cast<double>(i) * step_east() + static_cast<double>(j) * step_south_east();
}

const ConvexPolygon& base_tile() {
    static const ConvexPolygon tile = regular_polygon(6, 0.5, std::numbers::pi / 6.0);
    return tile;
}

ConvexPolygon tile(std::int64_t i, std::int64_t j) { return base_tile().translated(tile_center(i, j)); }

TileIndex point_to_tile(Point2 p) {
    const double jf = p.y / -0.75;
    const double i_f = (p.x - jf * kSqrt3 / 4.0) / (kSqrt3 / 2.0);
    const auto i0 = static_cast<std::int64_t>(std::llround(i_f));
    const auto j0 = static_cast<std::int64_t>(std::llround(jf));
    TileIndex best{i0, j0};
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::int64_t di = -2; di <= 2; ++di) {
        for (std::int64_t dj = -2; dj <= 2; ++dj) {
            const TileIndex cand{i0 + di, j0 + dj};
            const Point2 d = p - tile_center(cand.i, cand.j);
            const double d2 = dot(d, d);
            if (d2 < best_d2 || (d2 == best_d2 && cand < best)) {
                best = cand;
                best_d2 = d2;
            }
        }
    }
    return best;
}

HexScheme::HexScheme(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0 || (p == 0 && q == 0)) {
        throw Error(ErrorCode::invalid_argument, "HexScheme: need p, q >= 0, not both zero");
    }
    // Integer points of the half-open parallelogram spanned by (p, q) and
    // (p+q, -p); there are exactly N of them, one per coset.
    const std::int64_t n = color_count();
    for (std::int64_t i = 0; i <= 2 * p_ + q_; ++i) {
        for (std::int64_t j = -p_; j <= q_; ++j) {
            const std::int64_t a = p_ * i + (p_ + q_) * j;
            const std::int64_t c = q_ * i - p_ * j;
            if (a >= 0 && a < n && c >= 0 && c < n) representatives_.push_back({i, j});
        }
    }
    std::sort(representatives_.begin(), representatives_.end());
}

Point2 HexScheme::v() const {
    return static_cast<double>(p_) * step_east() + static_cast<double>(q_) * step_south_east();
}

Point2 HexScheme::v_bar() const {
    return static_cast<double>(p_ + q_) * step_east() - static_cast<double>(p_) * step_south_east();
}

TileIndex HexScheme::reduce(std::int64_t i, std::int64_t j) const {
    const std::int64_t n = color_count();
    // Coordinates of (i, j) in the sublattice basis, scaled by N.
    const std::int64_t fa = floor_div(p_ * i + (p_ + q_) * j, n);
    const std::int64_t fc = floor_div(q_ * i - p_ * j, n);
    return {i - fa * p_ - fc * (p_ + q_), j - fa * q_ + fc * p_};
}

int HexScheme::color_of_tile(std::int64_t i, std::int64_t j) const {
    const TileIndex r = reduce(i, j);
    const auto it = std::lower_bound(representatives_.begin(), representatives_.end(), r);
    return static_cast<int>(it - representatives_.begin());
}

double same_color_min_distance(const HexScheme& scheme) {
    const Point2 v = scheme.v();
    const Point2 w = scheme.v_bar();
    const double period = norm(v);
    const ConvexPolygon& base = base_tile();
    double best = std::numeric_limits<double>::infinity();
    // Over the ring max(|k|,|l|) = R every center lies at least
    // period * R * sqrt(3)/2 away, and tiles of diameter 1 are at least
    // (center distance - 1) apart.
    for (int ring = 1;; ++ring) {
        if (period * ring * kSqrt3 / 2.0 - 1.0 > best) break;
        for (int k = -ring; k <= ring; ++k) {
            for (int l = -ring; l <= ring; ++l) {
                if (std::max(std::abs(k), std::abs(l)) != ring) continue;
                const Point2 t = static_cast<double>(k) * v + static_cast<double>(l) * w;
                if (norm(t) - 1.0 > best) continue;
                best = std::min(best, polygon_min_distance(base, base.translated(t)));
            }
        }
    }
    return best;
}

double hex_b_max(const HexScheme& scheme) {
    if (scheme.color_count() < 2) {
        throw Error(ErrorCode::no_valid_b, "hex_b_max: a single color admits no b >= 1");
    }
    const double d = same_color_min_distance(scheme);
    if (d < 1.0) {
        throw Error(ErrorCode::no_valid_b, "hex_b_max: same-colored tiles are " + format_real(d) +
                                               " apart, closer than 1");
    }
    return d;
}

double hex_b_max(int p, int q) { return hex_b_max(HexScheme(p, q)); }

namespace {

struct Candidate {
    int p = 0;
    int q = 0;
    bool valid = false;
    double b = 0.0;
};

std::vector<Candidate> evaluate(std::vector<Candidate> cands, unsigned threads) {
    parallel_for(cands.size(), threads, [&](std::size_t idx) {
        Candidate& c = cands[idx];
        try {
            c.b = hex_b_max(c.p, c.q);
            c.valid = true;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::no_valid_b) throw;
        }
    });
    return cands;
}

}  // namespace

std::vector<ParetoRow> pareto_schemes(int p_max, int q_max, unsigned threads) {
    if (p_max < 0 || q_max < 0) throw Error(ErrorCode::invalid_argument, "pareto_schemes: bounds must be >= 0");
    std::vector<Candidate> cands;
    for (int p = 0; p <= p_max; ++p) {
        for (int q = p; q <= q_max; ++q) {
            if (p == 0 && q == 0) continue;
            cands.push_back({p, q});
        }
    }
    std::vector<ParetoRow> rows;
    for (const Candidate& c : evaluate(std::move(cands), threads)) {
        if (c.valid) rows.push_back({c.b, c.p * c.p + c.p * c.q + c.q * c.q, c.p, c.q});
    }
    // A row drops out only when another reaches at least its b with strictly
    // fewer colors; equal-N rows with smaller b survive.
    auto dominates = [](const ParetoRow& a, const ParetoRow& r) {
        return a.b >= r.b - kGeomTolerance && a.n < r.n;
    };
    std::vector<ParetoRow> front;
    for (const ParetoRow& r : rows) {
        if (std::none_of(rows.begin(), rows.end(), [&](const ParetoRow& a) { return dominates(a, r); })) {
            front.push_back(r);
        }
    }
    std::sort(front.begin(), front.end(), [](const ParetoRow& a, const ParetoRow& b) {
        if (a.b != b.b) return a.b < b.b;
        return std::tie(a.n, a.p, a.q) < std::tie(b.n, b.p, b.q);
    });
    return front;
}

std::string pareto_csv(const std::vector<ParetoRow>& rows) {
    std::ostringstream out;
    out << "b_exact_float,N,p,q\n";
    for (const ParetoRow& r : rows) {
        out << format_real(r.b) << ',' << r.n << ',' << r.p << ',' << r.q << '\n';
    }
    return out.str();
}

SchemeCatalog::SchemeCatalog(int search_max, unsigned threads) {
    if (search_max < 0) throw Error(ErrorCode::invalid_argument, "SchemeCatalog: search_max must be >= 0");
    std::vector<Candidate> cands;
    for (int p = 0; p <= search_max; ++p) {
        for (int q = 0; q <= search_max; ++q) {
            if (p == 0 && q == 0) continue;
            cands.push_back({p, q});
        }
    }
    for (const Candidate& c : evaluate(std::move(cands), threads)) {
        if (c.valid) entries_.push_back({c.p, c.q, c.p * c.p + c.p * c.q + c.q * c.q, c.b});
    }
}

SchemeChoice SchemeCatalog::best_for(double b) const {
    if (!(b > 1.0)) throw Error(ErrorCode::invalid_argument, "best_scheme_for_b: b must exceed 1");
    const SchemeChoice* best = nullptr;
    for (const SchemeChoice& e : entries_) {
        if (e.b_max < b - kGeomTolerance) continue;
        if (!best || e.n < best->n) best = &e;  // entries are in (p, q) order
    }
    if (!best) {
        throw Error(ErrorCode::none_found, "best_scheme_for_b: no scheme reaches b=" + format_real(b));
    }
    return *best;
}

SchemeChoice best_scheme_for_b(double b, int search_max) { return SchemeCatalog(search_max).best_for(b); }

std::string min_colors_csv(const std::vector<MinColorsPoint>& points) {
    std::ostringstream out;
    out << "b,min_colors\n";
    for (const MinColorsPoint& pt : points) out << format_real(pt.b) << ',' << pt.min_colors << '\n';
    return out.str();
}

Family parse_family(std::string_view name) {
    if (name == "exoo") return Family::exoo;
    if (name == "lonc") return Family::lonc;
    if (name == "gjssw") return Family::gjssw;
    throw Error(ErrorCode::invalid_argument, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
    switch (family) {
        case Family::exoo: return "exoo";
        case Family::lonc: return "lonc";
        case Family::gjssw: return "gjssw";
    }
    return "unknown";
}

HexScheme named_family(Family family, int r) {
    if (r < 1) throw Error(ErrorCode::invalid_argument, "named_family: r must be >= 1");
    switch (family) {
        case Family::exoo: return HexScheme(r, r + 1);
        case Family::lonc: return HexScheme(r, r);
        case Family::gjssw: return HexScheme(r, 0);
    }
    throw Error(ErrorCode::invalid_argument, "named_family: unknown family");
}

double family_bound(Family family, int r) {
    if (r < 1) throw Error(ErrorCode::invalid_argument, "family_bound: r must be >= 1");
    const double x = r;
    switch (family) {
        case Family::exoo: return 0.5 * std::sqrt(9.0 * x * x - 3.0 * x + 1.0);
        case Family::lonc: return 1.5 * x - 1.0;
        case Family::gjssw: return kSqrt3 / 2.0 * (x - 1.0);
    }
    return 0.0;
}

int family_color_count(Family family, int r) {
    if (r < 1) throw Error(ErrorCode::invalid_argument, "family_color_count: r must be >= 1");
    switch (family) {
        case Family::exoo: return 3 * r * r + 3 * r + 1;
        case Family::lonc: return 3 * r * r;
        case Family::gjssw: return r * r;
    }
    return 0;
}

bool verify_scheme_sampled(const HexScheme& scheme, double b, std::uint64_t samples,
                           std::uint64_t seed) {
    const Point2 v = scheme.v();
    const Point2 w = scheme.v_bar();
    const auto base = base_tile().vertices();
    // Same-colored tiles near H_{0,0} whose closure can reach within b.
    std::vector<TileIndex> partners;
    for (std::int64_t k = -2; k <= 2; ++k) {
        for (std::int64_t l = -2; l <= 2; ++l) {
            if (k == 0 && l == 0) continue;
            const TileIndex t{k * scheme.p() + l * (scheme.p() + scheme.q()), k * scheme.q() - l * scheme.p()};
            if (norm(tile_center(t.i, t.j)) <= b + 1.0) partners.push_back(t);
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> edge(0, base.size() - 1);
    // Random point on the base tile's boundary, nudged inside so it is owned
    // by that tile alone.
    auto boundary_point = [&] {
        const std::size_t e = edge(rng);
        const Point2 a = base[e], c = base[(e + 1) % base.size()];
        return (1.0 - 1e-7) * (a + unit(rng) * (c - a));
    };
    for (std::uint64_t s = 0; s < samples; ++s) {
        Point2 x, y;
        if (s % 2 == 1 && !partners.empty()) {
            // Boundary-to-boundary pairs hit the closest approach of two
            // same-colored tiles far more often than uniform pairs.
            std::uniform_int_distribution<std::size_t> pick(0, partners.size() - 1);
            const TileIndex t = partners[pick(rng)];
            x = boundary_point();
            y = tile_center(t.i, t.j) + boundary_point();
        } else {
            x = unit(rng) * v + unit(rng) * w;
            const double r = 1.0 + (b - 1.0) * unit(rng);
            const double phi = 2.0 * std::numbers::pi * unit(rng);
            y = x + Point2{r * std::cos(phi), r * std::sin(phi)};
        }
        const double d = dist(x, y);
        if (d < 1.0 + kGeomTolerance || d > b - kGeomTolerance) continue;
        const TileIndex tx = point_to_tile(x);
        const TileIndex ty = point_to_tile(y);
        if (scheme.color_of_tile(tx.i, tx.j) == scheme.color_of_tile(ty.i, ty.j)) return false;
    }
    return true;
}

std::string scheme_descriptor_json(const HexScheme& scheme) {
    nlohmann::ordered_json j;
    j["p"] = scheme.p();
    j["q"] = scheme.q();
    j["N"] = scheme.color_count();
    try {
        j["b_max"] = hex_b_max(scheme);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::no_valid_b) throw;
        j["b_max"] = nullptr;
    }
    return j.dump();
}

}  // namespace chroma::hex
