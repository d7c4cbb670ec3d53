#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chroma/annulus.hpp"
#include "chroma/error.hpp"

namespace chroma::annulus {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(RadialColor, Examples) {
    const auto s = RadialScheme::make(3, 9, 1.2);
    EXPECT_EQ(radial_color(s, 0.0), 0);
    EXPECT_EQ(radial_color(s, 2 * kPi / 9 + 1e-9), 1);
    EXPECT_EQ(radial_color(s, std::nextafter(2 * kPi, 0.0)), 2);
}

TEST(RadialColor, ConsecutiveSectorsDiffer) {
    const auto s = RadialScheme::make(4, 12, 1.3);
    for (int sector = 0; sector < 12; ++sector) {
        const double mid = (sector + 0.5) * s.alpha();
        EXPECT_NE(radial_color(s, mid), radial_color(s, mid + s.alpha()));
    }
}

TEST(RadialScheme, RejectsInvalid) {
    EXPECT_THROW(RadialScheme::make(3, 10, 1.2), Error);
    EXPECT_THROW(RadialScheme::make(1, 3, 1.2), Error);
    EXPECT_THROW(RadialScheme::make(3, 9, 1.0), Error);
    EXPECT_THROW(radial_constraints(3, 10, 1.2), Error);
}

TEST(RadialConstraints, Examples) {
    const double b3 = std::sqrt(2 - 2 * std::sin(kPi / 18));
    EXPECT_NEAR(radial_constraints(3, 9, b3).gap, b3, 1e-12);
    EXPECT_NEAR(radial_constraints(4, 12, std::sqrt(2.0)).gap, std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(radial_constraints(6, 12, std::sqrt(3.0)).d2, 1.0, 1e-12);
}

TEST(RadialMaxB, ClosedForms) {
    EXPECT_NEAR(radial_max_b(3, 9).b, std::sqrt(2 - 2 * std::sin(kPi / 18)), 1e-12);
    EXPECT_NEAR(radial_max_b(3, 9).b, 1.28558, 1e-5);
    EXPECT_NEAR(radial_max_b(4, 12).b, std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(radial_max_b(5, 10).b, 1.61803, 1e-5);
    EXPECT_NEAR(radial_max_b(6, 12).b, std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(radial_max_b(7, 14).b, 2 * std::cos(kPi / 7), 1e-12);
    EXPECT_NEAR(radial_max_b(8, 16).b, std::sqrt(2 + std::sqrt(2.0)), 1e-12);
}

TEST(RadialMaxB, BindingConstraints) {
    EXPECT_EQ(radial_max_b(3, 9).binding, Binding::inner_gap);
    EXPECT_EQ(radial_max_b(6, 12).binding, Binding::mixed_chord);
}

TEST(RadialBest, Examples) {
    EXPECT_GE(radial_best(5, 40).b, 1.61803);
    const auto seven = radial_best(7, 40);
    EXPECT_EQ(seven.s, 14);
    EXPECT_NEAR(seven.b, 2 * std::cos(kPi / 7), 1e-12);
    try {
        radial_best(2, 8);
        FAIL() << "expected no_valid_b";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::no_valid_b);
    }
}

// Largest b where the three sector constraints hold, found by bisection on
// the raw predicate rather than the closed forms.
double bisect_radial(int k, int s) {
    auto ok = [&](double b) {
        const auto c = radial_constraints(k, s, b);
        return c.d1 <= 1.0 && c.d2 <= 1.0 && c.gap >= b;
    };
    double lo = 1.0 + 1e-12, hi = 3.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

TEST(AnnulusProperty, ClosedFormsMatchNumericBisection) {
    for (auto [k, s] : {std::pair{3, 9}, {4, 12}, {5, 10}, {6, 12}, {7, 14}, {8, 16}, {5, 15}, {6, 18}}) {
        EXPECT_NEAR(radial_max_b(k, s).b, bisect_radial(k, s), 1e-9) << k << "," << s;
    }
}

TEST(AnnulusProperty, SampledSchemesValidBelowAndBrokenAbove) {
    for (auto [k, s] : {std::pair{3, 9}, {4, 12}, {5, 10}, {6, 12}, {7, 14}, {8, 16}}) {
        const double bmax = radial_max_b(k, s).b;
        EXPECT_FALSE(find_radial_violation(k, s, bmax - 1e-6, 200000, 41).has_value()) << k;
        EXPECT_TRUE(find_radial_violation(k, s, bmax + 1e-3, 200000, 41).has_value()) << k;
    }
}

TEST(CircleConfig, Examples) {
    const double eps = 1e-6;
    const auto c1 = circle_config(1, 1.29, eps);
    ASSERT_EQ(c1.circles.size(), 2u);
    EXPECT_EQ(c1.circles[0], (CircleSpec{1300, 1 + eps}));
    EXPECT_EQ(c1.circles[1], (CircleSpec{1300, 1.29 - eps}));

    const auto c3 = circle_config(3, 1.72, eps);
    ASSERT_EQ(c3.circles.size(), 3u);
    EXPECT_EQ(c3.circles[0].n, 180);
    EXPECT_NEAR(c3.circles[1].r, 1.36, 1e-15);
    EXPECT_NEAR(c3.circles[2].r, 1.72 - eps, 1e-15);

    const auto c4 = circle_config(4, 1.84, eps), c5 = circle_config(5, 1.84, eps);
    EXPECT_EQ(c4.circles, c5.circles);
}

TEST(CircleConfig, OverrideAndRange) {
    EXPECT_EQ(circle_config(2, 1.48, 1e-6, 95).circles[0].n, 95);
    EXPECT_THROW(circle_config(0, 1.48, 1e-6), Error);
    EXPECT_THROW(circle_config(6, 1.48, 1e-6), Error);
}

TEST(CaseInfo, Thresholds) {
    EXPECT_NEAR(case_info(1).threshold, std::sqrt(2 - 2 * std::sin(18 * kPi / 325)), 1e-15);
    EXPECT_NEAR(case_info(1).threshold, 1.28599, 1e-5);
    EXPECT_NEAR(case_info(2).threshold, 1.47145, 1e-5);
    EXPECT_NEAR(case_info(3).threshold, 1.71433, 1e-5);
    EXPECT_NEAR(case_info(4).threshold, 1.82843, 1e-5);
    EXPECT_NEAR(case_info(5).threshold, (5 - std::sqrt(2.0) + std::sqrt(6.0)) / 3, 1e-15);
}

TEST(Lift, Examples) {
    EXPECT_EQ(lift_lower_bound(4), 7);
    EXPECT_EQ(lift_lower_bound(8), 11);
    EXPECT_THROW(lift_lower_bound(0), Error);
}

TEST(CertifyLowerBound, CaseOneDeskScale) {
    const double b = 1.35;
    const auto r = certify_lower_bound(1, b, default_eps(b), 65, 4);
    EXPECT_EQ(r.vertices, 130u);
    EXPECT_EQ(r.outcome.status, ColoringStatus::not_colorable);
    ASSERT_TRUE(r.plane_lower_bound.has_value());
    EXPECT_EQ(*r.plane_lower_bound, 7);
}

TEST(CertifyLowerBound, BelowThresholdIsColorable) {
    const double b = 1.25;
    const auto r = certify_lower_bound(1, b, default_eps(b), 65, 4);
    EXPECT_EQ(r.outcome.status, ColoringStatus::colorable);
    EXPECT_FALSE(r.plane_lower_bound.has_value());
}

TEST(ThresholdBisect, CoarseCaseOneNotBelowFullThreshold) {
    const auto r = threshold_bisect(1, 65, 4, 1.25, 1.35, 1e-4);
    ASSERT_EQ(r.per_eps.size(), 3u);
    EXPECT_GE(r.b_star, case_info(1).threshold - 1e-4);
    for (double v : r.per_eps) EXPECT_NEAR(v, r.b_star, 1e-4);
    EXPECT_GT(r.solver_calls, 0);
}

TEST(ThresholdBisect, BracketMisuse) {
    try {
        threshold_bisect(1, 65, 4, 1.20, 1.25, 1e-4);
        FAIL() << "expected bracket_invalid";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::bracket_invalid);
    }
    EXPECT_THROW(threshold_bisect(1, 65, 4, 1.35, 1.25, 1e-4), Error);
    EXPECT_THROW(threshold_bisect(1, 65, 4, 1.25, 1.35, 0.0), Error);
}

TEST(AnnulusBounds, Lookup) {
    const auto a = annulus_bounds(1.40);
    EXPECT_EQ(a.lower, 4);
    EXPECT_EQ(a.upper, 4);
    const auto b = annulus_bounds(1.45);
    EXPECT_EQ(b.lower, 4);
    EXPECT_EQ(b.upper, 5);
    const auto c = annulus_bounds(1.83);
    EXPECT_EQ(c.lower, 7);
    EXPECT_EQ(c.upper, 8);
    EXPECT_THROW(annulus_bounds(1.9), Error);
    EXPECT_THROW(annulus_bounds(1.0), Error);
}

TEST(AnnulusBounds, RowsMatchReferenceApproximations) {
    const auto rows = annulus_bounds_rows();
    ASSERT_EQ(rows.size(), 10u);
    const double ends[] = {1.28558, 1.28599, 1.41421, 1.47145, 1.61803,
                           1.71433, 1.73205, 1.80194, 1.82843, 1.84776};
    const int lower[] = {3, 3, 4, 4, 5, 5, 6, 6, 6, 7};
    const int upper[] = {3, 4, 4, 5, 5, 6, 6, 7, 8, 8};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_NEAR(rows[i].b_hi, ends[i], 1e-5) << i;
        EXPECT_EQ(rows[i].lower, lower[i]) << i;
        EXPECT_EQ(rows[i].upper, upper[i]) << i;
        if (i > 0) EXPECT_DOUBLE_EQ(rows[i].b_lo, rows[i - 1].b_hi);
    }
    const auto csv = annulus_bounds_csv(rows);
    EXPECT_TRUE(csv.starts_with("b_lo,b_hi,lower,upper,source\n1,1.28557522,3,3,radial-3-9\n"));
}

TEST(AnnulusProperty, LiftStrictlyIncreasingByThree) {
    for (int k = 1; k <= 50; ++k) {
        EXPECT_EQ(lift_lower_bound(k), k + 3);
        if (k > 1) EXPECT_GT(lift_lower_bound(k), lift_lower_bound(k - 1));
    }
}

}  // namespace
}  // namespace chroma::annulus
