#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "reference_values.hpp"
#include "sclgap/error.hpp"
#include "sclgap/hyperbolic.hpp"

using namespace sclgap::hyperbolic;
namespace ref = sclgap::test::reference;

TEST(Isometry, RotationFixesCentreAndHasOrder) {
  Point const    z(0.3, 1.7);
  Isometry const r = Isometry::rotation(z, 2 * std::numbers::pi / 7);
  EXPECT_NEAR(std::abs(r.apply(z) - z), 0, 1e-12);
  EXPECT_NEAR(r.det(), 1, 1e-12);
  EXPECT_NEAR(power(r, 7).distance_to_identity(), 0, 1e-9);
  auto const cls = classify_isometry(r);
  ASSERT_TRUE(std::holds_alternative<Elliptic>(cls));
  EXPECT_NEAR(std::abs(fixed_point(r) - z), 0, 1e-9);
}

TEST(Isometry, ClassifiesByTrace) {
  EXPECT_TRUE(std::holds_alternative<Parabolic>(classify_isometry({1, 1, 0, 1})));
  auto const h = classify_isometry(Isometry::normalized(2, 0, 0, 0.5));
  ASSERT_TRUE(std::holds_alternative<Hyperbolic>(h));
  EXPECT_NEAR(std::get<Hyperbolic>(h).length, 2 * std::log(2.0), 1e-12);
  EXPECT_NEAR(hyperbolic_distance({0, 1}, {0, 4}), std::log(4.0), 1e-12);
}

TEST(Triangle, GeneratorsSatisfyTheRelations) {
  for (auto [p, q, r] : {std::array{2, 3, 7}, {2, 3, 8}, {3, 3, 4}, {2, 4, 5}}) {
    auto const t = von_dyck_generators(p, q, r);
    auto const& [A, B, C] = t.rotation_generators;
    EXPECT_NEAR(power(A, p).distance_to_identity(), 0, 1e-9);
    EXPECT_NEAR(power(B, q).distance_to_identity(), 0, 1e-9);
    EXPECT_NEAR(power(C, r).distance_to_identity(), 0, 1e-9);
    EXPECT_NEAR((A * B * C).distance_to_identity(), 0, 1e-9);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(std::abs(t.rotation_generators[i].apply(t.vertices[i]) - t.vertices[i]), 0, 1e-9);
    }
    // Side opposite C from the law of cosines for angles.
    double const a = std::numbers::pi / p, b = std::numbers::pi / q, c = std::numbers::pi / r;
    double const side = std::acosh((std::cos(c) + std::cos(a) * std::cos(b)) /
                                   (std::sin(a) * std::sin(b)));
    EXPECT_NEAR(hyperbolic_distance(t.vertices[0], t.vertices[1]), side, 1e-9);
  }
  EXPECT_THROW(von_dyck_generators(2, 3, 6), sclgap::DomainError);
}

TEST(Constants, MatchHighPrecisionValues) {
  EXPECT_NEAR(delta_bound(), ref::delta, 1e-12);
  EXPECT_NEAR(trace_lower_bound(), ref::trace_bound, 1e-12);
  auto const w = epsilon_window();
  EXPECT_NEAR(w.delta_over_8, ref::delta_over_8, 1e-12);
  EXPECT_NEAR(w.sinh_bound, ref::sinh_bound, 1e-12);
  EXPECT_EQ(w.eps_max, w.delta_over_8);
  EXPECT_EQ(w.binding, "8*eps < delta");
  EXPECT_NEAR(von_dyck_gap_constant(ref::delta_over_8), ref::C_at_eps_max, 1e-12);
  auto const opt = optimized_constant();
  EXPECT_NEAR(opt.C, ref::C_inside, 1e-12);
  EXPECT_TRUE(opt.sinh_feasible);
  EXPECT_THROW(von_dyck_gap_constant(0.2), sclgap::DomainError);
  EXPECT_THROW(von_dyck_gap_constant(0), sclgap::DomainError);
}

TEST(Constants, GapConstantIncreasesOnTheWindow) {
  double prev = 0;
  for (int i = 1; i <= 100; ++i) {
    double const c = von_dyck_gap_constant(ref::delta_over_8 * i / 100.0);
    EXPECT_GT(c, prev);
    prev = c;
  }
}

TEST(Constants, DisplacementRadius) {
  double const theta = 2 * std::numbers::pi / 7, t = 0.5;
  double const r     = elliptic_displacement_radius(theta, t);
  EXPECT_NEAR(std::sinh(t / 2), std::sinh(r) * std::sin(theta / 2), 1e-12);
  // Check geometrically: a point at distance r from the centre moves by t.
  Point const    centre(0, 1);
  Point const    z(0, std::exp(r));
  Isometry const rot = Isometry::rotation(centre, theta);
  EXPECT_NEAR(hyperbolic_distance(z, rot.apply(z)), t, 1e-9);
}

TEST(TraceGap, SampledAndEnumerated) {
  auto const r = verify_trace_gap(2, 3, 7, 2000, 12, 1);
  EXPECT_EQ(r.violations, 0);
  EXPECT_GT(r.hyperbolic, 0);
  EXPECT_NEAR(r.min_enumerated_trace, ref::trace_bound, 1e-6);
  EXPECT_GE(r.min_translation_length, ref::delta - 1e-9);
}

TEST(TraceGap, DeterministicInSeed) {
  auto const a = verify_trace_gap(2, 4, 5, 500, 10, 9, 4);
  auto const b = verify_trace_gap(2, 4, 5, 500, 10, 9, 4);
  EXPECT_EQ(a.hyperbolic, b.hyperbolic);
  EXPECT_EQ(a.min_sampled_trace, b.min_sampled_trace);
}
