#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "eventdecor/errors.hpp"
#include "eventdecor/spacetime.hpp"
#include "null_ray_rk4.hpp"
#include "random_geometry.hpp"

namespace eventdecor {
namespace {

ExperimentGeometry satellite(double h, const BodySpec& body = BodySpec::earth()) {
  GroundSatelliteLayout l;
  l.satellite_height = h;
  return l.build(body);
}

TEST(Tortoise, FrozenValue) {
  EXPECT_NEAR(tortoise_phase(6.38e6, BodySpec::earth_rounded()), 6380000.137884372, 1e-8);
}

TEST(Tortoise, InverseRoundTrip) {
  testing::LayoutGenerator gen(7);
  for (double m : {0.0, 4.4e-3, 1.0, 1e3}) {
    const BodySpec body{GeometricLength{m}, GeometricLength{1e7}};
    for (int i = 0; i < 200; ++i) {
      const double r = 2.0 * m * (1.0 + 1e-6) + gen.uniform(1e-3, 1e8);
      const double back = inverse_tortoise(tortoise_phase(r, body), body);
      EXPECT_NEAR(back, r, 1e-15 * r + 1e-12) << "m=" << m;
    }
  }
}

TEST(Tortoise, RejectsHorizon) {
  const BodySpec body{GeometricLength{1.0}, GeometricLength{10.0}};
  EXPECT_THROW(tortoise_phase(2.0, body), DomainError);
  EXPECT_THROW(tortoise_phase(1.0, body), DomainError);
  EXPECT_THROW(inverse_tortoise(-100.0, body), DomainError);
}

TEST(DeltaApprox, FrozenValues) {
  const BodySpec body = BodySpec::earth_rounded();
  EXPECT_NEAR(delta_t_approx(5e5, body).delta_t, 3.448275862068966e-4, 1e-18);
  EXPECT_NEAR(delta_t_approx(1e7, body).delta_t, 6.896551724137931e-3, 1e-17);
  EXPECT_EQ(delta_t_approx(0.0, body).delta_t, 0.0);
  EXPECT_THROW(delta_t_approx(-1.0, body), DomainError);
}

TEST(ShellTime, SegmentMatchesWeakForm) {
  const BodySpec body = BodySpec::earth();
  const double r = 6.38e6;
  EXPECT_NEAR(shell_time_excess(r, r + 5e5, body), 0.000334600844, 1e-12);
  EXPECT_NEAR(shell_time_segment(r, r + 5e5, body) - shell_time_segment_weak(r, r + 5e5, body),
              0.0, 1e-9);
  EXPECT_NEAR(shell_time_excess(r + 5e5, r, body), -shell_time_excess(r, r + 5e5, body), 1e-18);
}

TEST(ShellTime, ExcessAgainstClosedForm) {
  // Integral of 1/sqrt(1 - 2M/r) dr = sqrt(r(r-2M)) + 2M ln(sqrt r + sqrt(r-2M)).
  const BodySpec body{GeometricLength{10.0}, GeometricLength{100.0}};
  auto primitive = [](double r) {
    return std::sqrt(r * (r - 20.0)) + 20.0 * std::log(std::sqrt(r) + std::sqrt(r - 20.0));
  };
  for (auto [a, b] : {std::pair{25.0, 40.0}, std::pair{21.0, 1e4}, std::pair{500.0, 60.0}}) {
    const double expected = primitive(b) - primitive(a);
    EXPECT_NEAR(shell_time_segment(a, b, body), expected, 1e-10 * std::abs(expected));
  }
}

TEST(Backtrack, ClosedFormsAgainstRk4) {
  const BodySpec body = BodySpec::earth();
  const double m = body.mass.value();
  testing::LayoutGenerator gen(11);
  for (int i = 0; i < 20; ++i) {
    GroundSatelliteLayout l = gen.next();
    l.hold_2 = gen.uniform(0.0, 1e3);
    const ExperimentGeometry g = l.build(body);
    const BacktrackedOrigins o = backtrack_origins(g, body);
    const auto ref1 = testing::rk4_backtrack(m, g.x_m, g.x_d1, g.t_d1, g.t_i, 0.0, 4000);
    const auto ref2 = testing::rk4_backtrack(m, g.x_p, g.x_d2, g.t_d2, g.t_i, g.hold_2, 4000);
    EXPECT_NEAR(o.r_i1, ref1.origin_radius, 1e-6);
    EXPECT_NEAR(o.r_i2, ref2.origin_radius, 1e-6);
    EXPECT_NEAR(arm_delta_offset(Arm::One, g, body), ref1.delta, 1e-9 * std::abs(ref1.delta) + 1e-15);
    EXPECT_NEAR(arm_delta_offset(Arm::Two, g, body), ref2.delta, 1e-9 * std::abs(ref2.delta) + 1e-15);
    // Tortoise value of the origin equals the closed form.
    EXPECT_NEAR(tortoise_phase(o.r_i1, body), o.x_i1, 1e-7);
    EXPECT_NEAR(tortoise_phase(o.r_i2, body), o.x_i2, 1e-7);
  }
}

TEST(Backtrack, RejectsLateInitialTime) {
  const BodySpec body = BodySpec::earth();
  ExperimentGeometry g = satellite(5e5, body);
  g.t_i += 1.0;  // after the photons have already reached their turning points
  EXPECT_THROW(backtrack_origins(g, body), DomainError);
}

TEST(DeltaT, LogAndQuadratureAgree) {
  testing::LayoutGenerator gen(3);
  for (const BodySpec& body : {BodySpec::earth(), BodySpec::earth_rounded()}) {
    for (int i = 0; i < 50; ++i) {
      GroundSatelliteLayout l = gen.next();
      l.satellite_height = std::max(l.satellite_height, 1e4);
      const ExperimentGeometry g = l.build(body);
      const double exact = delta_t_exact(g, body).delta_t;
      const double log_form = delta_t_log(g, body).delta_t;
      EXPECT_NEAR(exact, log_form, 1e-6 * std::abs(log_form));
    }
  }
}

TEST(DeltaT, LogFormIndependentOfLengthUnit) {
  const BodySpec body = BodySpec::earth();
  testing::LayoutGenerator gen(5);
  for (int i = 0; i < 10; ++i) {
    const ExperimentGeometry g = gen.next().build(body);
    const BacktrackedOrigins o = backtrack_origins(g, body);
    const double m = body.mass.value();
    // Same ratio with every radius expressed in another unit.
    auto in_units = [&](double unit) {
      const double num = (g.x_d1 / unit) * (o.r_i1 / unit) * (g.x_p / unit) * (g.x_p / unit);
      const double den = (g.x_d2 / unit) * (o.r_i2 / unit) * (g.x_m / unit) * (g.x_m / unit);
      return m * std::log(num / den);
    };
    const double reference = delta_t_log(g, body).delta_t;
    for (double unit : {1.0, 1e3, 1e-2, 0.3048})
      EXPECT_NEAR(in_units(unit), reference, 1e-9 * std::abs(reference) + 1e-18) << unit;
  }
}

TEST(DeltaT, SignAndLinearLimit) {
  const BodySpec body = BodySpec::earth();
  for (double h : {1e2, 1e3, 1e4, 1e5, 5e5, 2e6, 1e7}) {
    const double exact = delta_t_exact(satellite(h, body), body).delta_t;
    const double approx = delta_t_approx(h, body).delta_t;
    EXPECT_LT(exact, 0.0);
    // |Delta_t| = M ln(1 + h/r_e): the linear form overshoots by about h / (2 r_e).
    const double rel = std::abs(approx - std::abs(exact)) / std::abs(exact);
    const double x = h / body.reference_radius.value();
    EXPECT_NEAR(rel, x / std::log1p(x) - 1.0, 1e-7);
    if (h <= 1.2e4) {
      EXPECT_LT(rel, 1e-3);
    }
  }
}

TEST(DeltaT, FlatSpaceVanishes) {
  const BodySpec flat = BodySpec::flat();
  testing::LayoutGenerator gen(5);
  for (int i = 0; i < 20; ++i) {
    const ExperimentGeometry g = gen.next().build(flat);
    EXPECT_EQ(delta_t_exact(g, flat).delta_t, 0.0);
    EXPECT_EQ(delta_t_log(g, flat).delta_t, 0.0);
  }
}

TEST(DeltaT, HoldIsPureDelay) {
  const BodySpec body = BodySpec::earth();
  const ExperimentGeometry base = satellite(5e5, body);
  const double d0 = delta_t_exact(base, body).delta_t;
  for (double hold : {1.0, 1e3, 1e6}) {
    ExperimentGeometry g = base;
    g.hold_2 = hold;
    g.t_d2 += hold;
    EXPECT_NEAR(delta_t_exact(g, body).delta_t, d0, 1e-15);
  }
}

TEST(DeltaT, SwappingArmsFlipsSign) {
  const BodySpec body = BodySpec::earth();
  const ExperimentGeometry g = satellite(2e6, body);
  EXPECT_NEAR(delta_t_exact(g.swapped(), body).delta_t, -delta_t_exact(g, body).delta_t, 1e-16);
  ExperimentGeometry held = g;
  held.hold_2 = 1.0;
  EXPECT_THROW(held.swapped(), DomainError);
}

TEST(DeltaT, TimeTranslationInvariant) {
  const BodySpec body = BodySpec::earth();
  testing::LayoutGenerator gen(9);
  for (int i = 0; i < 20; ++i) {
    const ExperimentGeometry g = gen.next().build(body);
    const double d0 = delta_t_exact(g, body).delta_t;
    for (double shift : {-3e6, 17.0, 4e6}) {
      ExperimentGeometry s = g;
      s.t_i += shift;
      s.t_d1 += shift;
      s.t_d2 += shift;
      EXPECT_NEAR(delta_t_exact(s, body).delta_t, d0, 1e-12 * std::abs(d0) + 1e-18);
    }
  }
}

TEST(Tau, QuadratureMatchesWeakForm) {
  const BodySpec body = BodySpec::earth();
  testing::LayoutGenerator gen(13);
  for (int i = 0; i < 10; ++i) {
    const ExperimentGeometry g = gen.next().build(body);
    for (Arm arm : {Arm::One, Arm::Two}) {
      const double t_d = arm == Arm::One ? g.t_d1 : g.t_d2;
      // tau = t_d - t_i - (Delta - t_i); compare the small parts.
      const double tau = tau_arm(arm, g, body);
      EXPECT_NEAR(tau, t_d - g.t_i - arm_delta_offset(arm, g, body), 1e-6);
      EXPECT_NEAR(tau, tau_arm_weak(arm, g, body), 1e-6);
    }
  }
}

TEST(NullPath, EndpointsAndContinuity) {
  const BodySpec body = BodySpec::earth();
  GroundSatelliteLayout l;
  l.pbs_height = 100.0;
  l.hold_2 = 50.0;
  const ExperimentGeometry g = l.build(body);
  for (Arm arm : {Arm::One, Arm::Two}) {
    const NullPath p = arm_path(arm, g, body);
    EXPECT_NEAR(p.radius_at(p.t_start, body), p.origin, 1e-8);
    EXPECT_NEAR(p.radius_at(p.t_detect, body), p.detector, 1e-8);
    EXPECT_NEAR(p.radius_at(p.t_turn_arrive, body), p.turn, 1e-8);
    EXPECT_NEAR(p.t_turn_leave - p.t_turn_arrive, arm == Arm::Two ? 50.0 : 0.0, 1e-8);
    double prev = p.tortoise_at(p.t_start, body);
    for (int i = 1; i <= 100; ++i) {
      const double t = p.t_start + (p.t_detect - p.t_start) * i / 100.0;
      const double x = p.tortoise_at(t, body);
      EXPECT_LE(std::abs(x - prev), (p.t_detect - p.t_start) / 100.0 + 1e-6);
      prev = x;
    }
  }
}

TEST(DeltaT, TruncatedPathIsMonotoneInEndpoint) {
  const BodySpec body = BodySpec::earth();
  const ExperimentGeometry g = satellite(5e5, body);
  const NullPath p = arm_path(Arm::Two, g, body);
  double prev = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double t = p.t_start + (p.t_detect - p.t_start) * i / 50.0;
    const double d = arm_delta_offset(Arm::Two, g, body, t);
    EXPECT_GE(d, prev - 1e-18);
    prev = d;
  }
  EXPECT_NEAR(prev, arm_delta_offset(Arm::Two, g, body), 1e-15);
}

TEST(Geometry, Validation) {
  const BodySpec body = BodySpec::earth();
  ExperimentGeometry g = satellite(5e5, body);
  ExperimentGeometry bad = g;
  bad.x_d1 = g.x_m - 1.0;
  EXPECT_THROW(bad.validate(body), DomainError);
  bad = g;
  bad.hold_2 = -1.0;
  EXPECT_THROW(bad.validate(body), DomainError);
  bad = g;
  bad.t_d2 = std::nan("");
  EXPECT_THROW(bad.validate(body), DomainError);
  GroundSatelliteLayout l;
  l.satellite_height = -1.0;
  EXPECT_THROW(l.build(body), DomainError);
  l = {};
  l.source_height = -5.0;
  EXPECT_THROW(l.build(body), DomainError);
}

}  // namespace
}  // namespace eventdecor
