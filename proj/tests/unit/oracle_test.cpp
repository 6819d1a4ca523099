#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "eventdecor/coincidence.hpp"
#include "eventdecor/errors.hpp"
#include "eventdecor/event_commutator.hpp"
#include "eventdecor/oracle.hpp"

namespace eventdecor::oracle {
namespace {

const SpectralMode kFlat = SpectralMode::flat();

double analytic(double d, double delta, double offset_2, std::complex<double> chi) {
  const SpectralMode h = SpectralMode::gaussian(0.0, d);
  return coincidence_rate_raw(kFlat, h, kFlat, h, delta, 0.0, offset_2, chi).real();
}

class OracleTest : public ::testing::Test {
 protected:
  SpectralMode source = SpectralMode::gaussian(0.0, 1e-3);
  DiscreteModeGrid grid = DiscreteModeGrid::uniform(source, 65, 65);
};

TEST_F(OracleTest, GridInvariants) {
  EXPECT_NO_THROW(grid.validate());
  EXPECT_EQ(grid.size(), 65u * 65u);
  EXPECT_LT(grid.completeness_error(source), 1e-12);
  EXPECT_EQ(grid.fingerprint(), DiscreteModeGrid::uniform(source, 65, 65).fingerprint());
  EXPECT_NE(grid.fingerprint(), DiscreteModeGrid::uniform(source, 65, 33).fingerprint());

  DiscreteModeGrid bad = grid;
  bad.k_weights.pop_back();
  EXPECT_THROW(bad.validate(), DimensionError);
  bad = grid;
  bad.omega_weights[3] = -1.0;
  EXPECT_THROW(bad.validate(), DomainError);
  EXPECT_THROW(DiscreteModeGrid::uniform(kFlat, 9, 9), DomainError);
}

TEST_F(OracleTest, FlatOperatorHasConstantCoefficients) {
  const auto op = build_event_operator(kFlat, kFlat, 0.0, 0.0, grid);
  ASSERT_EQ(op.coefficients.size(), grid.size());
  for (const auto& c : op.coefficients) EXPECT_EQ(c, op.coefficients.front());
}

TEST_F(OracleTest, GaussianOperatorPeaksAtCenter) {
  const auto op = build_event_operator(source, source, 0.0, 0.0, grid);
  const std::size_t centre = 32 * 65 + 32;
  for (const auto& c : op.coefficients) EXPECT_LE(std::abs(c), std::abs(op.coefficients[centre]));
}

TEST_F(OracleTest, SelfCommutatorIsOne) {
  const auto a = build_event_operator(source, source, 0.0, 0.0, grid);
  EXPECT_NEAR(std::abs(discrete_event_commutator(a, a, grid)), 1.0, 1e-12);
}

TEST_F(OracleTest, CommutatorMatchesQuotient) {
  const auto a = build_event_operator(kFlat, kFlat, 0.0, 0.0, grid);
  const auto a0 = build_event_operator(source, source, 0.0, 0.0, grid);
  const double norm = std::abs(discrete_event_commutator(a, a0, grid));
  for (double delta : {0.0, 3e-4, 1e-3, 2.5e-3}) {
    const auto b = build_event_operator(source, source, 0.0, delta, grid);
    const std::complex<double> discrete = discrete_event_commutator(a, b, grid) / norm;
    const std::complex<double> q = quotient(kFlat, source, DeltaMismatch{delta}).value;
    EXPECT_NEAR(std::abs(discrete), std::abs(q), 1e-10) << delta;
    if (delta > 0.0) {
      EXPECT_LT(std::abs(discrete), 1.0);
    }
  }
}

TEST_F(OracleTest, MismatchedGridsAreRejected) {
  const auto other = DiscreteModeGrid::uniform(source, 33, 33);
  const auto a = build_event_operator(source, source, 0.0, 0.0, grid);
  const auto b = build_event_operator(source, source, 0.0, 0.0, other);
  EXPECT_THROW(discrete_event_commutator(a, b, grid), DimensionError);
}

TEST_F(OracleTest, VacuumIsAnnihilated) {
  const auto a = build_event_operator(source, source, 0.5, 1e-3, grid);
  EXPECT_EQ(vacuum_annihilation_residual(a, grid), 0.0);
}

TEST_F(OracleTest, BruteForceAgreesWithAnalytic) {
  const std::complex<double> chi{1e-3, 0.0};
  for (auto [delta, offset] : {std::pair{0.0, 0.0}, std::pair{1e-3, 0.0},
                               std::pair{5e-4, -7e-4}, std::pair{2e-3, 1.5e-3}}) {
    BruteForceInputs in;
    in.source = source;
    in.delta_1 = delta;
    in.offset_2 = offset;
    const auto g = DiscreteModeGrid::uniform(source, 129, 129);
    const auto r = coincidence_bruteforce(in, g, chi);
    const double reference = analytic(1e-3, delta, offset, chi);
    EXPECT_NEAR(r.contraction.real(), reference, 1e-10 * reference);
    EXPECT_NEAR(r.explicit_matrix.real(), r.contraction.real(), 1e-9 * reference);
    EXPECT_NEAR(r.contraction.imag(), 0.0, 1e-12 * reference);
    EXPECT_GT(r.value(), 0.0);
    EXPECT_EQ(r.vacuum_residual, 0.0);
  }
}

TEST_F(OracleTest, SuppressionFollowsQuotient) {
  BruteForceInputs in;
  in.source = source;
  const double base = coincidence_bruteforce(in, grid, 1e-3).value();
  in.delta_1 = 1e-3;
  const double shifted = coincidence_bruteforce(in, grid, 1e-3).value();
  EXPECT_NEAR(shifted / base, std::exp(-0.5), 1e-10);
}

TEST_F(OracleTest, DependsOnlyOnDeltaDifference) {
  BruteForceInputs in;
  in.source = source;
  in.delta_1 = 1e-3;
  const double v = coincidence_bruteforce(in, grid, 1e-3).value();
  for (double shift : {-0.4, 2.0}) {
    BruteForceInputs moved = in;
    moved.delta_1 += shift;
    moved.delta_2 += shift;
    EXPECT_NEAR(coincidence_bruteforce(moved, grid, 1e-3).value(), v, 1e-9 * v);
  }
}

TEST_F(OracleTest, ZeroPumpGivesZero) {
  BruteForceInputs in;
  in.source = source;
  in.delta_1 = 1e-3;
  const auto r = coincidence_bruteforce(in, grid, 0.0);
  EXPECT_EQ(r.value(), 0.0);
  EXPECT_EQ(r.explicit_matrix, std::complex<double>(0.0, 0.0));
}

TEST_F(OracleTest, StrongPumpIsRejected) {
  BruteForceInputs in;
  in.source = source;
  EXPECT_THROW(coincidence_bruteforce(in, grid, 0.2), PreconditionError);
}

TEST_F(OracleTest, CarrierLeavesComplexRate) {
  const double d = 1e-3;
  BruteForceInputs in;
  in.source = SpectralMode::gaussian(1.0 / d, d);
  in.delta_1 = 5e-4;
  const auto g = DiscreteModeGrid::uniform(in.source, 129, 129);
  const auto r = coincidence_bruteforce(in, g, 1e-3);
  const auto raw = coincidence_rate_raw(kFlat, in.source, kFlat, in.source, in.delta_1, 0.0, 0.0,
                                        1e-3);
  EXPECT_GT(std::abs(r.contraction.imag()), 1e-3 * std::abs(r.contraction));
  EXPECT_NEAR(std::abs(r.contraction - raw), 0.0, 1e-9 * std::abs(raw));
}

TEST(ConvergenceLadder, TrapezoidConvergesGeometrically) {
  const SpectralMode h = SpectralMode::gaussian(0.0, 1e-3);
  const double reference = analytic(1e-3, 1e-3, 0.0, 1e-3);
  auto error_at = [&](std::size_t n) {
    BruteForceInputs in;
    in.source = h;
    in.delta_1 = 1e-3;
    const auto g = DiscreteModeGrid::uniform(h, n, n);
    return std::abs(coincidence_bruteforce(in, g, 1e-3).value() / reference - 1.0);
  };
  const auto report = convergence_ladder(error_at, 16, 3);
  ASSERT_EQ(report.steps.size(), 3u);
  EXPECT_EQ(report.steps[0].nodes, 16u);
  EXPECT_EQ(report.steps[1].nodes, 31u);
  EXPECT_EQ(report.steps[2].nodes, 61u);
  EXPECT_TRUE(report.passed);
}

TEST(ConvergenceLadder, StagnationFails) {
  const auto report = convergence_ladder([](std::size_t) { return 1e-3; }, 8, 3);
  EXPECT_FALSE(report.passed);
  const auto floor = convergence_ladder([](std::size_t) { return 1e-14; }, 8, 3);
  EXPECT_TRUE(floor.passed);
}

}  // namespace
}  // namespace eventdecor::oracle
