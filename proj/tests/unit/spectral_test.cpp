#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "eventdecor/errors.hpp"
#include "eventdecor/spectral.hpp"

namespace eventdecor {
namespace {

using std::numbers::pi;

/// Normalization constant of the Gaussian amplitude, written out independently.
double gaussian_norm(double d) { return std::pow(2.0, 0.25) * std::sqrt(d) / std::pow(pi, 0.25); }

TEST(Spectral, GaussianUnitNorm) {
  for (double d : {3e-4, 9e-3, 1.0}) {
    const SpectralMode h = SpectralMode::gaussian(2.0 / d, d);
    // Riemann sum on a fine grid; Gaussians converge spectrally.
    const double step = 0.01 / d;
    double sum = 0.0;
    for (int i = -2000; i <= 2000; ++i) sum += std::norm(eval_amplitude(h, h.center + i * step));
    EXPECT_NEAR(sum * step, 1.0, 1e-12);
    EXPECT_NEAR(eval_amplitude(h, h.center).real(), gaussian_norm(d), 1e-12 * gaussian_norm(d));
  }
}

TEST(Spectral, FlatAmplitude) {
  EXPECT_DOUBLE_EQ(eval_amplitude(SpectralMode::flat(), 123.0).real(), 1.0 / std::sqrt(2.0 * pi));
}

TEST(Spectral, FlatGaussianOverlapClosedForm) {
  for (double d : {3e-4, 9e-3}) {
    const double k0 = 3.0 / d;
    const SpectralMode h = SpectralMode::gaussian(k0, d);
    for (double offset : {0.0, 0.3 * d, -1.7 * d, 4.0 * d}) {
      const std::complex<double> expected =
          gaussian_norm(d) / std::sqrt(2.0 * pi) * std::sqrt(pi) / d *
          std::polar(std::exp(-offset * offset / (4.0 * d * d)), k0 * offset);
      const std::complex<double> got = overlap(SpectralMode::flat(), h, offset);
      EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-12 * std::abs(expected));
    }
  }
}

TEST(Spectral, TwoGaussianOverlap) {
  const double d1 = 1e-3, d2 = 2.5e-3;
  const SpectralMode g = SpectralMode::gaussian(0.0, d1);
  const SpectralMode h = SpectralMode::gaussian(0.0, d2);
  const double s2 = d1 * d1 + d2 * d2;
  for (double offset : {0.0, 1e-3, 5e-3}) {
    const double expected = gaussian_norm(d1) * gaussian_norm(d2) * std::sqrt(pi / s2) *
                            std::exp(-offset * offset / (4.0 * s2));
    EXPECT_NEAR(overlap(g, h, offset).real(), expected, 1e-12 * expected);
    EXPECT_NEAR(overlap(g, h, offset).imag(), 0.0, 1e-12 * expected);
  }
  EXPECT_NEAR(overlap_norm(g, h), overlap(g, h, 0.0).real(), 1e-15);
}

TEST(Spectral, ChiEffectivePeaksAtChiMax) {
  const double d = 9e-3;
  const SpectralMode h = SpectralMode::gaussian(1.0 / d, d);
  const std::complex<double> chi{3e-3, -1e-3};
  EXPECT_NEAR(std::abs(chi_effective(SpectralMode::flat(), h, 0.0, chi) - chi), 0.0, 1e-15);
  for (double offset : {0.5 * d, 2.0 * d}) {
    const auto got = chi_effective(SpectralMode::flat(), h, offset, chi);
    const auto expected = chi_effective_closed_form_gaussian(d, h.center, offset, chi);
    EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-13 * std::abs(chi));
    EXPECT_LT(std::abs(got), std::abs(chi));
  }
}

TEST(Spectral, SqueezingParams) {
  const SpectralMode h = SpectralMode::gaussian(0.0, 1e-3);
  const auto p = squeezing_params(SpectralMode::flat(), SpectralMode::flat(), h, 0.0, 1e-3, 0.05);
  EXPECT_TRUE(p.weak());
  EXPECT_NEAR(p.chi_1.real(), 0.05, 1e-15);
  EXPECT_NEAR(p.chi_2.real(), 0.05 * std::exp(-0.25), 1e-14);
  EXPECT_FALSE(squeezing_params(SpectralMode::flat(), SpectralMode::flat(), h, 0, 0, 0.2).weak());
}

TEST(Spectral, Errors) {
  EXPECT_THROW(overlap(SpectralMode::flat(), SpectralMode::flat(), 0.0), DomainError);
  EXPECT_THROW(SpectralMode::gaussian(0.0, 0.0).validate(), DomainError);
  EXPECT_THROW(SpectralMode::gaussian(0.0, -1.0).validate(), DomainError);
  EXPECT_THROW(eval_amplitude(SpectralMode::gaussian(std::nan(""), 1.0), 0.0), DomainError);
  EXPECT_THROW(overlap(SpectralMode::flat(), SpectralMode::gaussian(0, 1), INFINITY), DomainError);
}

}  // namespace
}  // namespace eventdecor
