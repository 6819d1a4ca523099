#pragma once

// Fourier integrals of smooth real profiles, evaluated with panelled 256-point
// Gauss-Legendre rules in binary128 so that exponentially small transforms
// (e^-25 and below) keep their relative accuracy.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/multiprecision/float128.hpp>

#include "eventdecor/errors.hpp"
#include "eventdecor/spectral.hpp"

namespace eventdecor::detail {

using Quad = boost::multiprecision::float128;

/// Half-width of the integration window in units of 1/d_t.
inline constexpr double kWindowWidths = 12.0;
/// Oscillation cycles one 256-point panel is trusted to resolve.
inline constexpr double kCyclesPerPanel = 32.0;
inline constexpr int kMaxPanels = 4096;

template <class Real>
Real amplitude_magnitude(const SpectralMode& mode, Real w) {
  using std::exp;
  using std::sqrt;
  using boost::multiprecision::exp;
  using boost::multiprecision::sqrt;
  const Real pi = boost::math::constants::pi<Real>();
  if (mode.kind == ModeKind::Flat) return Real(1) / sqrt(2 * pi);
  const Real d = Real(mode.width);
  const Real x = (w - Real(mode.center)) * d;
  return sqrt(sqrt(Real(2)) * d / sqrt(pi)) * exp(-x * x);
}

struct Window {
  double center = 0.0;
  double half_width = 0.0;
};

/// Window covering the product of two profiles. Throws if neither decays.
inline Window product_window(const SpectralMode& a, const SpectralMode& b) {
  a.validate();
  b.validate();
  const bool ga = a.kind == ModeKind::Gaussian;
  const bool gb = b.kind == ModeKind::Gaussian;
  if (!ga && !gb)
    throw DomainError("overlap of two flat modes is not normalizable; one mode must be Gaussian");
  if (ga && !gb) return {a.center, kWindowWidths / a.width};
  if (!ga && gb) return {b.center, kWindowWidths / b.width};
  // exp(-(x-c1)^2 d1^2 - (x-c2)^2 d2^2) is a Gaussian of width sqrt(d1^2 + d2^2).
  const double w1 = a.width * a.width;
  const double w2 = b.width * b.width;
  return {(a.center * w1 + b.center * w2) / (w1 + w2), kWindowWidths / std::sqrt(w1 + w2)};
}

/// Integral over the window of a(x) b(x) exp(i x shift), with a, b the
/// magnitudes of the two profiles.
inline std::complex<double> product_fourier(const SpectralMode& a, const SpectralMode& b,
                                            double shift) {
  const Window win = product_window(a, b);
  const double cycles = 2.0 * win.half_width * std::abs(shift) / (2.0 * std::numbers::pi);
  const int panels = std::max(1, static_cast<int>(std::ceil(cycles / kCyclesPerPanel)));
  if (panels > kMaxPanels)
    throw NumericError("phase shift too large for the Fourier quadrature window", shift,
                       cycles);

  const Quad c = Quad(win.center);
  const Quad s = Quad(shift);
  auto profile = [&](Quad y) {
    return amplitude_magnitude(a, c + y) * amplitude_magnitude(b, c + y);
  };
  using Rule = boost::math::quadrature::gauss<Quad, 256>;
  Quad re = 0;
  Quad im = 0;
  const Quad h = Quad(2.0 * win.half_width) / panels;
  for (int p = 0; p < panels; ++p) {
    const Quad lo = Quad(-win.half_width) + h * p;
    const Quad hi = lo + h;
    if (shift == 0.0) {
      re += Rule::integrate(profile, lo, hi);
      continue;
    }
    re += Rule::integrate([&](Quad y) { return profile(y) * cos(y * s); }, lo, hi);
    im += Rule::integrate([&](Quad y) { return profile(y) * sin(y * s); }, lo, hi);
  }
  // exp(i c shift) carried separately keeps the oscillation on a centred variable.
  const std::complex<Quad> carrier{cos(c * s), sin(c * s)};
  const std::complex<Quad> value = carrier * std::complex<Quad>{re, im};
  return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

}  // namespace eventdecor::detail
