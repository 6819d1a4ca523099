#pragma once

// Coincidence rates in the weak-pump regime.
//
// With the source phase reference tied to arm 1 (offset_1 = 0) and arm 2
// shifted by the coincidence-window offset s, the rate is
//
//   C(s) = eta_1 eta_2 |chi_max|^2 |o(0)|^2 |o(s)|^2 |q(Delta_t)|^2
//
// where o is the normalized k-overlap of detector and source and q the event
// quotient. The standard-theory rate is the same expression with q = 1.

#include <complex>
#include <span>
#include <vector>

#include "eventdecor/event_commutator.hpp"
#include "eventdecor/spacetime.hpp"
#include "eventdecor/spectral.hpp"

namespace eventdecor {

struct CoincidencePrediction {
  double c_event = 0.0;
  double c_standard = 0.0;
  double ratio = 1.0;    ///< c_event / c_standard = |q|^2
  double delta_t = 0.0;  ///< metres
};

struct CoincidenceOptions {
  std::complex<double> chi_max{1e-3, 0.0};
  double efficiency_1 = 1.0;
  double efficiency_2 = 1.0;
};

/// |q(Delta_t)|^2. Closed form exp(-Delta_t^2 / (2 d_t^2)) for a flat detector
/// and Gaussian source, quadrature otherwise.
double singles_ratio(const SpectralMode& detector, const SpectralMode& source,
                     DeltaMismatch delta);

/// One point of the offset-resolved curve, Delta_t held fixed.
CoincidencePrediction coincidence_at_offset(const SpectralMode& source,
                                            const SpectralMode& detector, DeltaMismatch delta,
                                            double offset, const CoincidenceOptions& options = {});

/// Offset-resolved coincidences with Delta_t fixed across the sweep.
std::vector<CoincidencePrediction> coincidence_offset_curve(
    const SpectralMode& source, const SpectralMode& detector, DeltaMismatch delta,
    std::span<const double> offsets, const CoincidenceOptions& options = {});

/// Offset-resolved coincidences with Delta_t recomputed for every detection
/// time pair: each offset delays detection 2 of `base` by that amount.
std::vector<CoincidencePrediction> coincidence_offset_curve(
    const SpectralMode& source, const SpectralMode& detector, const ExperimentGeometry& base,
    const BodySpec& body, std::span<const double> offsets,
    const CoincidenceOptions& options = {});

/// Pulse-integrated coincidences normalized to the singles rate |chi|^2:
/// c_standard = |chi|^2, c_event = |chi|^2 |q|^2.
CoincidencePrediction c_total(std::complex<double> chi, const SpectralMode& source,
                              const SpectralMode& detector, DeltaMismatch delta);

/// How Delta_t is obtained for a detector raised by h.
enum class DeltaModel {
  Linear,  ///< M h / r_e
  Log,     ///< closed-form logarithm on the ground/satellite layout
  Exact,   ///< shell-time quadrature on the ground/satellite layout
};

struct HeightPoint {
  double height = 0.0;
  double delta_t = 0.0;
  double ratio_event = 1.0;
  double ratio_standard = 1.0;
};

/// Coincidence-to-singles ratio against detector-2 height for a Gaussian
/// source of width d_t and a flat detector.
std::vector<HeightPoint> ratio_vs_height_curve(const BodySpec& body, double d_t,
                                               std::span<const double> heights,
                                               DeltaModel model = DeltaModel::Linear);

/// Unnormalized rate chi_2 chi_1^* [a_m1, a_m1c^dag]_e [a_m2, a_m2c^dag]_e^*
/// with chi_j = chi_max Int G H^* exp(i k offset_j) and delta_t the event
/// phase of arm 1 minus arm 2. Real for Omega_0 = 0; otherwise a residual
/// phase exp(2 i Omega_0 delta_t) remains.
std::complex<double> coincidence_rate_raw(const SpectralMode& detector_k,
                                          const SpectralMode& source_k,
                                          const SpectralMode& detector_omega,
                                          const SpectralMode& source_omega, double delta_t,
                                          double offset_1, double offset_2,
                                          std::complex<double> chi_max);

/// Closed form of coincidence_rate_raw for flat detectors and a Gaussian
/// source of width d_t in both k and Omega (centers zero):
/// |chi_max|^2 exp(-(o1^2 + o2^2)/(2 d^2)) / (2 pi d^2) exp(-Delta_t^2/(2 d^2)).
double coincidence_rate_raw_closed_form(double d_t, double delta_t, double offset_1,
                                        double offset_2, std::complex<double> chi_max);

}  // namespace eventdecor
