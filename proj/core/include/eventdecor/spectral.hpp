#pragma once

// Spectral amplitudes of the source (Gaussian) and detector (flat) modes.
// The same amplitude shapes are used for the wavenumber k and for the event
// degree of freedom Omega; both are in inverse metres.

#include <complex>

namespace eventdecor {

enum class ModeKind { Flat, Gaussian };

struct SpectralMode {
  ModeKind kind = ModeKind::Flat;
  double center = 0.0;  ///< k_0 or Omega_0, 1/m
  double width = 0.0;   ///< d_t for Gaussian modes, m; unused for Flat

  static SpectralMode flat() { return {}; }
  /// sqrt(sqrt(2) d_t / sqrt(pi)) exp(-(w - center)^2 d_t^2), unit L2 norm.
  static SpectralMode gaussian(double center, double d_t) {
    return {ModeKind::Gaussian, center, d_t};
  }

  /// Throws DomainError for a Gaussian with non-positive or non-finite width.
  void validate() const;
};

/// Amplitude at w. Flat modes are 1/sqrt(2 pi) everywhere.
std::complex<double> eval_amplitude(const SpectralMode& mode, double w);

/// Integral of G(k) H*(k) exp(i k offset) over k. At least one of the modes
/// must be Gaussian (two flat modes are not normalizable).
std::complex<double> overlap(const SpectralMode& detector, const SpectralMode& source,
                             double offset);

/// Integral of |G(k) H(k)| over k: the zero-offset overlap of two real
/// positive profiles.
double overlap_norm(const SpectralMode& detector, const SpectralMode& source);

/// Effective squeezing of one arm: chi_max times the overlap at the given
/// phase offset (phi_j^- - phi^c), normalized so a matched overlap gives chi_max.
std::complex<double> chi_effective(const SpectralMode& detector, const SpectralMode& source,
                                   double phase_offset, std::complex<double> chi_max);

/// Flat detector with Gaussian source: chi_max exp(i k0 offset - offset^2 / (4 d_t^2)).
std::complex<double> chi_effective_closed_form_gaussian(double d_t, double k0, double phase_offset,
                                                        std::complex<double> chi_max);

struct SqueezingParams {
  /// Above this |chi_max| the Cosh ~ 1, Sinh ~ chi linearization is not trusted.
  static constexpr double weak_threshold = 0.1;

  std::complex<double> chi_max;
  std::complex<double> chi_1;
  std::complex<double> chi_2;

  bool weak() const { return std::abs(chi_max) < weak_threshold; }
};

/// Per-arm effective squeezing; the detectors may differ between arms.
SqueezingParams squeezing_params(const SpectralMode& detector_1, const SpectralMode& detector_2,
                                 const SpectralMode& source, double offset_1, double offset_2,
                                 std::complex<double> chi_max);

}  // namespace eventdecor
