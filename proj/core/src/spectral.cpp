#include "eventdecor/spectral.hpp"

#include <cmath>
#include <numbers>

#include "detail/fourier.hpp"
#include "eventdecor/errors.hpp"

namespace eventdecor {

void SpectralMode::validate() const {
  if (!std::isfinite(center)) throw DomainError("mode center must be finite");
  if (kind == ModeKind::Gaussian && !(width > 0.0 && std::isfinite(width)))
    throw DomainError("Gaussian mode width must be positive and finite");
}

std::complex<double> eval_amplitude(const SpectralMode& mode, double w) {
  mode.validate();
  return detail::amplitude_magnitude<double>(mode, w);
}

std::complex<double> overlap(const SpectralMode& detector, const SpectralMode& source,
                             double offset) {
  if (!std::isfinite(offset)) throw DomainError("phase offset must be finite");
  return detail::product_fourier(detector, source, offset);
}

double overlap_norm(const SpectralMode& detector, const SpectralMode& source) {
  return detail::product_fourier(detector, source, 0.0).real();
}

std::complex<double> chi_effective(const SpectralMode& detector, const SpectralMode& source,
                                   double phase_offset, std::complex<double> chi_max) {
  return chi_max * overlap(detector, source, phase_offset) / overlap_norm(detector, source);
}

std::complex<double> chi_effective_closed_form_gaussian(double d_t, double k0, double phase_offset,
                                                        std::complex<double> chi_max) {
  if (!(d_t > 0.0)) throw DomainError("d_t must be positive");
  const double envelope = std::exp(-phase_offset * phase_offset / (4.0 * d_t * d_t));
  return chi_max * std::polar(envelope, k0 * phase_offset);
}

SqueezingParams squeezing_params(const SpectralMode& detector_1, const SpectralMode& detector_2,
                                 const SpectralMode& source, double offset_1, double offset_2,
                                 std::complex<double> chi_max) {
  return {chi_max, chi_effective(detector_1, source, offset_1, chi_max),
          chi_effective(detector_2, source, offset_2, chi_max)};
}

}  // namespace eventdecor
