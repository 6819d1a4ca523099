#include "eventdecor/event_commutator.hpp"

#include <cmath>

#include "detail/fourier.hpp"
#include "eventdecor/errors.hpp"

namespace eventdecor {

EventQuotient quotient(const SpectralMode& detector, const SpectralMode& source,
                       DeltaMismatch delta) {
  if (!std::isfinite(delta.delta_t)) throw DomainError("Delta_t must be finite");
  if (delta.delta_t == 0.0) {
    detail::product_window(detector, source);  // still reject non-normalizable pairs
    return {};
  }
  const std::complex<double> numerator = detail::product_fourier(detector, source, delta.delta_t);
  const double denominator = detail::product_fourier(detector, source, 0.0).real();
  return {numerator / denominator};
}

EventQuotient quotient(const SpectralMode& detector, const SpectralMode& source, double delta_1,
                       double delta_2) {
  return quotient(detector, source, DeltaMismatch{delta_1 - delta_2});
}

std::complex<double> quotient_closed_form_gaussian(double d_t, double omega0, double delta_t) {
  if (!(d_t > 0.0)) throw DomainError("d_t must be positive");
  return std::polar(std::exp(-delta_t * delta_t / (4.0 * d_t * d_t)), omega0 * delta_t);
}

}  // namespace eventdecor
