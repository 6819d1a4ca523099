#pragma once

// Normalized same-time event commutator between a detector mode and a source
// mode whose event phases differ by Delta_t:
//
//   q(Delta_t) = Int dOmega |G H| exp(i Omega Delta_t) / Int dOmega |G H|
//
// q multiplies the standard coincidence amplitude and carries all of the
// deviation from standard quantum optics.

#include <complex>

#include "eventdecor/spacetime.hpp"
#include "eventdecor/spectral.hpp"

namespace eventdecor {

struct EventQuotient {
  std::complex<double> value{1.0, 0.0};

  double magnitude() const { return std::abs(value); }
  double magnitude_squared() const { return std::norm(value); }
};

/// Quadrature over Omega_0 +- 12 / d_t. Exactly 1 for Delta_t == 0.
EventQuotient quotient(const SpectralMode& detector, const SpectralMode& source,
                       DeltaMismatch delta);

/// Same, from the two arms' individual Delta values. Only the difference
/// enters.
EventQuotient quotient(const SpectralMode& detector, const SpectralMode& source, double delta_1,
                       double delta_2);

/// exp(i Omega_0 Delta_t - Delta_t^2 / (4 d_t^2)): flat detector, Gaussian source.
std::complex<double> quotient_closed_form_gaussian(double d_t, double omega0, double delta_t);

}  // namespace eventdecor
