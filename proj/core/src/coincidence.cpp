#include "eventdecor/coincidence.hpp"

#include <cmath>
#include <numbers>

#include "eventdecor/parallel.hpp"
#include "eventdecor/errors.hpp"

namespace eventdecor {
namespace {

bool gaussian_flat_pair(const SpectralMode& detector, const SpectralMode& source) {
  return detector.kind == ModeKind::Flat && source.kind == ModeKind::Gaussian;
}

void check_options(const CoincidenceOptions& options) {
  if (!std::isfinite(std::abs(options.chi_max)))
    throw DomainError("chi_max must be finite");
  if (!(options.efficiency_1 >= 0.0 && options.efficiency_1 <= 1.0) ||
      !(options.efficiency_2 >= 0.0 && options.efficiency_2 <= 1.0))
    throw DomainError("detector efficiencies must lie in [0, 1]");
}

/// |o(offset)|^2 with o normalized to 1 at zero offset.
double normalized_overlap_sq(const SpectralMode& detector, const SpectralMode& source,
                             double offset) {
  if (offset == 0.0) return 1.0;
  if (gaussian_flat_pair(detector, source))
    return std::exp(-offset * offset / (2.0 * source.width * source.width));
  return std::norm(overlap(detector, source, offset) / overlap_norm(detector, source));
}

CoincidencePrediction assemble(double standard, double ratio, double delta_t) {
  return {standard * ratio, standard, ratio, delta_t};
}

}  // namespace

double singles_ratio(const SpectralMode& detector, const SpectralMode& source,
                     DeltaMismatch delta) {
  if (!std::isfinite(delta.delta_t)) throw DomainError("Delta_t must be finite");
  if (gaussian_flat_pair(detector, source)) {
    source.validate();
    const double d = source.width;
    return std::exp(-delta.delta_t * delta.delta_t / (2.0 * d * d));
  }
  return quotient(detector, source, delta).magnitude_squared();
}

CoincidencePrediction coincidence_at_offset(const SpectralMode& source,
                                            const SpectralMode& detector, DeltaMismatch delta,
                                            double offset, const CoincidenceOptions& options) {
  check_options(options);
  if (!std::isfinite(offset)) throw DomainError("offset must be finite");
  const double standard = options.efficiency_1 * options.efficiency_2 *
                          std::norm(options.chi_max) *
                          normalized_overlap_sq(detector, source, offset);
  return assemble(standard, singles_ratio(detector, source, delta), delta.delta_t);
}

std::vector<CoincidencePrediction> coincidence_offset_curve(
    const SpectralMode& source, const SpectralMode& detector, DeltaMismatch delta,
    std::span<const double> offsets, const CoincidenceOptions& options) {
  std::vector<CoincidencePrediction> out(offsets.size());
  parallel_for_index(offsets.size(), [&](std::size_t i) {
    out[i] = coincidence_at_offset(source, detector, delta, offsets[i], options);
  });
  return out;
}

std::vector<CoincidencePrediction> coincidence_offset_curve(
    const SpectralMode& source, const SpectralMode& detector, const ExperimentGeometry& base,
    const BodySpec& body, std::span<const double> offsets, const CoincidenceOptions& options) {
  base.validate(body);
  std::vector<CoincidencePrediction> out(offsets.size());
  parallel_for_index(offsets.size(), [&](std::size_t i) {
    ExperimentGeometry g = base;
    g.t_d2 += offsets[i];
    out[i] = coincidence_at_offset(source, detector, delta_t_exact(g, body), offsets[i], options);
  });
  return out;
}

CoincidencePrediction c_total(std::complex<double> chi, const SpectralMode& source,
                              const SpectralMode& detector, DeltaMismatch delta) {
  if (!std::isfinite(std::abs(chi))) throw DomainError("chi must be finite");
  return assemble(std::norm(chi), singles_ratio(detector, source, delta), delta.delta_t);
}

std::vector<HeightPoint> ratio_vs_height_curve(const BodySpec& body, double d_t,
                                               std::span<const double> heights,
                                               DeltaModel model) {
  body.validate();
  const SpectralMode source = SpectralMode::gaussian(0.0, d_t);
  source.validate();
  for (double h : heights)
    if (!(h >= 0.0) || !std::isfinite(h)) throw DomainError("heights must be finite and >= 0");

  std::vector<HeightPoint> out(heights.size());
  parallel_for_index(heights.size(), [&](std::size_t i) {
    const double h = heights[i];
    double delta = 0.0;
    if (model == DeltaModel::Linear) {
      delta = delta_t_approx(h, body).delta_t;
    } else {
      GroundSatelliteLayout layout;
      layout.satellite_height = h;
      const ExperimentGeometry g = layout.build(body);
      delta = model == DeltaModel::Log ? delta_t_log(g, body).delta_t
                                       : delta_t_exact(g, body).delta_t;
    }
    out[i] = {h, delta, singles_ratio(SpectralMode::flat(), source, DeltaMismatch{delta}), 1.0};
  });
  return out;
}

std::complex<double> coincidence_rate_raw(const SpectralMode& detector_k,
                                          const SpectralMode& source_k,
                                          const SpectralMode& detector_omega,
                                          const SpectralMode& source_omega, double delta_t,
                                          double offset_1, double offset_2,
                                          std::complex<double> chi_max) {
  const std::complex<double> kappa_1 = overlap(detector_k, source_k, offset_1);
  const std::complex<double> kappa_2 = overlap(detector_k, source_k, offset_2);
  const std::complex<double> chi_1 = chi_max * kappa_1;
  const std::complex<double> chi_2 = chi_max * kappa_2;
  // [a_m1, a_m1c^dag]_e carries Delta_1 - Delta_2, [a_m2, a_m2c^dag]_e the reverse.
  const std::complex<double> comm_1 =
      kappa_1 * quotient(detector_omega, source_omega, DeltaMismatch{delta_t}).value;
  const std::complex<double> comm_2 =
      kappa_2 * quotient(detector_omega, source_omega, DeltaMismatch{-delta_t}).value;
  return chi_2 * std::conj(chi_1) * comm_1 * std::conj(comm_2);
}

double coincidence_rate_raw_closed_form(double d_t, double delta_t, double offset_1,
                                        double offset_2, std::complex<double> chi_max) {
  if (!(d_t > 0.0)) throw DomainError("d_t must be positive");
  const double two_d2 = 2.0 * d_t * d_t;
  return std::norm(chi_max) *
         std::exp(-(offset_1 * offset_1 + offset_2 * offset_2 + delta_t * delta_t) / two_d2) /
         (2.0 * std::numbers::pi * d_t * d_t);
}

}  // namespace eventdecor
