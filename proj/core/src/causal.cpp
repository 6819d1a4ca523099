#include "eventdecor/causal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eventdecor/parallel.hpp"
#include "eventdecor/coincidence.hpp"
#include "eventdecor/errors.hpp"

namespace eventdecor {

double effective_endpoint(const DetectionEvents& e) {
  if (e.x_2 + e.t_d2 >= e.x_1 + e.t_d1) return e.t_d1;
  return 0.5 * (e.t_d1 + e.t_d2 + e.x_2 - e.x_1);
}

DetectionEvents detection_events(const ExperimentGeometry& geom, const BodySpec& body) {
  geom.validate(body);
  return {geom.t_d1, geom.t_d2, tortoise_phase(geom.x_d1, body),
          tortoise_phase(geom.x_d2, body)};
}

double light_cone_tolerance(const DetectionEvents& e) {
  const double scale = std::max({std::abs(e.t_d1), std::abs(e.t_d2), std::abs(e.x_1),
                                 std::abs(e.x_2), 1.0});
  return std::max(1e-9, 16.0 * std::numeric_limits<double>::epsilon() * scale);
}

Separation classify_separation(const ExperimentGeometry& geom, const BodySpec& body) {
  const DetectionEvents e = detection_events(geom, body);
  const double tol = light_cone_tolerance(e);
  const double interval = std::abs(e.t_d2 - e.t_d1) - std::abs(e.x_2 - e.x_1);
  if (interval > tol) return Separation::Timelike;
  if (interval < -tol) return Separation::Spacelike;
  return Separation::Null;
}

std::optional<double> light_cone_entry(const NullPath& path, double event_t,
                                       double event_tortoise, const BodySpec& body,
                                       double tolerance) {
  // f is non-decreasing because the beam never outruns light.
  auto inside = [&](double t) {
    return (t - event_t) - std::abs(path.tortoise_at(t, body) - event_tortoise) > tolerance;
  };
  if (!inside(path.t_detect)) return std::nullopt;
  if (inside(path.t_start)) return path.t_start;
  double lo = path.t_start;
  double hi = path.t_detect;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (inside(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

KentEndpoints kent_endpoints(const ExperimentGeometry& geom, const BodySpec& body) {
  const DetectionEvents e = detection_events(geom, body);
  const double tol = light_cone_tolerance(e);
  const NullPath p1 = arm_path(Arm::One, geom, body);
  const NullPath p2 = arm_path(Arm::Two, geom, body);
  KentEndpoints out{geom.t_d1, geom.t_d2, false, false};
  if (auto t = light_cone_entry(p1, e.t_d2, e.x_2, body, tol)) {
    out.t_1 = *t;
    out.truncated_1 = true;
  }
  if (auto t = light_cone_entry(p2, e.t_d1, e.x_1, body, tol)) {
    out.t_2 = *t;
    out.truncated_2 = true;
  }
  return out;
}

DeltaMismatch delta_t_causal(const ExperimentGeometry& geom, const BodySpec& body,
                             CausalPrescription prescription) {
  if (prescription == CausalPrescription::Bennett) return delta_t_exact(geom, body);
  const KentEndpoints k = kent_endpoints(geom, body);
  if (!k.truncated_1 && !k.truncated_2) return delta_t_exact(geom, body);
  const double d1 = k.truncated_1 ? arm_delta_offset(Arm::One, geom, body, k.t_1)
                                  : arm_delta_offset(Arm::One, geom, body);
  const double d2 = k.truncated_2 ? arm_delta_offset(Arm::Two, geom, body, k.t_2)
                                  : arm_delta_offset(Arm::Two, geom, body);
  return {d1 - d2};
}

std::vector<CausalScanPoint> causal_scan(const ExperimentGeometry& geom, const BodySpec& body,
                                         const SpectralMode& source,
                                         const SpectralMode& detector,
                                         std::span<const double> delays) {
  geom.validate(body);
  for (double d : delays)
    if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("delays must be finite and >= 0");
  std::vector<CausalScanPoint> out(delays.size());
  parallel_for_index(delays.size(), [&](std::size_t i) {
    ExperimentGeometry g = geom;
    g.hold_2 += delays[i];
    g.t_d2 += delays[i];
    const DeltaMismatch bennett = delta_t_causal(g, body, CausalPrescription::Bennett);
    const DeltaMismatch kent = delta_t_causal(g, body, CausalPrescription::Kent);
    out[i] = {delays[i], kent.delta_t, bennett.delta_t, singles_ratio(detector, source, kent),
              singles_ratio(detector, source, bennett)};
  });
  return out;
}

double kent_transition_delay(const ExperimentGeometry& geom, const BodySpec& body) {
  const DetectionEvents e = detection_events(geom, body);
  const NullPath p2 = arm_path(Arm::Two, geom, body);
  return e.t_d1 + (tortoise_phase(geom.x_p, body) - e.x_1) - p2.t_turn_leave;
}

}  // namespace eventdecor
