#pragma once

// Causal prescriptions for where the non-linear evolution of each beam ends.
//
// Bennett: every beam evolves up to its own detection.
// Kent: a beam stops evolving once it enters the forward light cone of the
// other beam's detection event. The light-cone test uses the tortoise
// coordinate, in which radial light rays move at unit speed.

#include <optional>
#include <span>
#include <vector>

#include "eventdecor/spacetime.hpp"
#include "eventdecor/spectral.hpp"

namespace eventdecor {

enum class CausalPrescription { Bennett, Kent };

/// Detection events in (t, r*) coordinates.
struct DetectionEvents {
  double t_d1 = 0.0;
  double t_d2 = 0.0;
  double x_1 = 0.0;
  double x_2 = 0.0;
};

/// t_d1 if x_2 + t_d2 >= x_1 + t_d1, else (t_d1 + t_d2 + x_2 - x_1) / 2.
double effective_endpoint(const DetectionEvents& events);

/// Detection times with the tortoise positions of the two detectors.
DetectionEvents detection_events(const ExperimentGeometry& geom, const BodySpec& body);

enum class Separation { Spacelike, Null, Timelike };

/// Separation of the two detection events, with a null band of
/// light_cone_tolerance(events) around the cone.
Separation classify_separation(const ExperimentGeometry& geom, const BodySpec& body);

/// Width of the band treated as on the light cone: 1e-9 m or 16 ulp of the
/// largest coordinate involved, whichever is larger.
double light_cone_tolerance(const DetectionEvents& events);

/// First coordinate time at which `path` is strictly inside the forward light
/// cone of the event (event_t, event_tortoise), or nullopt if it stays outside
/// up to its detection. Bisection to one ulp of t.
std::optional<double> light_cone_entry(const NullPath& path, double event_t,
                                       double event_tortoise, const BodySpec& body,
                                       double tolerance);

struct KentEndpoints {
  double t_1 = 0.0;
  double t_2 = 0.0;
  bool truncated_1 = false;
  bool truncated_2 = false;
};

/// Kent endpoint of each beam against the other beam's detection event.
KentEndpoints kent_endpoints(const ExperimentGeometry& geom, const BodySpec& body);

/// Bennett: delta_t_exact. Kent: each arm's Delta integrated up to its Kent
/// endpoint; identical to Bennett when neither beam is truncated.
DeltaMismatch delta_t_causal(const ExperimentGeometry& geom, const BodySpec& body,
                             CausalPrescription prescription);

struct CausalScanPoint {
  double delay = 0.0;
  double delta_t_kent = 0.0;
  double delta_t_bennett = 0.0;
  double ratio_kent = 1.0;
  double ratio_bennett = 1.0;
};

/// Holds beam 2 at its beamsplitter for each delay (detection 2 moves later
/// by the same amount) and reports both prescriptions.
std::vector<CausalScanPoint> causal_scan(const ExperimentGeometry& geom, const BodySpec& body,
                                         const SpectralMode& source,
                                         const SpectralMode& detector,
                                         std::span<const double> delays);

/// Extra hold of beam 2 beyond which it enters the forward light cone of
/// detection 1 while still at the beamsplitter:
/// t_d1 + (r*_p - r*_d1) - (departure time of beam 2 from the beamsplitter).
/// Assumes detector 1 lies below the beamsplitter; may be negative.
double kent_transition_delay(const ExperimentGeometry& geom, const BodySpec& body);

}  // namespace eventdecor
