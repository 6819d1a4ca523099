#pragma once

// Radial null propagation in the exterior Schwarzschild metric.
//
// Conventions: coordinate time t and radius r in geometric metres; the
// tortoise coordinate is r* = r + 2M ln(r), with ln taken of the numeric value
// of r in metres. Outgoing radial light rays satisfy t - r* = const, ingoing
// rays t + r* = const.
//
// Each arm of the experiment is a single null path: it starts at its origin
// radius at the common initial time t_i, falls inward to a turning radius
// (mirror x_m for arm 1, beamsplitter x_p for arm 2), optionally waits there,
// and then travels outward to its detector.

#include <optional>

#include "eventdecor/units.hpp"

namespace eventdecor {

enum class Arm { One = 1, Two = 2 };

struct ExperimentGeometry {
  double x_m = 0.0;   ///< arm-1 turning radius (mirror)
  double x_p = 0.0;   ///< arm-2 turning radius (beamsplitter)
  double x_d1 = 0.0;  ///< detector-1 radius
  double x_d2 = 0.0;  ///< detector-2 radius
  double t_d1 = 0.0;  ///< coordinate detection time, arm 1
  double t_d2 = 0.0;  ///< coordinate detection time, arm 2
  double t_i = 0.0;   ///< common initial time
  /// Coordinate duration arm 2 is held at x_p before leaving for its detector.
  /// The hold is a pure delay: it advances t and the local clock equally.
  double hold_2 = 0.0;

  /// Throws DomainError unless every radius is outside 2M, x_d1 >= x_m,
  /// x_d2 >= x_p, hold_2 >= 0 and all values are finite.
  void validate(const BodySpec& body) const;

  /// Swap the roles of the two arms. Requires hold_2 == 0.
  ExperimentGeometry swapped() const;
};

/// Ground/satellite layout. Heights are measured from the body's reference
/// radius. Both photons of a pair leave the source radius at t_i.
struct GroundSatelliteLayout {
  double satellite_height = 5e5;  ///< detector 2
  double ground_height = 0.0;     ///< detector 1
  double mirror_height = 0.0;
  double pbs_height = 0.0;
  /// Source height; defaults to max(mirror_height, pbs_height).
  std::optional<double> source_height;
  double t_i = 0.0;
  /// Extra coordinate delay of detection 2 relative to the common-origin
  /// timing (the coincidence-window offset).
  double offset = 0.0;
  double hold_2 = 0.0;

  ExperimentGeometry build(const BodySpec& body) const;
};

/// x + 2M ln(x). Throws DomainError for x <= 2M.
double tortoise_phase(double x, const BodySpec& body);

/// Radius r > 2M with tortoise_phase(r) == value. Throws DomainError when the
/// value is not attained outside the horizon.
double inverse_tortoise(double value, const BodySpec& body);

/// phi_j^-: phase a mode acquires between its turning point and its detector.
double propagation_phase(Arm arm, const ExperimentGeometry& geom, const BodySpec& body);

/// Initial mode coordinates found by following each arm's null ray back from
/// its detection event to t_i.
struct BacktrackedOrigins {
  double x_i1 = 0.0;  ///< -t_i + phi_1^- : tortoise coordinate of the arm-1 origin
  double x_i2 = 0.0;  ///< -t_i + phi_2^- - hold_2
  double r_i1 = 0.0;  ///< radius of the arm-1 origin
  double r_i2 = 0.0;
};

/// Throws DomainError if an origin lies below its turning radius, i.e. t_i is
/// later than the ray's turning event.
BacktrackedOrigins backtrack_origins(const ExperimentGeometry& geom, const BodySpec& body);

/// Shell-observer time accumulated by a radial light ray between two radii,
/// integral of dr / sqrt(1 - 2M/r). Signed: reversing the radii flips the sign.
double shell_time_segment(double r_from, double r_to, const BodySpec& body);

/// (r_to - r_from) + M ln(r_to / r_from), valid for r >> 2M.
double shell_time_segment_weak(double r_from, double r_to, const BodySpec& body);

/// shell_time_segment minus its flat-space part, integral of
/// [1/sqrt(1 - 2M/r) - 1] dr. Kept separate because it is tiny next to the
/// segment length.
double shell_time_excess(double r_from, double r_to, const BodySpec& body);

/// Total shell time tau_j from t_i to the arm's detection, by quadrature.
double tau_arm(Arm arm, const ExperimentGeometry& geom, const BodySpec& body);

/// Weak-field closed form -t_i + t_dj - M ln(x_dj x_ij / x_turn^2) (+ hold for arm 2).
double tau_arm_weak(Arm arm, const ExperimentGeometry& geom, const BodySpec& body);

struct DeltaMismatch {
  double delta_t = 0.0;  ///< Delta_1 - Delta_2, metres
};

/// Delta_j - t_i = t_dj - tau_j - t_i, evaluated from the small per-segment
/// differences between coordinate and shell time so no precision is lost to
/// the large radii. If `until` is given the path is truncated at that
/// coordinate time (used by the causal prescriptions).
double arm_delta_offset(Arm arm, const ExperimentGeometry& geom, const BodySpec& body,
                        std::optional<double> until = std::nullopt);

/// Delta_t = (t_d1 - tau_1) - (t_d2 - tau_2) with quadrature shell times.
DeltaMismatch delta_t_exact(const ExperimentGeometry& geom, const BodySpec& body);

/// Closed form M ln(x_d1 x_i1 x_p^2 / (x_d2 x_i2 x_m^2)), radii of the origins.
DeltaMismatch delta_t_log(const ExperimentGeometry& geom, const BodySpec& body);

/// M h / r_e, the magnitude of Delta_t for a detector raised by h above the
/// rest of the apparatus (h << r_e).
DeltaMismatch delta_t_approx(double height, const BodySpec& body);

/// Piecewise-linear trajectory of one arm in (t, r*) coordinates.
struct NullPath {
  double t_start = 0.0;      ///< t_i
  double origin = 0.0;       ///< origin radius
  double turn = 0.0;         ///< turning radius
  double detector = 0.0;     ///< detector radius
  double hold = 0.0;         ///< wait at the turning radius
  double t_turn_arrive = 0.0;
  double t_turn_leave = 0.0;
  double t_detect = 0.0;

  /// Tortoise coordinate of the photon at coordinate time t in [t_start, t_detect].
  double tortoise_at(double t, const BodySpec& body) const;
  /// Radius at time t; bisection on the tortoise relation to 1e-9 m.
  double radius_at(double t, const BodySpec& body) const;
};

NullPath arm_path(Arm arm, const ExperimentGeometry& geom, const BodySpec& body);

}  // namespace eventdecor
