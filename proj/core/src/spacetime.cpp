#include "eventdecor/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eventdecor/errors.hpp"
#include "eventdecor/quadrature.hpp"

namespace eventdecor {

namespace {

// An origin may sit this far below its turning radius before backtracking is
// rejected; it absorbs rounding in the tortoise inversion.
constexpr double kOriginSlack = 1e-6;
constexpr double kBisectionTolerance = 1e-9;

double mass_of(const BodySpec& body) { return body.mass.value(); }

/// ln(a / b) without losing digits when a and b are close.
double log_ratio(double a, double b) { return std::log1p((a - b) / b); }

void require_outside(double r, const BodySpec& body, const char* name) {
  if (!std::isfinite(r)) throw DomainError(std::string(name) + " must be finite");
  if (r <= body.schwarzschild_radius() || r <= 0.0)
    throw DomainError(std::string(name) + " = " + std::to_string(r) +
                      " m is not outside the Schwarzschild radius");
}

double turn_radius(Arm arm, const ExperimentGeometry& g) { return arm == Arm::One ? g.x_m : g.x_p; }
double detector_radius(Arm arm, const ExperimentGeometry& g) {
  return arm == Arm::One ? g.x_d1 : g.x_d2;
}
double detection_time(Arm arm, const ExperimentGeometry& g) {
  return arm == Arm::One ? g.t_d1 : g.t_d2;
}
double hold_of(Arm arm, const ExperimentGeometry& g) { return arm == Arm::One ? 0.0 : g.hold_2; }

/// Coordinate-minus-shell time picked up by a radial light ray between two
/// radii: 2M ln(b/a) - excess(a, b). Independent of direction of travel.
double null_leg_delta(double a, double b, const BodySpec& body) {
  if (a == b) return 0.0;
  return 2.0 * mass_of(body) * log_ratio(b, a) - shell_time_excess(a, b, body);
}

/// Bisection for r in [lo, hi] with tortoise_phase(r) == target.
double bisect_tortoise(double target, double lo, double hi, const BodySpec& body) {
  if (lo > hi) std::swap(lo, hi);
  if (target <= tortoise_phase(lo, body)) return lo;
  if (target >= tortoise_phase(hi, body)) return hi;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (tortoise_phase(mid, body) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void ExperimentGeometry::validate(const BodySpec& body) const {
  body.validate();
  require_outside(x_m, body, "x_m");
  require_outside(x_p, body, "x_p");
  require_outside(x_d1, body, "x_d1");
  require_outside(x_d2, body, "x_d2");
  for (const auto& [value, name] : {std::pair{t_d1, "t_d1"}, std::pair{t_d2, "t_d2"},
                                    std::pair{t_i, "t_i"}, std::pair{hold_2, "hold_2"}}) {
    if (!std::isfinite(value)) throw DomainError(std::string(name) + " must be finite");
  }
  if (x_d1 < x_m) throw DomainError("detector 1 must not lie below the mirror (x_d1 >= x_m)");
  if (x_d2 < x_p) throw DomainError("detector 2 must not lie below the beamsplitter (x_d2 >= x_p)");
  if (hold_2 < 0.0) throw DomainError("hold_2 must be non-negative");
}

ExperimentGeometry ExperimentGeometry::swapped() const {
  if (hold_2 != 0.0) throw DomainError("cannot swap arms while arm 2 carries a hold");
  ExperimentGeometry out = *this;
  std::swap(out.x_m, out.x_p);
  std::swap(out.x_d1, out.x_d2);
  std::swap(out.t_d1, out.t_d2);
  return out;
}

ExperimentGeometry GroundSatelliteLayout::build(const BodySpec& body) const {
  body.validate();
  for (double h : {satellite_height, ground_height, mirror_height, pbs_height})
    if (!(h >= 0.0)) throw DomainError("heights must be non-negative");
  const double r_e = body.reference_radius.value();
  const double source = source_height.value_or(std::max(mirror_height, pbs_height));
  if (source < mirror_height || source < pbs_height)
    throw DomainError("source must not lie below the mirror or the beamsplitter");

  ExperimentGeometry g;
  g.x_m = r_e + mirror_height;
  g.x_p = r_e + pbs_height;
  g.x_d1 = r_e + ground_height;
  g.x_d2 = r_e + satellite_height;
  g.t_i = t_i;
  g.hold_2 = hold_2;
  const double x_s = r_e + source;
  const double s_star = tortoise_phase(x_s, body);
  const double m_star = tortoise_phase(g.x_m, body);
  const double p_star = tortoise_phase(g.x_p, body);
  g.t_d1 = t_i + (s_star - m_star) + (tortoise_phase(g.x_d1, body) - m_star);
  g.t_d2 = t_i + (s_star - p_star) + hold_2 + (tortoise_phase(g.x_d2, body) - p_star) + offset;
  g.validate(body);
  return g;
}

double tortoise_phase(double x, const BodySpec& body) {
  require_outside(x, body, "radius");
  return x + 2.0 * mass_of(body) * std::log(x);
}

double inverse_tortoise(double value, const BodySpec& body) {
  const double m = mass_of(body);
  if (!std::isfinite(value)) throw DomainError("tortoise value must be finite");
  if (m == 0.0) {
    if (value <= 0.0) throw DomainError("tortoise value has no positive preimage");
    return value;
  }
  const double rs = 2.0 * m;
  if (value <= rs + rs * std::log(rs))
    throw DomainError("tortoise value " + std::to_string(value) +
                      " is not attained outside the Schwarzschild radius");
  // r* is increasing and concave in r, so Newton from the right converges monotonically.
  double r = std::max(value - rs * std::log(std::max(std::abs(value), 1.0)), 2.0 * rs);
  for (int i = 0; i < 100; ++i) {
    const double f = r + rs * std::log(r) - value;
    const double step = f / (1.0 + rs / r);
    double next = r - step;
    if (next <= rs) next = 0.5 * (r + rs);
    if (std::abs(next - r) <= 4.0 * std::numeric_limits<double>::epsilon() * r) return next;
    r = next;
  }
  return r;
}

double propagation_phase(Arm arm, const ExperimentGeometry& geom, const BodySpec& body) {
  const double turn = turn_radius(arm, geom);
  const double det = detector_radius(arm, geom);
  return 2.0 * tortoise_phase(turn, body) + detection_time(arm, geom) - tortoise_phase(det, body);
}

BacktrackedOrigins backtrack_origins(const ExperimentGeometry& geom, const BodySpec& body) {
  geom.validate(body);
  BacktrackedOrigins o;
  o.x_i1 = -geom.t_i + propagation_phase(Arm::One, geom, body);
  o.x_i2 = -geom.t_i + propagation_phase(Arm::Two, geom, body) - geom.hold_2;

  auto radius = [&](double tortoise, double turn, const char* which) {
    const double r = inverse_tortoise(tortoise, body);
    if (r < turn - kOriginSlack)
      throw DomainError(std::string(which) +
                        ": t_i is later than the ray's turning event (origin radius " +
                        std::to_string(r) + " m below turning radius " + std::to_string(turn) +
                        " m)");
    return std::max(r, turn);
  };
  o.r_i1 = radius(o.x_i1, geom.x_m, "arm 1");
  o.r_i2 = radius(o.x_i2, geom.x_p, "arm 2");
  return o;
}

double shell_time_excess(double r_from, double r_to, const BodySpec& body) {
  require_outside(r_from, body, "r_from");
  require_outside(r_to, body, "r_to");
  const double m = mass_of(body);
  if (m == 0.0 || r_from == r_to) return 0.0;
  // 1/sqrt(1-u) - 1 = u / (s (1 + s)) with s = sqrt(1-u), u = 2M/r.
  auto integrand = [m](double r) {
    const double u = 2.0 * m / r;
    const double s = std::sqrt(1.0 - u);
    return u / (s * (1.0 + s));
  };
  return quadrature::adaptive(integrand, r_from, r_to, {1e-15, 1e-13});
}

double shell_time_segment(double r_from, double r_to, const BodySpec& body) {
  return (r_to - r_from) + shell_time_excess(r_from, r_to, body);
}

double shell_time_segment_weak(double r_from, double r_to, const BodySpec& body) {
  require_outside(r_from, body, "r_from");
  require_outside(r_to, body, "r_to");
  return (r_to - r_from) + mass_of(body) * log_ratio(r_to, r_from);
}

double tau_arm(Arm arm, const ExperimentGeometry& geom, const BodySpec& body) {
  const auto origins = backtrack_origins(geom, body);
  const double turn = turn_radius(arm, geom);
  const double origin = arm == Arm::One ? origins.r_i1 : origins.r_i2;
  return shell_time_segment(turn, detector_radius(arm, geom), body) +
         shell_time_segment(turn, origin, body) + hold_of(arm, geom);
}

double tau_arm_weak(Arm arm, const ExperimentGeometry& geom, const BodySpec& body) {
  const auto origins = backtrack_origins(geom, body);
  const double turn = turn_radius(arm, geom);
  const double det = detector_radius(arm, geom);
  const double origin = arm == Arm::One ? origins.r_i1 : origins.r_i2;
  return -geom.t_i + detection_time(arm, geom) -
         mass_of(body) * (log_ratio(det, turn) + log_ratio(origin, turn));
}

NullPath arm_path(Arm arm, const ExperimentGeometry& geom, const BodySpec& body) {
  const auto origins = backtrack_origins(geom, body);
  NullPath p;
  p.t_start = geom.t_i;
  p.origin = arm == Arm::One ? origins.r_i1 : origins.r_i2;
  p.turn = turn_radius(arm, geom);
  p.detector = detector_radius(arm, geom);
  p.hold = hold_of(arm, geom);
  p.t_detect = detection_time(arm, geom);
  p.t_turn_leave = p.t_detect - (tortoise_phase(p.detector, body) - tortoise_phase(p.turn, body));
  p.t_turn_arrive = p.t_turn_leave - p.hold;
  return p;
}

double NullPath::tortoise_at(double t, const BodySpec& body) const {
  const double turn_star = tortoise_phase(turn, body);
  if (t <= t_turn_arrive) return turn_star + (t_turn_arrive - t);
  if (t <= t_turn_leave) return turn_star;
  return turn_star + (t - t_turn_leave);
}

double NullPath::radius_at(double t, const BodySpec& body) const {
  const double target = tortoise_at(t, body);
  if (t <= t_turn_arrive) return bisect_tortoise(target, turn, origin, body);
  if (t <= t_turn_leave) return turn;
  return bisect_tortoise(target, turn, detector, body);
}

double arm_delta_offset(Arm arm, const ExperimentGeometry& geom, const BodySpec& body,
                        std::optional<double> until) {
  const NullPath path = arm_path(arm, geom, body);
  const double ingoing = null_leg_delta(path.turn, path.origin, body);
  if (!until || *until >= path.t_detect)
    return ingoing + null_leg_delta(path.turn, path.detector, body);

  const double t = *until;
  if (t <= path.t_start) return 0.0;
  if (t <= path.t_turn_arrive) {
    const double r = path.radius_at(t, body);
    return null_leg_delta(r, path.origin, body);
  }
  if (t <= path.t_turn_leave) return ingoing;
  const double r = path.radius_at(t, body);
  return ingoing + null_leg_delta(path.turn, r, body);
}

DeltaMismatch delta_t_exact(const ExperimentGeometry& geom, const BodySpec& body) {
  return {arm_delta_offset(Arm::One, geom, body) - arm_delta_offset(Arm::Two, geom, body)};
}

DeltaMismatch delta_t_log(const ExperimentGeometry& geom, const BodySpec& body) {
  const auto o = backtrack_origins(geom, body);
  const double m = mass_of(body);
  return {m * (log_ratio(geom.x_d1, geom.x_d2) + log_ratio(o.r_i1, o.r_i2) +
               2.0 * log_ratio(geom.x_p, geom.x_m))};
}

DeltaMismatch delta_t_approx(double height, const BodySpec& body) {
  body.validate();
  if (!(height >= 0.0) || !std::isfinite(height))
    throw DomainError("height must be finite and non-negative");
  return {mass_of(body) * height / body.reference_radius.value()};
}

}  // namespace eventdecor
