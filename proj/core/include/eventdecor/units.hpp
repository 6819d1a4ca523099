#pragma once

#include <compare>

namespace eventdecor {

// Geometric units: G = c = 1, every dimensional quantity expressed in metres.
namespace constants {
/// Speed of light, m/s (exact SI value).
inline constexpr double speed_of_light = 299'792'458.0;
/// Newtonian constant of gravitation, m^3 kg^-1 s^-2.
inline constexpr double gravitational_constant = 6.674e-11;
/// Earth mass, kg.
inline constexpr double earth_mass_kg = 5.972e24;
/// Earth reference radius, m.
inline constexpr double earth_radius_m = 6.38e6;
/// Rounded Earth mass in geometric units, m (two significant figures).
inline constexpr double earth_mass_rounded_m = 4.4e-3;
}  // namespace constants

/// A length in geometric units (metres). Times, masses and inverse
/// frequencies all live here once G = c = 1.
class GeometricLength {
 public:
  constexpr GeometricLength() = default;
  constexpr explicit GeometricLength(double metres) : metres_(metres) {}

  constexpr double value() const { return metres_; }

  constexpr GeometricLength operator-() const { return GeometricLength{-metres_}; }
  constexpr GeometricLength& operator+=(GeometricLength other) {
    metres_ += other.metres_;
    return *this;
  }
  constexpr GeometricLength& operator-=(GeometricLength other) {
    metres_ -= other.metres_;
    return *this;
  }
  friend constexpr GeometricLength operator+(GeometricLength a, GeometricLength b) {
    return a += b;
  }
  friend constexpr GeometricLength operator-(GeometricLength a, GeometricLength b) {
    return a -= b;
  }
  friend constexpr GeometricLength operator*(double s, GeometricLength a) {
    return GeometricLength{s * a.metres_};
  }
  friend constexpr GeometricLength operator*(GeometricLength a, double s) { return s * a; }
  friend constexpr auto operator<=>(GeometricLength, GeometricLength) = default;

 private:
  double metres_ = 0.0;
};

/// Central body of the exterior Schwarzschild background.
struct BodySpec {
  GeometricLength mass;              ///< G M / c^2
  GeometricLength reference_radius;  ///< surface radius r_e

  /// Earth with the mass converted from kilograms using the pinned constants.
  static BodySpec earth();
  /// Earth with the commonly quoted rounded values M = 4.4e-3 m, r_e = 6.38e6 m.
  static BodySpec earth_rounded();
  /// Flat space with the given reference radius.
  static BodySpec flat(double reference_radius_m = constants::earth_radius_m);

  double schwarzschild_radius() const { return 2.0 * mass.value(); }

  /// Throws DomainError unless mass >= 0 and reference_radius > 2 M.
  void validate() const;
};

/// G m / c^2. Throws DomainError for non-positive or non-finite mass.
GeometricLength mass_kg_to_geometric(double mass_kg);
double geometric_to_mass_kg(GeometricLength mass);

/// c t. Throws DomainError for non-finite input.
GeometricLength time_to_geometric(double seconds);
double geometric_to_time(GeometricLength length);

/// Angular frequency (rad/s) to wavenumber (1/m) and back.
double angular_frequency_to_geometric(double rad_per_s);
double geometric_to_angular_frequency(double per_metre);

}  // namespace eventdecor
