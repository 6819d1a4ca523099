#include "eventdecor/units.hpp"

#include <cmath>
#include <string>

#include "eventdecor/errors.hpp"

namespace eventdecor {

namespace {
constexpr double kMassFactor =
    constants::gravitational_constant / (constants::speed_of_light * constants::speed_of_light);

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}
}  // namespace

BodySpec BodySpec::earth() {
  return BodySpec{mass_kg_to_geometric(constants::earth_mass_kg),
                  GeometricLength{constants::earth_radius_m}};
}

BodySpec BodySpec::earth_rounded() {
  return BodySpec{GeometricLength{constants::earth_mass_rounded_m},
                  GeometricLength{constants::earth_radius_m}};
}

BodySpec BodySpec::flat(double reference_radius_m) {
  return BodySpec{GeometricLength{0.0}, GeometricLength{reference_radius_m}};
}

void BodySpec::validate() const {
  require_finite(mass.value(), "body mass");
  require_finite(reference_radius.value(), "body reference radius");
  if (mass.value() < 0.0) throw DomainError("body mass must be non-negative");
  if (reference_radius.value() <= schwarzschild_radius())
    throw DomainError("body reference radius must lie outside the Schwarzschild radius 2M");
}

GeometricLength mass_kg_to_geometric(double mass_kg) {
  require_finite(mass_kg, "mass");
  if (mass_kg <= 0.0) throw DomainError("mass must be positive");
  return GeometricLength{kMassFactor * mass_kg};
}

double geometric_to_mass_kg(GeometricLength mass) { return mass.value() / kMassFactor; }

GeometricLength time_to_geometric(double seconds) {
  require_finite(seconds, "time");
  return GeometricLength{constants::speed_of_light * seconds};
}

double geometric_to_time(GeometricLength length) {
  return length.value() / constants::speed_of_light;
}

double angular_frequency_to_geometric(double rad_per_s) {
  require_finite(rad_per_s, "angular frequency");
  return rad_per_s / constants::speed_of_light;
}

double geometric_to_angular_frequency(double per_metre) {
  return per_metre * constants::speed_of_light;
}

}  // namespace eventdecor
