#pragma once

// Scenario configuration: a flat key = value text file, SI units throughout.
//
//   # comment
//   body.preset = earth_rounded
//   source.coherence_time_s = 30e-12
//   sweep.kind = height
//   sweep.start = 0
//   sweep.stop = 2e7
//   sweep.steps = 201

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eventdecor/causal.hpp"
#include "eventdecor/coincidence.hpp"
#include "eventdecor/spacetime.hpp"
#include "eventdecor/spectral.hpp"
#include "eventdecor/units.hpp"

namespace eventdecor::cli {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& where, const std::string& field, const std::string& message);

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class SweepKind { Height, Offset, Delay };

struct ScenarioConfig {
  struct Body {
    std::string preset = "earth";  ///< earth | earth_rounded | flat
    std::optional<double> mass_kg;
    std::optional<double> radius_m;
  };
  struct Source {
    double coherence_time_s = 30e-12;
    double center_angular_frequency_rad_s = 0.0;
  };
  struct Geometry {
    double ground_height_m = 0.0;
    double satellite_height_m = 5e5;
    double mirror_height_m = 0.0;
    double pbs_height_m = 0.0;
    std::optional<double> source_height_m;
    double offset_s = 0.0;
  };
  struct Sweep {
    SweepKind kind = SweepKind::Height;
    double start = 0.0;
    double stop = 2e7;
    long steps = 101;
  };

  Body body;
  Source source;
  Geometry geometry;
  CausalPrescription prescription = CausalPrescription::Bennett;
  DeltaModel delta_model = DeltaModel::Linear;
  bool recompute_delta = false;
  Sweep sweep;

  /// Throws ConfigError naming the first field that breaks an invariant.
  void validate() const;

  BodySpec body_spec() const;
  SpectralMode source_mode() const;
  GroundSatelliteLayout layout() const;
  std::vector<double> sweep_values() const;
};

/// Sets one key. Throws ConfigError for unknown keys or unparsable values.
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value,
                   const std::string& where = "--set");

/// Parses `key = value` lines. Diagnostics carry "name:line".
ScenarioConfig parse_config(std::istream& in, const std::string& name = "<config>",
                            ScenarioConfig base = {});

ScenarioConfig load_config(const std::string& path, ScenarioConfig base = {});

/// Splits "key=value" as given to --set.
std::pair<std::string, std::string> split_assignment(std::string_view text);

std::vector<std::string> known_keys();

std::string_view to_string(CausalPrescription p);
std::string_view to_string(SweepKind k);
std::string_view to_string(DeltaModel m);

}  // namespace eventdecor::cli
