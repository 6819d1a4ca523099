#include "eventdecor_cli/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>

namespace eventdecor::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view text, const std::string& where, std::string_view key) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v))
    throw ConfigError(where, std::string(key),
                      "expected a finite number, got '" + std::string(text) + "'");
  return v;
}

long parse_integer(std::string_view text, const std::string& where, std::string_view key) {
  long v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError(where, std::string(key),
                      "expected an integer, got '" + std::string(text) + "'");
  return v;
}

bool parse_bool(std::string_view text, const std::string& where, std::string_view key) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(where, std::string(key), "expected true or false, got '" + std::string(text) + "'");
}

template <class E>
E parse_choice(std::string_view text, const std::map<std::string_view, E>& choices,
               const std::string& where, std::string_view key) {
  if (auto it = choices.find(text); it != choices.end()) return it->second;
  std::string allowed;
  for (const auto& [name, _] : choices) allowed += (allowed.empty() ? "" : "|") + std::string(name);
  throw ConfigError(where, std::string(key),
                    "expected one of " + allowed + ", got '" + std::string(text) + "'");
}

using Setter = std::function<void(ScenarioConfig&, std::string_view, const std::string&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> t;
    auto real = [&t](const char* key, auto member) {
      t[key] = [key, member](ScenarioConfig& c, std::string_view v, const std::string& w) {
        member(c) = parse_real(v, w, key);
      };
    };
    t["body.preset"] = [](ScenarioConfig& c, std::string_view v, const std::string& w) {
      static const std::map<std::string_view, std::string_view> presets{
          {"earth", "earth"}, {"earth_rounded", "earth_rounded"}, {"flat", "flat"}};
      c.body.preset = std::string(parse_choice(v, presets, w, "body.preset"));
    };
    t["body.mass_kg"] = [](ScenarioConfig& c, std::string_view v, const std::string& w) {
      c.body.mass_kg = parse_real(v, w, "body.mass_kg");
    };
    t["body.radius_m"] = [](ScenarioConfig& c, std::string_view v, const std::string& w) {
      c.body.radius_m = parse_real(v, w, "body.radius_m");
    };
    real("source.coherence_time_s", [](ScenarioConfig& c) -> double& { return c.source.coherence_time_s; });
    real("source.center_angular_frequency_rad_s",
         [](ScenarioConfig& c) -> double& { return c.source.center_angular_frequency_rad_s; });
    real("geometry.ground_height_m", [](ScenarioConfig& c) -> double& { return c.geometry.ground_height_m; });
    real("geometry.satellite_height_m",
         [](ScenarioConfig& c) -> double& { return c.geometry.satellite_height_m; });
    real("geometry.mirror_height_m", [](ScenarioConfig& c) -> double& { return c.geometry.mirror_height_m; });
    real("geometry.pbs_height_m", [](ScenarioConfig& c) -> double& { return c.geometry.pbs_height_m; });
    t["geometry.source_height_m"] = [](ScenarioConfig& c, std::string_view v, const std::string& w) {
      c.geometry.source_height_m = parse_real(v, w, "geometry.source_height_m");
    };
    real("geometry.offset_s", [](ScenarioConfig& c) -> double& { return c.geometry.offset_s; });
    t["prescription"] = [](ScenarioConfig& c, std::string_view v, const std::string& w) {
      c.prescription = parse_choice<CausalPrescription>(
          v, {{"bennett", CausalPrescription::Bennett}, {"kent", CausalPrescription::Kent}}, w,
          "prescription");
    };
    t["delta.model"] = [](ScenarioConfig& c, std::string_view v, const std::string& w) {
      c.delta_model = parse_choice<DeltaModel>(
          v, {{"linear", DeltaModel::Linear}, {"log", DeltaModel::Log}, {"exact", DeltaModel::Exact}},
          w, "delta.model");
    };
    t["delta.recompute_per_offset"] = [](ScenarioConfig& c, std::string_view v, const std::string& w) {
      c.recompute_delta = parse_bool(v, w, "delta.recompute_per_offset");
    };
    t["sweep.kind"] = [](ScenarioConfig& c, std::string_view v, const std::string& w) {
      c.sweep.kind = parse_choice<SweepKind>(
          v, {{"height", SweepKind::Height}, {"offset", SweepKind::Offset}, {"delay", SweepKind::Delay}},
          w, "sweep.kind");
    };
    real("sweep.start", [](ScenarioConfig& c) -> double& { return c.sweep.start; });
    real("sweep.stop", [](ScenarioConfig& c) -> double& { return c.sweep.stop; });
    t["sweep.steps"] = [](ScenarioConfig& c, std::string_view v, const std::string& w) {
      c.sweep.steps = parse_integer(v, w, "sweep.steps");
    };
    return t;
  }();
  return table;
}

}  // namespace

ConfigError::ConfigError(const std::string& where, const std::string& field,
                         const std::string& message)
    : std::runtime_error(where + ": field '" + field + "': " + message), field_(field) {}

void ScenarioConfig::validate() const {
  const std::string where = "scenario";
  auto require = [&](bool ok, const char* field, const char* message) {
    if (!ok) throw ConfigError(where, field, message);
  };
  require(!body.mass_kg || *body.mass_kg > 0.0, "body.mass_kg", "must be > 0");
  require(!body.radius_m || *body.radius_m > 0.0, "body.radius_m", "must be > 0");
  require(source.coherence_time_s > 0.0, "source.coherence_time_s", "must be > 0");
  require(geometry.ground_height_m >= 0.0, "geometry.ground_height_m", "must be >= 0");
  require(geometry.satellite_height_m >= 0.0, "geometry.satellite_height_m", "must be >= 0");
  require(geometry.mirror_height_m >= 0.0, "geometry.mirror_height_m", "must be >= 0");
  require(geometry.pbs_height_m >= 0.0, "geometry.pbs_height_m", "must be >= 0");
  require(!geometry.source_height_m || *geometry.source_height_m >= 0.0,
          "geometry.source_height_m", "must be >= 0");
  require(sweep.steps >= 2, "sweep.steps", "must be >= 2");
  require(sweep.stop >= sweep.start, "sweep.stop", "must be >= sweep.start");
  if (sweep.kind == SweepKind::Height)
    require(sweep.start >= 0.0, "sweep.start", "heights must be >= 0");
  if (sweep.kind == SweepKind::Delay)
    require(sweep.start >= 0.0, "sweep.start", "delays must be >= 0");
  if (recompute_delta)
    require(delta_model == DeltaModel::Exact, "delta.recompute_per_offset",
            "requires delta.model = exact");
}

BodySpec ScenarioConfig::body_spec() const {
  BodySpec b = body.preset == "earth_rounded" ? BodySpec::earth_rounded()
               : body.preset == "flat"        ? BodySpec::flat()
                                              : BodySpec::earth();
  if (body.mass_kg) b.mass = mass_kg_to_geometric(*body.mass_kg);
  if (body.radius_m) b.reference_radius = GeometricLength{*body.radius_m};
  b.validate();
  return b;
}

SpectralMode ScenarioConfig::source_mode() const {
  const double d_t = time_to_geometric(source.coherence_time_s).value();
  return SpectralMode::gaussian(angular_frequency_to_geometric(source.center_angular_frequency_rad_s),
                                d_t);
}

GroundSatelliteLayout ScenarioConfig::layout() const {
  GroundSatelliteLayout l;
  l.satellite_height = geometry.satellite_height_m;
  l.ground_height = geometry.ground_height_m;
  l.mirror_height = geometry.mirror_height_m;
  l.pbs_height = geometry.pbs_height_m;
  l.source_height = geometry.source_height_m;
  l.offset = time_to_geometric(geometry.offset_s).value();
  return l;
}

std::vector<double> ScenarioConfig::sweep_values() const {
  std::vector<double> v(static_cast<std::size_t>(sweep.steps));
  const double last = static_cast<double>(sweep.steps - 1);
  for (long i = 0; i < sweep.steps; ++i) {
    const double f = static_cast<double>(i);
    v[static_cast<std::size_t>(i)] = (sweep.start * (last - f) + sweep.stop * f) / last;
  }
  v.front() = sweep.start;
  v.back() = sweep.stop;
  return v;
}

void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value,
                   const std::string& where) {
  const auto& table = setters();
  auto it = table.find(key);
  if (it == table.end()) throw ConfigError(where, std::string(key), "unknown key");
  if (value.empty()) throw ConfigError(where, std::string(key), "missing value");
  it->second(config, value, where);
}

ScenarioConfig parse_config(std::istream& in, const std::string& name, ScenarioConfig base) {
  std::string line;
  std::set<std::string, std::less<>> seen;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string where = name + ":" + std::to_string(number);
    std::string_view text = line;
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(where, std::string(text), "expected 'key = value'");
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError(where, "", "missing key before '='");
    if (!seen.insert(std::string(key)).second)
      throw ConfigError(where, std::string(key), "duplicate key");
    apply_setting(base, key, value, where);
  }
  return base;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "--config", "cannot open file");
  return parse_config(in, path, std::move(base));
}

std::pair<std::string, std::string> split_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError("--set", std::string(text), "expected key=value");
  return {std::string(trim(text.substr(0, eq))), std::string(trim(text.substr(eq + 1)))};
}

std::vector<std::string> known_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : setters()) keys.push_back(k);
  return keys;
}

std::string_view to_string(CausalPrescription p) {
  return p == CausalPrescription::Kent ? "kent" : "bennett";
}

std::string_view to_string(SweepKind k) {
  switch (k) {
    case SweepKind::Height: return "height";
    case SweepKind::Offset: return "offset";
    case SweepKind::Delay: return "delay";
  }
  return "height";
}

std::string_view to_string(DeltaModel m) {
  switch (m) {
    case DeltaModel::Linear: return "linear";
    case DeltaModel::Log: return "log";
    case DeltaModel::Exact: return "exact";
  }
  return "linear";
}

}  // namespace eventdecor::cli
