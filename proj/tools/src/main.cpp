#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eventdecor/errors.hpp"
#include "eventdecor_cli/scenario.hpp"
#include "eventdecor_cli/sweep.hpp"
#include "eventdecor_cli/verify.hpp"

namespace {

using namespace eventdecor;
using namespace eventdecor::cli;

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kDomainError = 3,
  kNumericError = 4,
  kPreconditionError = 5,
};

/// Flags shared by the scenario subcommands.
struct ScenarioFlags {
  std::string config_path;
  std::string out_path;
  std::vector<std::string> sets;
  std::optional<double> mass_kg, radius_m, coherence_time_s, ground_height_m, satellite_height_m,
      pbs_height_m, offset_s;
  std::optional<std::string> prescription, model, preset;
  std::optional<double> start, stop;
  std::optional<long> steps;

  void attach(CLI::App* app, bool with_sweep) {
    app->add_option("--config", config_path, "Scenario file (key = value)")->check(CLI::ExistingFile);
    app->add_option("--out", out_path, "Write CSV here instead of standard output");
    app->add_option("--set", sets, "Override a config key, key=value (repeatable)");
    app->add_option("--body", preset, "Body preset: earth | earth_rounded | flat");
    app->add_option("--mass-kg", mass_kg, "Body mass, kg");
    app->add_option("--radius-m", radius_m, "Body reference radius, m");
    app->add_option("--coherence-time-s", coherence_time_s, "Source coherence time, s");
    app->add_option("--ground-height-m", ground_height_m, "Detector 1 height, m");
    app->add_option("--satellite-height-m", satellite_height_m, "Detector 2 height, m");
    app->add_option("--pbs-height-m", pbs_height_m, "Beamsplitter height, m");
    app->add_option("--offset-s", offset_s, "Extra delay of detection 2, s");
    app->add_option("--prescription", prescription, "bennett | kent");
    app->add_option("--model", model, "Delta_t model: linear | log | exact");
    if (with_sweep) {
      app->add_option("--start", start, "First sweep value (SI)");
      app->add_option("--stop", stop, "Last sweep value (SI)");
      app->add_option("--steps", steps, "Number of sweep points (>= 2)");
    }
  }

  ScenarioConfig resolve(std::optional<SweepKind> kind) const {
    ScenarioConfig config;
    if (kind) config.sweep.kind = *kind;
    if (!config_path.empty()) config = load_config(config_path, config);
    if (kind) config.sweep.kind = *kind;
    auto set = [&config](const char* key, const std::string& value) {
      apply_setting(config, key, value, "flag");
    };
    auto set_real = [&](const char* key, const std::optional<double>& v) {
      if (v) set(key, format_number(*v));
    };
    if (preset) set("body.preset", *preset);
    set_real("body.mass_kg", mass_kg);
    set_real("body.radius_m", radius_m);
    set_real("source.coherence_time_s", coherence_time_s);
    set_real("geometry.ground_height_m", ground_height_m);
    set_real("geometry.satellite_height_m", satellite_height_m);
    set_real("geometry.pbs_height_m", pbs_height_m);
    set_real("geometry.offset_s", offset_s);
    if (prescription) set("prescription", *prescription);
    if (model) set("delta.model", *model);
    set_real("sweep.start", start);
    set_real("sweep.stop", stop);
    if (steps) set("sweep.steps", std::to_string(*steps));
    for (const auto& s : sets) {
      const auto [key, value] = split_assignment(s);
      apply_setting(config, key, value, "--set");
    }
    config.validate();
    return config;
  }
};

int emit(const ScenarioFlags& flags, const std::vector<OutputRow>& rows) {
  if (flags.out_path.empty()) {
    write_csv(std::cout, rows);
    return kOk;
  }
  std::ofstream out(flags.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << flags.out_path << " for writing\n";
    return kConfigError;
  }
  write_csv(out, rows);
  return out ? kOk : kConfigError;
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return kConfigError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: precondition: " << e.what() << '\n';
    return kPreconditionError;
  } catch (const DomainError& e) {
    std::cerr << "error: domain: " << e.what() << '\n';
    return kDomainError;
  } catch (const DimensionError& e) {
    std::cerr << "error: dimension: " << e.what() << '\n';
    return kDomainError;
  } catch (const NumericError& e) {
    std::cerr << "error: numeric: " << e.what() << '\n';
    return kNumericError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-formalism decorrelation predictions for ground/satellite photon pairs"};
  app.require_subcommand(1);

  ScenarioFlags height_flags, offset_flags, causal_flags, compute_flags;
  auto* sweep_height = app.add_subcommand("sweep-height", "Ratio against detector-2 height");
  height_flags.attach(sweep_height, true);
  auto* sweep_offset = app.add_subcommand("sweep-offset", "Ratio against coincidence offset");
  offset_flags.attach(sweep_offset, true);
  auto* scan = app.add_subcommand("causal-scan", "Bennett and Kent ratios against beam-2 hold");
  causal_flags.attach(scan, true);
  auto* compute = app.add_subcommand("compute", "Single point at the configured geometry");
  compute_flags.attach(compute, false);

  VerifyOptions verify_options;
  double chi_max = verify_options.chi_max.real();
  auto* verify = app.add_subcommand("verify", "Oracle cross-checks against the analytic modules");
  verify->add_option("--grid", verify_options.grid_nodes, "Nodes per grid axis")
      ->capture_default_str();
  verify->add_option("--chi-max", chi_max, "Pump strength")->capture_default_str();
  verify->add_option("--cases", verify_options.cases, "Random (Delta_t, d_t) cases")
      ->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "Seed for the random cases")
      ->capture_default_str();

  std::optional<double> conv_mass_kg, conv_time_s, conv_omega, conv_length_m;
  auto* convert = app.add_subcommand("convert-units", "SI to geometric units and back");
  convert->add_option("--mass-kg", conv_mass_kg, "Mass, kg -> m");
  convert->add_option("--time-s", conv_time_s, "Time, s -> m");
  convert->add_option("--angular-frequency-rad-s", conv_omega, "Angular frequency, rad/s -> 1/m");
  convert->add_option("--length-m", conv_length_m, "Geometric length, m -> s and kg");
  convert->require_option(1, 0);

  CLI11_PARSE(app, argc, argv);

  if (sweep_height->parsed())
    return guarded([&] { return emit(height_flags, run_sweep(height_flags.resolve(SweepKind::Height))); });
  if (sweep_offset->parsed())
    return guarded([&] { return emit(offset_flags, run_sweep(offset_flags.resolve(SweepKind::Offset))); });
  if (scan->parsed())
    return guarded([&] { return emit(causal_flags, run_sweep(causal_flags.resolve(SweepKind::Delay))); });
  if (compute->parsed())
    return guarded([&] {
      const OutputRow row = compute_point(compute_flags.resolve(std::nullopt));
      return emit(compute_flags, {row});
    });
  if (verify->parsed())
    return guarded([&] {
      verify_options.chi_max = {chi_max, 0.0};
      return print_report(std::cout, run_verification(verify_options)) ? kOk : kCheckFailed;
    });
  if (convert->parsed())
    return guarded([&] {
      if (conv_mass_kg)
        std::cout << "mass_m=" << format_number(mass_kg_to_geometric(*conv_mass_kg).value()) << '\n';
      if (conv_time_s)
        std::cout << "length_m=" << format_number(time_to_geometric(*conv_time_s).value()) << '\n';
      if (conv_omega)
        std::cout << "wavenumber_per_m=" << format_number(angular_frequency_to_geometric(*conv_omega))
                  << '\n';
      if (conv_length_m) {
        const GeometricLength l{*conv_length_m};
        std::cout << "time_s=" << format_number(geometric_to_time(l)) << '\n'
                  << "mass_kg=" << format_number(geometric_to_mass_kg(l)) << '\n';
      }
      return kOk;
    });
  return kOk;
}
