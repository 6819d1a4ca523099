#include "eventdecor_cli/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "eventdecor/parallel.hpp"

namespace eventdecor::cli {
namespace {

/// Delta_t for the configured model at the given layout.
DeltaMismatch model_delta(const ScenarioConfig& config, const BodySpec& body,
                          const GroundSatelliteLayout& layout) {
  switch (config.delta_model) {
    case DeltaModel::Linear:
      return delta_t_approx(layout.satellite_height, body);
    case DeltaModel::Log:
      return delta_t_log(layout.build(body), body);
    case DeltaModel::Exact:
      return delta_t_causal(layout.build(body), body, config.prescription);
  }
  return {};
}

OutputRow make_row(double sweep_value, double delta_t, double ratio_event, double ratio_standard,
                   CausalPrescription prescription) {
  const double magnitude = std::abs(delta_t);
  return {sweep_value, magnitude, geometric_to_time(GeometricLength{magnitude}), ratio_event,
          ratio_standard, prescription};
}

std::vector<OutputRow> height_sweep(const ScenarioConfig& config, const BodySpec& body,
                                    const SpectralMode& source) {
  const auto heights = config.sweep_values();
  std::vector<OutputRow> rows(heights.size());
  parallel_for_index(heights.size(), [&](std::size_t i) {
    GroundSatelliteLayout layout = config.layout();
    layout.satellite_height = heights[i];
    const DeltaMismatch delta = model_delta(config, body, layout);
    rows[i] = make_row(heights[i], delta.delta_t,
                       singles_ratio(SpectralMode::flat(), source, delta), 1.0,
                       config.prescription);
  });
  return rows;
}

std::vector<OutputRow> offset_sweep(const ScenarioConfig& config, const BodySpec& body,
                                    const SpectralMode& source) {
  const auto seconds = config.sweep_values();
  std::vector<double> offsets(seconds.size());
  for (std::size_t i = 0; i < seconds.size(); ++i)
    offsets[i] = time_to_geometric(seconds[i]).value();

  // Unit chi_max makes the rates singles-normalized.
  const CoincidenceOptions options{{1.0, 0.0}, 1.0, 1.0};
  const auto curve =
      config.recompute_delta
          ? coincidence_offset_curve(source, SpectralMode::flat(), config.layout().build(body),
                                     body, offsets, options)
          : coincidence_offset_curve(source, SpectralMode::flat(),
                                     model_delta(config, body, config.layout()), offsets,
                                     options);
  std::vector<OutputRow> rows;
  rows.reserve(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i)
    rows.push_back(make_row(seconds[i], curve[i].delta_t, curve[i].c_event, curve[i].c_standard,
                            config.prescription));
  return rows;
}

std::vector<OutputRow> delay_sweep(const ScenarioConfig& config, const BodySpec& body,
                                   const SpectralMode& source) {
  const auto seconds = config.sweep_values();
  std::vector<double> delays(seconds.size());
  for (std::size_t i = 0; i < seconds.size(); ++i)
    delays[i] = time_to_geometric(seconds[i]).value();
  const auto scan =
      causal_scan(config.layout().build(body), body, source, SpectralMode::flat(), delays);
  std::vector<OutputRow> rows;
  rows.reserve(2 * scan.size());
  for (std::size_t i = 0; i < scan.size(); ++i) {
    rows.push_back(make_row(seconds[i], scan[i].delta_t_bennett, scan[i].ratio_bennett, 1.0,
                            CausalPrescription::Bennett));
    rows.push_back(make_row(seconds[i], scan[i].delta_t_kent, scan[i].ratio_kent, 1.0,
                            CausalPrescription::Kent));
  }
  return rows;
}

}  // namespace

std::vector<OutputRow> run_sweep(const ScenarioConfig& config) {
  config.validate();
  const BodySpec body = config.body_spec();
  const SpectralMode source = config.source_mode();
  switch (config.sweep.kind) {
    case SweepKind::Height: return height_sweep(config, body, source);
    case SweepKind::Offset: return offset_sweep(config, body, source);
    case SweepKind::Delay: return delay_sweep(config, body, source);
  }
  return {};
}

OutputRow compute_point(const ScenarioConfig& config) {
  config.validate();
  const BodySpec body = config.body_spec();
  const SpectralMode source = config.source_mode();
  const GroundSatelliteLayout layout = config.layout();
  const DeltaMismatch delta = model_delta(config, body, layout);
  return make_row(layout.satellite_height, delta.delta_t,
                  singles_ratio(SpectralMode::flat(), source, delta), 1.0, config.prescription);
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, std::span<const OutputRow> rows) {
  out << "sweep_value,delta_t_m,delta_t_s,ratio_event,ratio_standard,prescription\n";
  for (const OutputRow& r : rows) {
    out << format_number(r.sweep_value) << ',' << format_number(r.delta_t_m) << ','
        << format_number(r.delta_t_s) << ',' << format_number(r.ratio_event) << ','
        << format_number(r.ratio_standard) << ',' << to_string(r.prescription) << '\n';
  }
}

}  // namespace eventdecor::cli
