#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "eventdecor_cli/scenario.hpp"

namespace eventdecor::cli {

struct OutputRow {
  double sweep_value = 0.0;  ///< SI unit of the swept quantity (m or s)
  double delta_t_m = 0.0;    ///< |Delta_t|
  double delta_t_s = 0.0;
  double ratio_event = 1.0;
  double ratio_standard = 1.0;
  CausalPrescription prescription = CausalPrescription::Bennett;
};

/// Height and offset sweeps give one row per point; delay sweeps give a
/// Bennett row followed by a Kent row per point.
std::vector<OutputRow> run_sweep(const ScenarioConfig& config);

/// Single point at the configured geometry.
OutputRow compute_point(const ScenarioConfig& config);

/// 12 significant digits, locale independent, no negative zero.
std::string format_number(double value);

void write_csv(std::ostream& out, std::span<const OutputRow> rows);

}  // namespace eventdecor::cli
