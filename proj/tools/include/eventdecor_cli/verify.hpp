#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eventdecor::cli {

struct VerifyOptions {
  std::size_t grid_nodes = 128;
  std::complex<double> chi_max{1e-3, 0.0};
  std::size_t cases = 10;
  std::uint64_t seed = 20240917;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Oracle-versus-analytic comparisons. Oracle preconditions (e.g. a pump
/// too strong for the one-pair truncation) propagate as exceptions.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Prints one line per check; returns true when all passed.
bool print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace eventdecor::cli
