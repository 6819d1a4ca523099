#include "eventdecor_cli/verify.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "eventdecor/coincidence.hpp"
#include "eventdecor/oracle.hpp"
#include "eventdecor_cli/sweep.hpp"

namespace eventdecor::cli {
namespace {

constexpr double kCompleteness = 1e-4;
constexpr double kPathAgreement = 1e-6;
constexpr double kAnalyticAgreement = 1e-4;

struct Case {
  double d_t = 0.0;
  double delta_t = 0.0;
  double offset_2 = 0.0;
};

std::vector<Case> random_cases(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> log_width(std::log(1e-4), std::log(1e-2));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Case> cases;
  for (std::size_t i = 0; i < options.cases; ++i) {
    const double d = std::exp(log_width(rng));
    cases.push_back({d, 3.0 * unit(rng) * d, (2.0 * unit(rng) - 1.0) * d});
  }
  return cases;
}

oracle::BruteForceInputs inputs_for(const Case& c) {
  oracle::BruteForceInputs in;
  in.source = SpectralMode::gaussian(0.0, c.d_t);
  in.delta_1 = c.delta_t;
  in.offset_2 = c.offset_2;
  return in;
}

double analytic(const Case& c, std::complex<double> chi) {
  const SpectralMode src = SpectralMode::gaussian(0.0, c.d_t);
  return coincidence_rate_raw(SpectralMode::flat(), src, SpectralMode::flat(), src, c.delta_t, 0.0,
                              c.offset_2, chi)
      .real();
}

double relative(std::complex<double> value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

std::string sci(double v) { return format_number(v); }

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const std::size_t n = options.grid_nodes;
  const auto cases = random_cases(options);
  std::vector<CheckResult> out;

  {
    const SpectralMode src = SpectralMode::gaussian(0.0, 1e-3);
    const double err = oracle::DiscreteModeGrid::uniform(src, n, n).completeness_error(src);
    out.push_back({"grid completeness", err <= kCompleteness,
                   "|sum w |H|^2 - 1| = " + sci(err) + " (tol " + sci(kCompleteness) + ")"});
  }

  double worst_paths = 0.0;
  double worst_analytic = 0.0;
  double worst_vacuum = 0.0;
  double worst_imag = 0.0;
  for (const Case& c : cases) {
    const auto in = inputs_for(c);
    const auto grid = oracle::DiscreteModeGrid::uniform(in.source, n, n);
    const auto r = oracle::coincidence_bruteforce(in, grid, options.chi_max);
    const double reference = analytic(c, options.chi_max);
    worst_paths = std::max(worst_paths, relative(r.explicit_matrix, r.contraction.real()) +
                                            std::abs(r.contraction.imag()) /
                                                std::abs(r.contraction.real()));
    worst_analytic = std::max(worst_analytic, relative(r.contraction, reference));
    worst_vacuum = std::max(worst_vacuum, r.vacuum_residual);
    worst_imag = std::max(worst_imag, std::abs(r.contraction.imag()) / std::abs(r.contraction));
  }
  out.push_back({"contraction vs explicit matrices", worst_paths <= kPathAgreement,
                 "max relative difference " + sci(worst_paths) + " over " +
                     std::to_string(cases.size()) + " cases (tol " + sci(kPathAgreement) + ")"});
  out.push_back({"oracle vs analytic coincidence", worst_analytic <= kAnalyticAgreement,
                 "max relative difference " + sci(worst_analytic) + " on " + std::to_string(n) +
                     "x" + std::to_string(n) + " grid (tol " + sci(kAnalyticAgreement) + ")"});
  out.push_back({"real coincidence rate", worst_imag <= 1e-12,
                 "max |Im C| / |C| = " + sci(worst_imag)});
  out.push_back({"vacuum annihilation", worst_vacuum == 0.0,
                 "max |A|0>| = " + sci(worst_vacuum)});

  {
    oracle::BruteForceInputs in;
    in.source = SpectralMode::gaussian(0.0, 1e-3);
    const auto grid = oracle::DiscreteModeGrid::uniform(in.source, n, n);
    const double base = oracle::coincidence_bruteforce(in, grid, options.chi_max).value();
    in.delta_1 = 1e-3;
    const double shifted = oracle::coincidence_bruteforce(in, grid, options.chi_max).value();
    const double ratio = shifted / base;
    const double err = std::abs(ratio / std::exp(-0.5) - 1.0);
    out.push_back({"Delta_t = d_t suppression", err <= kAnalyticAgreement,
                   "C(d_t)/C(0) = " + sci(ratio) + ", e^-1/2 relative error " + sci(err)});

    const double zero = oracle::coincidence_bruteforce(in, grid, 0.0).value();
    out.push_back({"vacuum pump", zero == 0.0, "C(chi_max = 0) = " + sci(zero)});

    const auto a = oracle::build_event_operator(SpectralMode::flat(), SpectralMode::flat(), 0.0,
                                                0.0, grid);
    const auto b0 = oracle::build_event_operator(in.source, in.source, 0.0, 0.0, grid);
    const double equal = std::abs(oracle::discrete_event_commutator(a, b0, grid));
    bool contracted = true;
    double largest = 0.0;
    for (double k : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const auto b = oracle::build_event_operator(in.source, in.source, 0.0, k * 1e-3, grid);
      const double m = std::abs(oracle::discrete_event_commutator(a, b, grid));
      largest = std::max(largest, m / equal);
      contracted = contracted && m < equal;
    }
    out.push_back({"event commutator contraction", contracted,
                   "max |[a, b^dag]_e(Delta)| / |[a, b^dag]_e(0)| = " + sci(largest)});

    std::ostringstream shift_detail;
    double worst_shift = 0.0;
    for (double shift : {-0.7, 0.25, 3.0}) {
      oracle::BruteForceInputs moved = in;
      moved.delta_1 += shift;
      moved.delta_2 += shift;
      const double v = oracle::coincidence_bruteforce(moved, grid, options.chi_max).value();
      worst_shift = std::max(worst_shift, std::abs(v / shifted - 1.0));
    }
    out.push_back({"common Delta shift", worst_shift <= 1e-9,
                   "max relative change " + sci(worst_shift)});
  }

  const Case& first = cases.empty() ? Case{1e-3, 1e-3, 0.0} : cases.front();
  const double reference = analytic(first, options.chi_max);
  auto error_at = [&](std::size_t nodes) {
    const auto in = inputs_for(first);
    const auto grid = oracle::DiscreteModeGrid::uniform(in.source, nodes, nodes);
    return relative(oracle::coincidence_bruteforce(in, grid, options.chi_max).contraction,
                    reference);
  };
  auto describe = [](const oracle::ConvergenceReport& r) {
    std::string s;
    for (const auto& step : r.steps)
      s += (s.empty() ? "" : ", ") + std::to_string(step.nodes) + ": " + format_number(step.error);
    return s;
  };
  {
    const auto ladder = oracle::convergence_ladder(error_at, 16, 3);
    out.push_back({"convergence order (16-node ladder)", ladder.passed,
                   "errors " + describe(ladder) + "; each halving must cut the error >= 3x"});
  }
  {
    const auto ladder = oracle::convergence_ladder(error_at, n, 2);
    const bool ok = ladder.passed && ladder.steps.front().error <= kAnalyticAgreement;
    out.push_back({"convergence at requested grid", ok,
                   "errors " + describe(ladder) + "; error at " + std::to_string(n) +
                       " nodes must be <= " + sci(kAnalyticAgreement) +
                       " and halving must cut it >= 3x"});
  }
  return out;
}

bool print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  out << (all ? "verify: all checks passed\n" : "verify: FAILED\n");
  return all;
}

}  // namespace eventdecor::cli
