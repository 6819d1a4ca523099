#pragma once

// Brute-force check of the event-commutator algebra on a discrete (k, Omega)
// grid. Grid modes obey [a_i, a_j^dag] = delta_ij / w_i, the discrete image of
// the doubled delta-function commutator, so a smeared operator
// A = sum_i w_i c_A(i) a_i has [A, B^dag] = sum_i w_i c_A(i) c_B(i)^*.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "eventdecor/spectral.hpp"

namespace eventdecor::oracle {

/// Tensor grid with trapezoid weights along each axis.
struct DiscreteModeGrid {
  std::vector<double> k_nodes;
  std::vector<double> omega_nodes;
  std::vector<double> k_weights;
  std::vector<double> omega_weights;

  /// n_k x n_omega uniform nodes spanning center +- half_width_units / d_t of
  /// the source profile on each axis. The source must be Gaussian.
  static DiscreteModeGrid uniform(const SpectralMode& source, std::size_t n_k,
                                  std::size_t n_omega, double half_width_units = 8.0);

  /// Throws DimensionError on inconsistent sizes and DomainError unless nodes
  /// are strictly increasing and weights positive.
  void validate() const;

  /// max over both axes of |sum w |H|^2 - 1| for the given profile.
  double completeness_error(const SpectralMode& profile) const;

  std::size_t size() const { return k_nodes.size() * omega_nodes.size(); }
  std::uint64_t fingerprint() const;
};

struct DiscreteEventOperator {
  /// c(k, Omega) at grid nodes, k-major: index = i_k * n_omega + i_omega.
  std::vector<std::complex<double>> coefficients;
  /// |K(Omega)| at the Omega nodes, kept for the commutator normalization.
  std::vector<double> omega_magnitude;
  std::size_t n_k = 0;
  std::size_t n_omega = 0;
  std::uint64_t grid_fingerprint = 0;
};

/// c(k, Omega) = K(k) exp(i k x_minus_t) |K'(Omega)| exp(i delta Omega).
DiscreteEventOperator build_event_operator(const SpectralMode& k_mode,
                                           const SpectralMode& omega_mode, double x_minus_t,
                                           double delta, const DiscreteModeGrid& grid);

/// sum w_k w_Omega c_a c_b^* / sum w_Omega |K_a(Omega) K_b(Omega)|.
/// Throws DimensionError if the operators live on different grids.
std::complex<double> discrete_event_commutator(const DiscreteEventOperator& a,
                                               const DiscreteEventOperator& b,
                                               const DiscreteModeGrid& grid);

/// Norm of A|0> on the one-pair Fock space spanned by the operator.
double vacuum_annihilation_residual(const DiscreteEventOperator& op, const DiscreteModeGrid& grid);

struct BruteForceInputs {
  SpectralMode detector = SpectralMode::flat();  ///< G, used for k and Omega
  SpectralMode source;                           ///< H, used for k and Omega
  double delta_1 = 0.0;
  double delta_2 = 0.0;
  double offset_1 = 0.0;  ///< phi_1^- - phi^c
  double offset_2 = 0.0;  ///< phi_2^- - phi^c
};

struct BruteForceResult {
  /// chi_2 chi_1^* [a_m1, a_m1c^dag]_e [a_m2, a_m2c^dag]_e^*
  std::complex<double> contraction;
  /// O(chi^2) part of <0| a'^dag_m1 a'_m1 a'^dag_m2 a'_m2 |0> from explicit
  /// matrices, divided by the two event-commutator normalizations.
  std::complex<double> explicit_matrix;
  /// Largest |A|0>| over the four reduced operators.
  double vacuum_residual = 0.0;

  double value() const { return contraction.real(); }
};

/// Throws PreconditionError if |chi_max| > SqueezingParams::weak_threshold.
BruteForceResult coincidence_bruteforce(const BruteForceInputs& inputs,
                                        const DiscreteModeGrid& grid,
                                        std::complex<double> chi_max);

struct ConvergenceStep {
  std::size_t nodes = 0;
  double error = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceStep> steps;
  double floor = 0.0;
  /// Every step whose predecessor was above the floor cut the error >= 3x.
  bool passed = false;
};

/// Evaluates error_at(n) for n = start, 2 start - 1, ... (halving the spacing
/// of an n-node uniform grid each time).
ConvergenceReport convergence_ladder(const std::function<double(std::size_t)>& error_at,
                                     std::size_t start_nodes, std::size_t steps,
                                     double floor = 1e-12);

}  // namespace eventdecor::oracle
