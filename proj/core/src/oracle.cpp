#include "eventdecor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "eventdecor/errors.hpp"

namespace eventdecor::oracle {
namespace {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

constexpr int kMaxPhotons = 2;

std::vector<double> uniform_nodes(double center, double half_width, std::size_t n) {
  std::vector<double> nodes(n);
  const double h = 2.0 * half_width / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    nodes[i] = center - half_width + h * static_cast<double>(i);
  return nodes;
}

std::vector<double> trapezoid_weights(std::size_t n, double h) {
  std::vector<double> w(n, h);
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

double axis_completeness(const std::vector<double>& nodes, const std::vector<double>& weights,
                         const SpectralMode& profile) {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    sum += weights[i] * std::norm(eval_amplitude(profile, nodes[i]));
  return std::abs(sum - 1.0);
}

void check_axis(const std::vector<double>& nodes, const std::vector<double>& weights,
                const char* axis) {
  if (nodes.size() != weights.size())
    throw DimensionError(std::string(axis) + " nodes and weights differ in length");
  if (nodes.size() < 2) throw DimensionError(std::string(axis) + " axis needs at least 2 nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i]) || !(weights[i] > 0.0) || !std::isfinite(weights[i]))
      throw DomainError(std::string(axis) + " nodes must be finite with positive weights");
    if (i > 0 && !(nodes[i] > nodes[i - 1]))
      throw DomainError(std::string(axis) + " nodes must be strictly increasing");
  }
}

/// Weighted inner product sum w_i u_i v_i^* over the flattened grid.
Complex grid_product(const Vector& u, const Vector& v, const std::vector<double>& w) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) s += w[i] * u[i] * std::conj(v[i]);
  return s;
}

std::vector<double> flat_weights(const DiscreteModeGrid& grid) {
  std::vector<double> w;
  w.reserve(grid.size());
  for (double wk : grid.k_weights)
    for (double wo : grid.omega_weights) w.push_back(wk * wo);
  return w;
}

/// Orthonormal basis (under the grid product) for the span of the inputs, and
/// the expansion of each input in that basis.
struct ReducedFamily {
  std::vector<Vector> basis;
  std::vector<std::vector<Complex>> expansion;  // expansion[op][mode] = [A, b_mode^dag]
};

ReducedFamily gram_schmidt(const std::vector<const Vector*>& ops, const std::vector<double>& w) {
  ReducedFamily fam;
  for (const Vector* op : ops) {
    Vector r = *op;
    for (const Vector& e : fam.basis) {
      const Complex proj = grid_product(r, e, w);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= proj * e[i];
    }
    const double norm = std::sqrt(std::abs(grid_product(r, r, w)));
    const double scale = std::sqrt(std::abs(grid_product(*op, *op, w)));
    if (norm > 1e-10 * scale) {
      for (auto& x : r) x /= norm;
      fam.basis.push_back(std::move(r));
    }
  }
  for (const Vector* op : ops) {
    std::vector<Complex> coeffs;
    for (const Vector& e : fam.basis) coeffs.push_back(grid_product(*op, e, w));
    fam.expansion.push_back(std::move(coeffs));
  }
  return fam;
}

/// Bosonic Fock space on a few modes, truncated at kMaxPhotons in total.
class FockSpace {
 public:
  explicit FockSpace(std::size_t modes) : modes_(modes) {
    std::vector<int> occ(modes, 0);
    enumerate(occ, 0, 0);
  }

  std::size_t dim() const { return states_.size(); }
  Vector vacuum() const {
    Vector v(dim(), Complex{0.0, 0.0});
    v[index_.at(std::vector<int>(modes_, 0))] = 1.0;
    return v;
  }

  /// sum_p alpha_p b_p applied to v (annihilation).
  Vector annihilate(const std::vector<Complex>& alpha, std::size_t offset, const Vector& v) const {
    Vector out(dim(), Complex{0.0, 0.0});
    for (std::size_t s = 0; s < dim(); ++s) {
      if (v[s] == Complex{0.0, 0.0}) continue;
      for (std::size_t p = 0; p < alpha.size(); ++p) {
        const int n = states_[s][offset + p];
        if (n == 0) continue;
        auto lowered = states_[s];
        --lowered[offset + p];
        out[index_.at(lowered)] += alpha[p] * std::sqrt(static_cast<double>(n)) * v[s];
      }
    }
    return out;
  }

  /// (sum_p alpha_p b_p)^dag applied to v, dropping states above the cap.
  Vector create(const std::vector<Complex>& alpha, std::size_t offset, const Vector& v) const {
    Vector out(dim(), Complex{0.0, 0.0});
    for (std::size_t s = 0; s < dim(); ++s) {
      if (v[s] == Complex{0.0, 0.0}) continue;
      for (std::size_t p = 0; p < alpha.size(); ++p) {
        auto raised = states_[s];
        ++raised[offset + p];
        auto it = index_.find(raised);
        if (it == index_.end()) continue;
        out[it->second] +=
            std::conj(alpha[p]) * std::sqrt(static_cast<double>(raised[offset + p])) * v[s];
      }
    }
    return out;
  }

 private:
  void enumerate(std::vector<int>& occ, std::size_t mode, int used) {
    if (mode == modes_) {
      index_[occ] = states_.size();
      states_.push_back(occ);
      return;
    }
    for (int n = 0; used + n <= kMaxPhotons; ++n) {
      occ[mode] = n;
      enumerate(occ, mode + 1, used + n);
    }
    occ[mode] = 0;
  }

  std::size_t modes_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, std::size_t> index_;
};

Vector add(Vector a, const Vector& b, Complex scale = 1.0) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

Complex inner(const Vector& a, const Vector& b) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vector_norm(const Vector& v) { return std::sqrt(std::abs(inner(v, v))); }

double omega_normalization(const DiscreteEventOperator& a, const DiscreteEventOperator& b,
                           const DiscreteModeGrid& grid) {
  double n = 0.0;
  for (std::size_t j = 0; j < a.n_omega; ++j)
    n += grid.omega_weights[j] * a.omega_magnitude[j] * b.omega_magnitude[j];
  return n;
}

void check_same_grid(const DiscreteEventOperator& op, const DiscreteModeGrid& grid) {
  if (op.n_k != grid.k_nodes.size() || op.n_omega != grid.omega_nodes.size() ||
      op.coefficients.size() != grid.size() || op.omega_magnitude.size() != op.n_omega ||
      op.grid_fingerprint != grid.fingerprint())
    throw DimensionError("event operator was not built on this grid");
}

}  // namespace

DiscreteModeGrid DiscreteModeGrid::uniform(const SpectralMode& source, std::size_t n_k,
                                           std::size_t n_omega, double half_width_units) {
  source.validate();
  if (source.kind != ModeKind::Gaussian)
    throw DomainError("grid construction needs a Gaussian source profile");
  if (n_k < 2 || n_omega < 2) throw DimensionError("grid axes need at least 2 nodes");
  if (!(half_width_units > 0.0)) throw DomainError("grid half-width must be positive");
  const double half = half_width_units / source.width;
  DiscreteModeGrid g;
  g.k_nodes = uniform_nodes(source.center, half, n_k);
  g.omega_nodes = uniform_nodes(source.center, half, n_omega);
  g.k_weights = trapezoid_weights(n_k, 2.0 * half / static_cast<double>(n_k - 1));
  g.omega_weights = trapezoid_weights(n_omega, 2.0 * half / static_cast<double>(n_omega - 1));
  return g;
}

void DiscreteModeGrid::validate() const {
  check_axis(k_nodes, k_weights, "k");
  check_axis(omega_nodes, omega_weights, "Omega");
}

double DiscreteModeGrid::completeness_error(const SpectralMode& profile) const {
  validate();
  return std::max(axis_completeness(k_nodes, k_weights, profile),
                  axis_completeness(omega_nodes, omega_weights, profile));
}

std::uint64_t DiscreteModeGrid::fingerprint() const {
  // FNV-1a over the bit patterns of every node and weight.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::vector<double>& xs) {
    h ^= xs.size();
    h *= 1099511628211ull;
    for (double x : xs) {
      h ^= std::bit_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
  };
  mix(k_nodes);
  mix(omega_nodes);
  mix(k_weights);
  mix(omega_weights);
  return h;
}

DiscreteEventOperator build_event_operator(const SpectralMode& k_mode,
                                           const SpectralMode& omega_mode, double x_minus_t,
                                           double delta, const DiscreteModeGrid& grid) {
  grid.validate();
  if (!std::isfinite(x_minus_t) || !std::isfinite(delta))
    throw DomainError("operator phases must be finite");
  DiscreteEventOperator op;
  op.n_k = grid.k_nodes.size();
  op.n_omega = grid.omega_nodes.size();
  op.grid_fingerprint = grid.fingerprint();
  op.omega_magnitude.resize(op.n_omega);
  std::vector<Complex> omega_part(op.n_omega);
  for (std::size_t j = 0; j < op.n_omega; ++j) {
    const double w = grid.omega_nodes[j];
    op.omega_magnitude[j] = std::abs(eval_amplitude(omega_mode, w));
    omega_part[j] = std::polar(op.omega_magnitude[j], delta * w);
  }
  op.coefficients.resize(grid.size());
  for (std::size_t i = 0; i < op.n_k; ++i) {
    const double k = grid.k_nodes[i];
    const Complex k_part = eval_amplitude(k_mode, k) * std::polar(1.0, k * x_minus_t);
    for (std::size_t j = 0; j < op.n_omega; ++j)
      op.coefficients[i * op.n_omega + j] = k_part * omega_part[j];
  }
  return op;
}

std::complex<double> discrete_event_commutator(const DiscreteEventOperator& a,
                                               const DiscreteEventOperator& b,
                                               const DiscreteModeGrid& grid) {
  check_same_grid(a, grid);
  check_same_grid(b, grid);
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.n_k; ++i) {
    Complex row{0.0, 0.0};
    for (std::size_t j = 0; j < a.n_omega; ++j) {
      const std::size_t idx = i * a.n_omega + j;
      row += grid.omega_weights[j] * a.coefficients[idx] * std::conj(b.coefficients[idx]);
    }
    sum += grid.k_weights[i] * row;
  }
  return sum / omega_normalization(a, b, grid);
}

double vacuum_annihilation_residual(const DiscreteEventOperator& op, const DiscreteModeGrid& grid) {
  check_same_grid(op, grid);
  const auto w = flat_weights(grid);
  const ReducedFamily fam = gram_schmidt({&op.coefficients}, w);
  const FockSpace space(fam.basis.size());
  return vector_norm(space.annihilate(fam.expansion[0], 0, space.vacuum()));
}

BruteForceResult coincidence_bruteforce(const BruteForceInputs& in, const DiscreteModeGrid& grid,
                                        std::complex<double> chi_max) {
  if (!std::isfinite(std::abs(chi_max))) throw DomainError("chi_max must be finite");
  if (std::abs(chi_max) > SqueezingParams::weak_threshold)
    throw PreconditionError("|chi_max| = " + std::to_string(std::abs(chi_max)) +
                            " exceeds the weak-pump threshold " +
                            std::to_string(SqueezingParams::weak_threshold) +
                            "; the one-pair truncation is not valid");
  grid.validate();
  const SpectralMode& g = in.detector;
  const SpectralMode& h = in.source;

  // Arm-1 family: a_m1 and a_m1c. Arm-2 family: a_m2 and a_m2c.
  const auto m1 = build_event_operator(g, g, in.offset_1, in.delta_1, grid);
  const auto m1c = build_event_operator(h, h, 0.0, in.delta_2, grid);
  const auto m2 = build_event_operator(g, g, in.offset_2, in.delta_2, grid);
  const auto m2c = build_event_operator(h, h, 0.0, in.delta_1, grid);

  auto chi_arm = [&](double offset) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < grid.k_nodes.size(); ++i) {
      const double k = grid.k_nodes[i];
      s += grid.k_weights[i] * eval_amplitude(g, k) * std::conj(eval_amplitude(h, k)) *
           std::polar(1.0, k * offset);
    }
    return chi_max * s;
  };
  const Complex chi_1 = chi_arm(in.offset_1);
  const Complex chi_2 = chi_arm(in.offset_2);

  BruteForceResult out;
  out.contraction = chi_2 * std::conj(chi_1) * discrete_event_commutator(m1, m1c, grid) *
                    std::conj(discrete_event_commutator(m2, m2c, grid));

  const auto w = flat_weights(grid);
  const ReducedFamily fam1 = gram_schmidt({&m1.coefficients, &m1c.coefficients}, w);
  const ReducedFamily fam2 = gram_schmidt({&m2.coefficients, &m2c.coefficients}, w);
  const std::size_t off2 = fam1.basis.size();
  const FockSpace space(off2 + fam2.basis.size());
  const Vector vac = space.vacuum();

  const auto& a_m1 = fam1.expansion[0];
  const auto& a_m1c = fam1.expansion[1];
  const auto& a_m2 = fam2.expansion[0];
  const auto& a_m2c = fam2.expansion[1];

  // Weak linearization: a'_m1 = a_m1 + chi_1 a_m2c^dag, a'_m2 = a_m2 + chi_2 a_m1c^dag.
  auto expectation = [&](double s) {
    const Complex c1 = s * chi_1;
    const Complex c2 = s * chi_2;
    auto prime_1 = [&](const Vector& v) {
      return add(space.annihilate(a_m1, 0, v), space.create(a_m2c, off2, v), c1);
    };
    auto prime_2 = [&](const Vector& v) {
      return add(space.annihilate(a_m2, off2, v), space.create(a_m1c, 0, v), c2);
    };
    auto prime_2_dag = [&](const Vector& v) {
      return add(space.create(a_m2, off2, v), space.annihilate(a_m1c, 0, v), std::conj(c2));
    };
    const Vector right = prime_1(prime_2_dag(prime_2(vac)));
    return inner(prime_1(vac), right);
  };
  // C(s) = A s^2 + B s^4 exactly, so one Richardson step isolates A.
  const Complex pair_term = (16.0 * expectation(1.0) - expectation(2.0)) / 12.0;
  out.explicit_matrix =
      pair_term / (omega_normalization(m1, m1c, grid) * omega_normalization(m2, m2c, grid));

  for (const auto& [fam, offset] : {std::pair{&fam1, std::size_t{0}}, std::pair{&fam2, off2}})
    for (const auto& alpha : fam->expansion)
      out.vacuum_residual =
          std::max(out.vacuum_residual, vector_norm(space.annihilate(alpha, offset, vac)));
  return out;
}

ConvergenceReport convergence_ladder(const std::function<double(std::size_t)>& error_at,
                                     std::size_t start_nodes, std::size_t steps, double floor) {
  if (start_nodes < 2) throw DimensionError("convergence ladder needs at least 2 nodes");
  ConvergenceReport report;
  report.floor = floor;
  report.passed = true;
  std::size_t n = start_nodes;
  for (std::size_t s = 0; s < steps; ++s) {
    const double err = error_at(n);
    if (!report.steps.empty()) {
      const double prev = report.steps.back().error;
      if (prev > floor && !(err * 3.0 <= prev)) report.passed = false;
    }
    if (!std::isfinite(err)) report.passed = false;
    report.steps.push_back({n, err});
    n = 2 * n - 1;
  }
  return report;
}

}  // namespace eventdecor::oracle
