#include "eventdecor/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "eventdecor/errors.hpp"

namespace eventdecor::quadrature {

namespace {

constexpr unsigned kMaxDepth = 24;

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// Boost 1.74's adaptive driver compares an unscaled error estimate against a
// scaled tolerance, so bisection is done here on top of the fixed rules.
Estimate kronrod_panel(const std::function<double(double)>& f, double a, double b) {
  const double k = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 0);
  const double g = boost::math::quadrature::gauss<double, 15>::integrate(f, a, b);
  return {k, std::abs(k - g)};
}

Estimate refine(const std::function<double(double)>& f, double a, double b, Estimate whole,
                double abs_tol, double rel_tol, unsigned depth) {
  const double allowed = std::max(abs_tol, rel_tol * std::abs(whole.value));
  const double mid = 0.5 * (a + b);
  if (whole.error <= allowed || depth == 0 || mid <= std::min(a, b) || mid >= std::max(a, b))
    return whole;
  const Estimate left = kronrod_panel(f, a, mid);
  const Estimate right = kronrod_panel(f, mid, b);
  const Estimate l = refine(f, a, mid, left, 0.5 * abs_tol, rel_tol, depth - 1);
  const Estimate r = refine(f, mid, b, right, 0.5 * abs_tol, rel_tol, depth - 1);
  return {l.value + r.value, l.error + r.error};
}

}  // namespace

double adaptive(const std::function<double(double)>& f, double a, double b, Tolerance tol) {
  if (a == b) return 0.0;
  const Estimate result = refine(f, a, b, kronrod_panel(f, a, b), tol.absolute, tol.relative, kMaxDepth);
  if (!std::isfinite(result.value))
    throw NumericError("adaptive quadrature produced a non-finite value", result.value,
                       result.error);
  if (result.error > std::max(tol.absolute, tol.relative * std::abs(result.value)))
    throw NumericError("adaptive quadrature did not converge on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]",
                       result.value, result.error);
  return result.value;
}

}  // namespace eventdecor::quadrature
