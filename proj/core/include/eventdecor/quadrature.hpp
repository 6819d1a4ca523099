#pragma once

#include <functional>

namespace eventdecor::quadrature {

struct Tolerance {
  double absolute = 1e-15;
  double relative = 1e-13;
};

/// Adaptive Gauss-Kronrod (G15/K31) integral of f over [a, b]. The interval
/// may be reversed. Throws NumericError when the error estimate stays above
/// max(absolute, relative * |value|).
double adaptive(const std::function<double(double)>& f, double a, double b,
                Tolerance tol = {});

}  // namespace eventdecor::quadrature
