#pragma once

#include <functional>

namespace qtail {

struct QuadratureResult {
  double value;
  double error_estimate;  // sum of per-panel |Kronrod - Gauss| differences
  int evaluations;
};

// Adaptive Gauss-Kronrod 7-15 integration of f over the finite interval [a, b].
// Panels are bisected until the local error estimate fits within the panel's
// share of max(abs_tol, rel_tol * |whole-interval estimate|).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-13,
                           double abs_tol = 0.0);

}  // namespace qtail
