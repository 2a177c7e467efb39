#pragma once

#include <functional>

#include "entroflow/errors.hpp"

namespace entroflow {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Adaptive 15-point Gauss-Legendre on [a, b]. Panels are bisected until the
/// whole-vs-halves estimates agree within their share of
/// rel_tol * (|I| + abs_floor); QuadratureError if the leftover disagreement
/// exceeds 1e-11 * (|I| + abs_floor).
QuadratureResult integrate_adaptive(const std::function<double(double)>& fn,
                                    double a, double b, double rel_tol = 1e-12,
                                    double abs_floor = 1e-300);

}  // namespace entroflow
