#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "entroflow/errors.hpp"

namespace entroflow {

/// Result of fitting Q_N = limit + constant * N^{-rate} over a geometric
/// ladder. residual is the RMS of the log-log fit.
struct ConvergenceFit {
  double limit = 0.0;
  double constant = 0.0;
  double rate = 0.0;
  double residual = 0.0;
  std::vector<std::pair<double, double>> ladder;  // (N, Q_N)
};

/// Least squares of ln|Q_N - limit| against ln N over the top half of the
/// ladder. With no reference the limit is estimated by Richardson
/// extrapolation from the top rungs. Throws DegenerateFitError when the
/// deviations are already at machine precision relative to the limit.
ConvergenceFit fit_rate(const std::vector<std::pair<double, double>>& ladder,
                        std::optional<double> reference = std::nullopt);

/// (2^p Q_2N - Q_N) / (2^p - 1): eliminates the leading C/N^p term from a
/// factor-two ladder.
double richardson(double q_n, double q_2n, double p);

/// Centered difference with one Richardson refinement,
/// (4 D_{h/2} - D_h) / 3, h = h_rel * |x|.
double central_derivative(const std::function<double(double)>& fn, double x,
                          double h_rel);

}  // namespace entroflow
