#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "entroflow/errors.hpp"
#include "entroflow/fields.hpp"
#include "entroflow/grid.hpp"

namespace entroflow {

/// Closed-form metric family g(tau) solving the backward Ricci flow
/// d g / d tau = 2 Ric on a model closed manifold.
///
/// flat_torus:   g is the flat coordinate metric, static in tau.
/// round_sphere: g(tau) = a(tau) * g_unit with a(tau) = a0 + 2(n-1) tau,
///               represented in a g_unit-orthonormal frame so that tensor
///               components are spatially constant.
struct FlowSolution {
  enum class Kind { flat_torus, round_sphere };

  Kind kind = Kind::flat_torus;
  int n = 1;             // spatial dimension of M
  double T = 1.0;        // horizon
  double tau_min = 0.05; // guard against the n/(2 tau) singularity
  double sphere_a0 = 0.0;

  static FlowSolution flat_torus(int n, double T, double tau_min);
  static FlowSolution round_sphere(int n, double T, double tau_min, double a0);

  bool is_sphere() const { return kind == Kind::round_sphere; }

  /// a(tau) = a0 + 2(n-1) tau (round sphere only).
  double sphere_scale(double tau) const { return sphere_a0 + 2.0 * (n - 1) * tau; }
  double sphere_scale_rate() const { return 2.0 * (n - 1); }

  /// Scalar curvature R(tau); spatially constant for both families.
  double scalar_curvature_value(double tau) const;
  /// dR/dtau, closed form.
  double scalar_curvature_rate(double tau) const;

  /// Throws RangeError unless tau_min <= tau <= T.
  void require_tau(double tau) const;
  /// Weaker interior check used by N-space internals (tau > 0 suffices for
  /// every closed-form family shipped here).
  void require_positive(double tau) const;
};

/// A model manifold with its flow: periodic tensor grid for the flat torus,
/// homogeneous (grid-free) reduction for the round sphere.
class Geometry {
 public:
  Geometry(FlowSolution flow, Grid grid);   // flat torus
  explicit Geometry(FlowSolution flow);     // round sphere

  const FlowSolution& flow() const { return flow_; }
  const Grid& grid() const;
  bool homogeneous() const { return flow_.is_sphere(); }

  std::size_t num_points() const;
  void point(std::size_t flat, std::span<double> out) const;

  // --- flow evaluation ---------------------------------------------------
  TensorField metric_at(double tau) const;
  TensorField ricci_at(double tau) const;
  ScalarField scalar_curvature(double tau) const;

  /// Sup over tau samples of the frame-normalized residual
  /// | g^{-1} ( FD_tau g - 2 Ric ) |_infty, centered differences with
  /// step 1e-5 * tau.
  double validate_backward_flow(std::span<const double> tau_samples) const;

  // --- differential operators (spectral on the torus) ---------------------
  ScalarField laplacian(const ScalarField& f) const;
  ScalarField gradient_sq(const ScalarField& f) const;
  TensorField hessian(const ScalarField& f) const;
  ScalarField axis_derivative(const ScalarField& f, int axis) const;

  // --- quadrature ----------------------------------------------------------
  /// Integral over M against the volume element of g at field.tau.
  double integrate(const ScalarField& f) const;
  double integrate_values(std::span<const double> values, double measure_tau) const;
  /// Total volume of (M, g(tau)).
  double total_volume(double tau) const;

 private:
  FlowSolution flow_;
  std::optional<Grid> grid_;
};

/// Volume of the unit n-sphere, 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double unit_sphere_volume(double n);

/// Core of validate_backward_flow, generic over the metric family so that
/// deliberately inconsistent (metric, Ricci) pairs can be probed in tests.
double backward_flow_residual(
    const std::function<TensorField(double)>& metric,
    const std::function<TensorField(double)>& ricci,
    std::span<const double> tau_samples);

}  // namespace entroflow
