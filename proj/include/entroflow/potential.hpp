#pragma once

#include <memory>
#include <span>
#include <vector>

#include "entroflow/geometry.hpp"

namespace entroflow {

/// Pointwise data of the potential f(tau, x) and the derivatives the
/// N-space formulas consume. grad_f_sq and lap_f are taken with the
/// metric g(tau).
struct PotentialPoint {
  double f = 0.0;
  double f_tau = 0.0;
  double f_tautau = 0.0;
  double grad_f_sq = 0.0;
  double lap_f = 0.0;
};

/// Abstract pointwise evaluator. Production potentials implement it with
/// closed forms; tests feed raw bundles through RawPotential to probe
/// negative controls that no exact solution can reach.
class PotentialEvaluator {
 public:
  virtual ~PotentialEvaluator() = default;
  virtual PotentialPoint at(double tau, std::span<const double> x) const = 0;
  virtual bool spatially_constant() const = 0;
};

/// Exact solution family of the potential equation
///   d f/d tau = Lap f - |grad f|^2 + R - n/(2 tau).
///
/// constant_in_space: f(tau) from the closed-form ODE solution,
///   flat torus    f = c - (n/2) ln tau
///   round sphere  f = (n/2) ln(a(tau)/tau) + c
/// torus_spectral: u(tau,x) = A + sum_j eps_j cos(k_j . x) e^{-|k_j|^2 tau}
///   with A > sum |eps_j| (positivity certificate, checked at construction)
///   and f = -ln u - (n/2) ln tau.
///
/// decay_scale multiplies |k|^2 in the exponent; any value other than 1
/// breaks the equation on purpose and exists solely as a negative control
/// for the residual diagnostics.
class PotentialSolution {
 public:
  enum class Kind { constant_in_space, torus_spectral };

  struct Mode {
    double amplitude = 0.0;
    std::vector<int> wave;
  };

  static PotentialSolution constant_in_space(double c);
  static PotentialSolution torus_spectral(double base, std::vector<Mode> modes,
                                          double decay_scale = 1.0);

  Kind kind() const { return kind_; }
  double constant_c() const { return c_; }
  double base() const { return base_; }
  double decay_scale() const { return decay_; }
  const std::vector<Mode>& modes() const { return modes_; }

  bool spatially_constant() const { return kind_ == Kind::constant_in_space; }

  /// ConfigError if the potential cannot live on the given manifold
  /// (spectral data requires the flat torus) or a mode is not periodic
  /// on the configured grid.
  void check_compatible(const Geometry& geom) const;

  PotentialPoint at(const Geometry& geom, double tau, std::span<const double> x) const;

  /// Evaluator bound to a manifold (validates compatibility once).
  std::unique_ptr<PotentialEvaluator> evaluator(const Geometry& geom) const;

  // --- grid-level views ----------------------------------------------------
  ScalarField f_at(const Geometry& geom, double tau) const;
  ScalarField df_dtau(const Geometry& geom, double tau) const;
  ScalarField u_at(const Geometry& geom, double tau) const;
  ScalarField grad_f_sq_at(const Geometry& geom, double tau) const;
  ScalarField lap_f_at(const Geometry& geom, double tau) const;
  /// Hessian of f w.r.t. g(tau); zero for spatially constant potentials.
  TensorField f_hessian(const Geometry& geom, double tau) const;

  /// Sup over tau samples x grid points of the equation residual
  /// | df/dtau - (Lap f - |grad f|^2 + R - n/(2 tau)) |.
  double potential_residual(const Geometry& geom,
                            std::span<const double> tau_samples) const;

 private:
  PotentialSolution() = default;

  Kind kind_ = Kind::constant_in_space;
  double c_ = 0.0;
  double base_ = 0.0;
  double decay_ = 1.0;
  std::vector<Mode> modes_;
};

/// Residual of the potential equation at one point.
double potential_equation_residual(const PotentialPoint& p, double R, int n,
                                   double tau);

}  // namespace entroflow
