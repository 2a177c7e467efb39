#pragma once

#include <functional>
#include <span>

#include "entroflow/fields.hpp"
#include "entroflow/geometry.hpp"
#include "entroflow/potential.hpp"

namespace entroflow {
namespace nspace {

// The high-dimensional warped product over a backward Ricci flow,
//   (0, sqrt(2NT)) x S^N x M,  ghat = r^2 g_SN + v dr^2 + g,
//   v = 1 + R r^2 / N^2,  tau = r^2 / (2N),  m = N + n + 1,
// carries the distance-like function b = r e^{f/(m-2)} built from the
// Green-like weight h = r^{2-m} e^{-f}. Everything below is evaluated
// with all O(N)-sized exponents cancelled analytically, so no quantity
// ever leaves the representable range regardless of N. Rotational
// invariance makes every integrand independent of the sphere factor;
// the |S^N| volume is cancelled against the normalizing coefficient and
// appears only in the small-N literal cross-check (verify module).

/// Fixed (N, lambda) evaluation context. s = sqrt(2 N lambda) is the level
/// of b associated with lambda, lambda0 < lambda the truncation time of the
/// shell volume, and log_prefactor = ln(c_N |S^N|) the log of the reduced
/// normalization (4 pi)^{-n/2} (2N)^{n/2+1} / 4.
struct NSpaceContext {
  int N = 0;
  int n = 0;
  double lambda = 0.0;
  double lambda0 = 0.0;
  double s = 0.0;
  double s_bar = 0.0;
  double log_prefactor = 0.0;

  int m() const { return N + n + 1; }
};

/// Validates N >= 8, lambda in (tau_min, T), fraction in (0,1).
NSpaceContext make_context(const Geometry& geom, int N, double lambda,
                           double lambda0_fraction = 0.5);
/// Interior variant used by the shell quadrature: lambda only needs to be
/// positive and below T.
NSpaceContext make_context_unchecked(const Geometry& geom, int N, double lambda,
                                     double lambda0_fraction = 0.5);

/// The solved immersion x -> (phi(x), x) of the level set {b = s}, with the
/// ingredients of its exact pullback area element
///   dA = (2 N phi)^{N/2} sqrt(1 + (N v / 2 phi) |grad phi|^2) dnu dnu_SN.
struct LevelSet {
  double lambda = 0.0;
  ScalarField phi;
  ScalarField grad_phi_sq;
  ScalarField area_correction;
  int newton_iters = 0;       // worst case over points
  double max_residual = 0.0;  // relative residual of tau e^{2f/(m-2)} = lambda
  double max_abs_phi_minus_lambda = 0.0;
};

/// One (N, lambda) sample of the level-set functionals.
struct FunctionalSample {
  int N = 0;
  double lambda = 0.0;
  double A_N = 0.0;
  double rawA_N = 0.0;
  double V_N = 0.0;
  double W_N = 0.0;
  double tail_bound = 0.0;
  double level_set_residual = 0.0;
  int newton_iters = 0;
};

/// v = 1 + 2 tau R / N.
ScalarField v_coeff(const Geometry& geom, double tau, int N);

/// |grad_hat b|^2, exact:
///   e^{2f/(m-2)}/v (1 + 2 tau f_tau/(m-2))^2
///   + 2 N tau e^{2f/(m-2)} |grad f|^2 / (m-2)^2.
ScalarField grad_b_sq_exact(const Geometry& geom, const PotentialEvaluator& f,
                            double tau, int N);
/// Same quantity shifted by -1, computed without cancellation; this is the
/// form the area integrand consumes.
ScalarField grad_b_sq_exact_minus_one(const Geometry& geom,
                                      const PotentialEvaluator& f, double tau,
                                      int N);
/// Leading coefficient L = tau(2 Lap f - |grad f|^2 + R) + f - n of
/// (N/2)(|grad_hat b|^2 - 1).
ScalarField grad_b_sq_leading(const Geometry& geom, const PotentialEvaluator& f,
                              double tau);

/// Scalar data for the warped-product Laplacian of a rotationally invariant
/// function h(tau, x).
struct HatScalarData {
  ScalarField h_tau;
  ScalarField h_tautau;
  ScalarField lap_h;
  ScalarField gradR_dot_gradh;
};

/// Laplacian of ghat on functions of (tau, x):
///   (1/v)[(1 + (1+2 tau R)/N - 2(tau R + tau^2 R')/(N^2 v)) h_tau
///         + (2 tau/N) h_tautau] + Lap h + <grad R, grad h>/(N v).
ScalarField hat_laplacian_scalar(const Geometry& geom, double tau, int N,
                                 const HatScalarData& data);

/// r^{m-2} * Lap_hat h for h = r^{2-m} e^{-f}, with every r power and the
/// mutually cancelling O(N) terms removed analytically. O(1/N) when f solves
/// the potential equation; O(1) otherwise.
ScalarField scaled_hat_laplacian_h(const Geometry& geom,
                                   const PotentialEvaluator& f, double tau,
                                   int N);

/// Sup norm of Lap_hat b^2 - 2m |grad_hat b|^2, assembled through the exact
/// identity  Lap_hat b^2 = 2m |grad_hat b|^2 + (2/(2-m)) b^m Lap_hat h and
/// b^m r^{2-m} = 2 N tau e^{m f/(m-2)}.
double hat_laplacian_b2_residual(const Geometry& geom,
                                 const PotentialEvaluator& f, double tau, int N);

/// Per-point Newton solve of tau e^{2 f(tau,x)/(m-2)} = lambda (log form),
/// initial guess tau = lambda, relative tolerance 1e-13, at most 50 steps.
LevelSet level_set_solve(const Geometry& geom, const PotentialEvaluator& f,
                         const NSpaceContext& ctx);

/// Area functional
///   A_N = (N/2)(4 pi lambda)^{-n/2} int_M (phi/lambda)^{N/2}
///         sqrt(1 + (N v/2 phi)|grad phi|^2) (|gb|^2 - 1)|gb| dnu,
/// the exact reduction of the level-set integral with (phi/lambda)^{N/2}
/// evaluated as exp((N/2) log1p((phi-lambda)/lambda)).
double area_n(const Geometry& geom, const PotentialEvaluator& f,
              const NSpaceContext& ctx);
/// Same with integrand weight |gb|^3.
double raw_area_n(const Geometry& geom, const PotentialEvaluator& f,
                  const NSpaceContext& ctx);

struct AreaPair {
  double area = 0.0;
  double raw = 0.0;
  double level_set_residual = 0.0;
  int newton_iters = 0;
  double max_abs_phi_minus_lambda = 0.0;
};
/// Both area weights from a single level-set solve.
AreaPair area_pair(const Geometry& geom, const PotentialEvaluator& f,
                   const NSpaceContext& ctx);

struct ShellVolume {
  double V_N = 0.0;
  double tail_bound = 0.0;
};

/// Shell volume as the coarea integral (1/s^m) int_{s_bar}^{s} w^{m-1}
/// A_N(w) dw under the substitution w = s e^{xi/N}:
///   V_N = (1/N) int_{xi_min}^{0} e^{m xi / N} A_N(lambda e^{2 xi/N}) dxi,
/// xi_min = max(-40, N ln(s_bar/s)), adaptive Gauss-Legendre panels.
/// tail_bound combines the below-lambda0 estimate
/// sup|A_N| (lambda0/lambda)^{m/2} / m with the xi cutoff remainder.
ShellVolume shell_volume(const std::function<double(double)>& area_at_lambda,
                         const NSpaceContext& ctx);

/// V_N with area_at_lambda = area_n at lambda' = lambda e^{2 xi/N}.
ShellVolume volume_n(const Geometry& geom, const PotentialEvaluator& f,
                     const NSpaceContext& ctx);

/// W_N = 2(m-1) V_N - A_N.
double monotonic_volume_n(const Geometry& geom, const PotentialEvaluator& f,
                          const NSpaceContext& ctx);

/// A_N, rawA_N, V_N, W_N and diagnostics in one pass.
FunctionalSample functional_sample(const Geometry& geom,
                                   const PotentialSolution& sol,
                                   const NSpaceContext& ctx);

/// Centered difference (one Richardson refinement) of W_N in lambda,
/// h = h_rel * lambda; the truncation time follows lambda0_fraction.
double dwn_dlambda(const Geometry& geom, const PotentialSolution& sol, int N,
                   double lambda, double h_rel = 1e-3,
                   double lambda0_fraction = 0.5);

// Pointwise cores, shared with the verification oracles.
double grad_b_sq_m1_point(const PotentialPoint& p, double R, double tau, int N,
                          int n);
double scaled_hat_laplacian_point(const PotentialPoint& p, double R,
                                  double R_rate, double tau, int N, int n);

}  // namespace nspace
}  // namespace entroflow
