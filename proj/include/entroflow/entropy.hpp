#pragma once

#include "entroflow/geometry.hpp"
#include "entroflow/potential.hpp"

namespace entroflow {

/// W-entropy and its derivative at one flow time, with the derivative
/// integrand carried through an algebraically independent expansion so the
/// two can be cross-checked (dW == -integrand_norm).
struct EntropySample {
  double lambda = 0.0;
  double W = 0.0;
  double dW = 0.0;
  double integrand_norm = 0.0;
};

/// W(lambda) = int_M ( lambda(|grad f|^2 + R) + f - n ) (4 pi lambda)^{-n/2}
///             e^{-f} dnu.
double entropy_w(const Geometry& geom, const PotentialSolution& sol, double lambda);

/// dW/dlambda = - int_M 2 lambda | Ric + Hess f - g/(2 lambda) |^2
///              (4 pi lambda)^{-n/2} e^{-f} dnu,
/// tensor norm g^{ik} g^{jl} S_ij S_kl with the time-lambda metric.
double entropy_w_derivative(const Geometry& geom, const PotentialSolution& sol,
                            double lambda);

/// Both quantities plus the expanded-form integrand norm
/// |T - g/(2l)|^2 = |T|^2 - tr T / l + n/(4 l^2), T = Ric + Hess f.
EntropySample entropy_sample(const Geometry& geom, const PotentialSolution& sol,
                             double lambda);

}  // namespace entroflow
