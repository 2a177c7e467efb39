#pragma once

#include <stdexcept>
#include <string>

namespace entroflow {

// Invalid user-facing configuration: bad field values, mismatched
// flow/potential kinds, malformed ladders.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation time outside the admissible interval of a flow family.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Field stored in a representation the operation cannot handle,
// e.g. spatially varying data on a homogeneous manifold.
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Heat-kernel weight fails the positivity certificate.
class PositivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Newton solve failed to converge or the level-set map is not monotone.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested panel agreement.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rate fit rejected because the ladder is already at machine precision;
// callers treat this as "converged".
class DegenerateFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entroflow
