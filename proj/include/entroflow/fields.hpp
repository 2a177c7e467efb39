#pragma once

#include <cstddef>
#include <vector>

namespace entroflow {

/// Real samples on the spatial grid at a fixed flow time. A single stored
/// value denotes a spatially constant field (the only representation
/// admitted on homogeneous manifolds).
struct ScalarField {
  double tau = 0.0;
  std::vector<double> values;

  bool constant() const { return values.size() == 1; }
  double at(std::size_t i) const { return constant() ? values[0] : values[i]; }
  std::size_t size() const { return values.size(); }
};

inline ScalarField constant_field(double tau, double value) {
  return ScalarField{tau, {value}};
}

/// Symmetric rank-2 tensor samples, stored as full dim x dim blocks per
/// point (one block when spatially constant). Symmetry is maintained by
/// construction in every operation that produces one.
struct TensorField {
  double tau = 0.0;
  int dim = 0;
  std::vector<double> values;  // size = points * dim * dim

  bool constant() const {
    return values.size() == static_cast<std::size_t>(dim) * dim;
  }
  std::size_t points() const {
    return values.size() / (static_cast<std::size_t>(dim) * dim);
  }
  double at(std::size_t p, int i, int j) const {
    const std::size_t base = constant() ? 0 : p * dim * dim;
    return values[base + static_cast<std::size_t>(i) * dim + j];
  }
  double& ref(std::size_t p, int i, int j) {
    return values[p * dim * dim + static_cast<std::size_t>(i) * dim + j];
  }
};

}  // namespace entroflow
