#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "entroflow/errors.hpp"

namespace entroflow {

inline constexpr int kMaxDim = 4;

/// Uniform periodic tensor grid on a flat torus. Axis 0 is the fastest
/// varying index of the flattened point ordering.
class Grid {
 public:
  Grid(int dim, int points_per_dim, std::vector<double> periods);

  int dim() const { return dim_; }
  int points_per_dim() const { return points_; }
  std::size_t size() const { return size_; }
  double period(int axis) const { return periods_[axis]; }
  double spacing(int axis) const { return periods_[axis] / points_; }

  double cell_volume() const;
  double total_volume() const;

  std::size_t stride(int axis) const { return strides_[axis]; }

  /// Coordinates of the grid point with the given flat index.
  void point(std::size_t flat, std::span<double> out) const;

 private:
  int dim_ = 0;
  int points_ = 0;
  std::size_t size_ = 0;
  std::vector<double> periods_;
  std::array<std::size_t, kMaxDim> strides_{};
};

}  // namespace entroflow
