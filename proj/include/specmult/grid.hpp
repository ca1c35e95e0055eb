#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace specmult {

enum class Boundary { periodic, dirichlet };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

/// Uniform finite grid in dimension 1..3 with N points per axis and
/// spacing h. Node i along an axis sits at origin_offset + i*h.
/// Periodic grids use the wrapped (torus) metric everywhere a distance
/// or displacement appears.
class Grid {
 public:
  Grid(int dim, int points_per_axis, double spacing, Boundary boundary,
       std::vector<double> origin_offset = {});

  int dim() const { return dim_; }
  int pointsPerAxis() const { return n_; }
  std::int64_t totalPoints() const { return total_; }
  double spacing() const { return h_; }
  Boundary boundary() const { return boundary_; }
  bool periodic() const { return boundary_ == Boundary::periodic; }
  const std::vector<double>& originOffset() const { return origin_; }

  /// Physical extent of one axis (N*h; the torus circumference when periodic).
  double axisLength() const { return n_ * h_; }
  /// Cell volume h^n carried by every discrete L^p integral.
  double cellVolume() const;
  /// Largest distance realizable between two nodes.
  double maxDistance() const;

  // Row-major flattening, axis 0 slowest.
  std::int64_t flatten(const std::array<int, 3>& idx) const;
  std::array<int, 3> unflatten(std::int64_t k) const;

  double coordinate(int axis, int i) const { return origin_[axis] + i * h_; }
  std::array<double, 3> point(std::int64_t k) const;

  /// Per-axis displacement coordinate(i) - coordinate(j), wrapped into
  /// [-L/2, L/2) on periodic grids.
  std::array<double, 3> displacement(std::int64_t i, std::int64_t j) const;
  double distance(std::int64_t i, std::int64_t j) const;
  /// Distance from node i to an arbitrary physical point (same metric).
  double distanceToPoint(std::int64_t i, const std::array<double, 3>& p) const;

 private:
  int dim_;
  int n_;
  double h_;
  Boundary boundary_;
  std::vector<double> origin_;
  std::int64_t total_;
};

/// Grid whose nodes straddle 0 symmetrically: offset -(N-1)h/2 per axis.
Grid centered_grid(int dim, int points_per_axis, double spacing, Boundary b);

}  // namespace specmult
