#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "specmult/grid.hpp"

namespace specmult {

/// Axis-aligned cube of grid cells: per-axis start index `lo`, equal side
/// length `side` (in cells) on every axis.
struct Cube {
  std::array<int, 3> lo{0, 0, 0};
  int side = 0;

  bool operator==(const Cube& other) const {
    return lo == other.lo && side == other.side;
  }
};

/// Number of grid points in the cube (side^dim).
std::int64_t cube_point_count(const Cube& q, int dim);

/// Visit the flat indices of the cube's points in row-major order.
void for_each_cube_point(const Cube& q, const Grid& grid,
                         const std::function<void(std::int64_t)>& fn);
std::vector<std::int64_t> cube_points(const Cube& q, const Grid& grid);

/// Children of a cube under near-halving splits (exact halves when the side
/// is even); a side-1 cube has no children.
std::vector<Cube> cube_children(const Cube& q, int dim);

/// Root cube covering the whole grid.
Cube root_cube(const Grid& grid);

/// All dyadic cubes obtained by recursive splitting from the root, plus
/// (optionally) the half-shifted translates that fit inside the grid.
std::vector<Cube> dyadic_cube_family(const Grid& grid, bool half_shifted = true);

/// The concentric dilation mQ clipped to the grid (used for the Whitney 4Q
/// test and the 16x balls of the good-lambda localization).
Cube dilate_clipped(const Cube& q, int factor, const Grid& grid);

/// Side length in physical units.
inline double cube_side_length(const Cube& q, const Grid& grid) {
  return q.side * grid.spacing();
}

}  // namespace specmult
