#include "specmult/cubes.hpp"

#include <algorithm>

namespace specmult {

std::int64_t cube_point_count(const Cube& q, int dim) {
  std::int64_t n = 1;
  for (int a = 0; a < dim; ++a) n *= q.side;
  return n;
}

void for_each_cube_point(const Cube& q, const Grid& grid,
                         const std::function<void(std::int64_t)>& fn) {
  const int dim = grid.dim();
  std::array<int, 3> idx{0, 0, 0};
  const int s0 = q.side;
  if (dim == 1) {
    for (int i = 0; i < s0; ++i) {
      idx[0] = q.lo[0] + i;
      fn(grid.flatten(idx));
    }
    return;
  }
  if (dim == 2) {
    for (int i = 0; i < s0; ++i)
      for (int j = 0; j < s0; ++j) {
        idx[0] = q.lo[0] + i;
        idx[1] = q.lo[1] + j;
        fn(grid.flatten(idx));
      }
    return;
  }
  for (int i = 0; i < s0; ++i)
    for (int j = 0; j < s0; ++j)
      for (int k = 0; k < s0; ++k) {
        idx[0] = q.lo[0] + i;
        idx[1] = q.lo[1] + j;
        idx[2] = q.lo[2] + k;
        fn(grid.flatten(idx));
      }
}

std::vector<std::int64_t> cube_points(const Cube& q, const Grid& grid) {
  std::vector<std::int64_t> pts;
  pts.reserve(cube_point_count(q, grid.dim()));
  for_each_cube_point(q, grid, [&pts](std::int64_t k) { pts.push_back(k); });
  return pts;
}

std::vector<Cube> cube_children(const Cube& q, int dim) {
  if (q.side <= 1) return {};
  if (q.side % 2 != 0)
    throw std::invalid_argument("dyadic splitting needs power-of-two sides");
  std::vector<Cube> kids;
  const int half = q.side / 2;
  const int combos = 1 << dim;
  for (int c = 0; c < combos; ++c) {
    Cube child;
    child.side = half;
    child.lo = q.lo;
    for (int a = 0; a < dim; ++a)
      if (c & (1 << a)) child.lo[a] += half;
    kids.push_back(child);
  }
  return kids;
}

Cube root_cube(const Grid& grid) {
  Cube q;
  q.lo = {0, 0, 0};
  q.side = grid.pointsPerAxis();
  return q;
}

std::vector<Cube> dyadic_cube_family(const Grid& grid, bool half_shifted) {
  const int n = grid.pointsPerAxis();
  if ((n & (n - 1)) != 0)
    throw std::invalid_argument("dyadic cube family needs a power-of-two axis size");
  std::vector<Cube> family;
  for (int side = n; side >= 1; side /= 2) {
    for (int shift_pass = 0; shift_pass < (half_shifted && side > 1 ? 2 : 1); ++shift_pass) {
      const int offset = shift_pass == 0 ? 0 : side / 2;
      for (int i0 = offset; i0 + side <= n; i0 += side) {
        if (grid.dim() == 1) {
          family.push_back({{i0, 0, 0}, side});
          continue;
        }
        for (int i1 = offset; i1 + side <= n; i1 += side) {
          if (grid.dim() == 2) {
            family.push_back({{i0, i1, 0}, side});
            continue;
          }
          for (int i2 = offset; i2 + side <= n; i2 += side)
            family.push_back({{i0, i1, i2}, side});
        }
      }
    }
  }
  return family;
}

Cube dilate_clipped(const Cube& q, int factor, const Grid& grid) {
  const int n = grid.pointsPerAxis();
  Cube big;
  const int grow = q.side * (factor - 1) / 2;
  int side = q.side * factor;
  for (int a = 0; a < grid.dim(); ++a) big.lo[a] = q.lo[a] - grow;
  // clip to the grid, keeping the box cubic by shrinking uniformly
  int lo_clip = 0;
  for (int a = 0; a < grid.dim(); ++a) {
    lo_clip = std::max(lo_clip, -big.lo[a]);
    lo_clip = std::max(lo_clip, big.lo[a] + side - n);
  }
  if (lo_clip > 0) {
    // shift inside instead of shrinking when possible
    for (int a = 0; a < grid.dim(); ++a) {
      big.lo[a] = std::max(big.lo[a], 0);
      big.lo[a] = std::min(big.lo[a], n - std::min(side, n));
    }
    side = std::min(side, n);
  }
  big.side = side;
  return big;
}

}  // namespace specmult
