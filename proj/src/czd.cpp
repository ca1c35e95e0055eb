#include "specmult/czd.hpp"

#include <cmath>

namespace specmult {

Eigen::VectorXd CZDecomposition::reconstruct() const {
  Eigen::VectorXd f = good;
  for (const auto& fj : bad) f += fj;
  return f;
}

namespace {

double cube_abs_average(const Eigen::VectorXd& f, const Cube& q, const Grid& grid) {
  double acc = 0.0;
  std::int64_t count = 0;
  for_each_cube_point(q, grid, [&](std::int64_t k) {
    acc += std::abs(f[k]);
    ++count;
  });
  return acc / count;
}

void cz_descend(const Eigen::VectorXd& f, double lambda, const Grid& grid, const Cube& q,
                std::vector<Cube>& selected) {
  for (const auto& child : cube_children(q, grid.dim())) {
    if (cube_abs_average(f, child, grid) > lambda)
      selected.push_back(child);
    else if (child.side > 1)
      cz_descend(f, lambda, grid, child, selected);
  }
}

}  // namespace

CZDecomposition cz_decompose(const Eigen::VectorXd& f, double lambda, const Grid& grid) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (f.size() != grid.totalPoints())
    throw std::invalid_argument("function size does not match grid");
  CZDecomposition out;
  out.lambda = lambda;
  const Cube root = root_cube(grid);
  if (cube_abs_average(f, root, grid) > lambda) {
    // Degenerate: the root itself exceeds lambda; return the whole-grid cube.
    out.degenerate = true;
    out.cubes.push_back(root);
  } else {
    cz_descend(f, lambda, grid, root, out.cubes);
  }

  out.good = f;
  const double vol = grid.cellVolume();
  double bad_mass = 0.0, cube_volume = 0.0;
  for (const auto& q : out.cubes) {
    double avg = 0.0;
    std::int64_t count = 0;
    for_each_cube_point(q, grid, [&](std::int64_t k) {
      avg += f[k];
      ++count;
    });
    avg /= count;
    Eigen::VectorXd fj = Eigen::VectorXd::Zero(f.size());
    double mass = 0.0;
    for_each_cube_point(q, grid, [&](std::int64_t k) {
      fj[k] = f[k] - avg;
      out.good[k] = avg;
      mass += std::abs(fj[k]) * vol;
    });
    const double qvol = static_cast<double>(count) * vol;
    bad_mass = std::max(bad_mass, mass / (lambda * qvol));
    cube_volume += qvol;
    out.bad.push_back(std::move(fj));
  }
  out.realized.good_bound = out.good.cwiseAbs().maxCoeff() / lambda;
  out.realized.bad_mass = bad_mass;
  const double f_l1 = f.cwiseAbs().sum() * vol;
  out.realized.cube_mass = f_l1 > 0.0 ? cube_volume * lambda / f_l1 : 0.0;
  return out;
}

namespace {

void whitney_descend(const std::vector<char>& mask, const Grid& grid, const Cube& q,
                     std::vector<Cube>& out) {
  bool all_in = true, any_in = false;
  for_each_cube_point(q, grid, [&](std::int64_t k) {
    if (mask[k])
      any_in = true;
    else
      all_in = false;
  });
  if (!any_in) return;
  if (all_in) {
    out.push_back(q);
    return;
  }
  for (const auto& child : cube_children(q, grid.dim()))
    whitney_descend(mask, grid, child, out);
}

}  // namespace

std::vector<Cube> whitney_decompose(const std::vector<char>& open_mask, const Grid& grid) {
  if (static_cast<std::int64_t>(open_mask.size()) != grid.totalPoints())
    throw std::invalid_argument("mask size does not match grid");
  bool any_out = false, any_in = false;
  for (char m : open_mask) (m ? any_in : any_out) = true;
  if (!any_out) throw std::invalid_argument("whitney set must have nonempty complement");
  if (!any_in) return {};
  std::vector<Cube> out;
  whitney_descend(open_mask, grid, root_cube(grid), out);
  return out;
}

}  // namespace specmult
