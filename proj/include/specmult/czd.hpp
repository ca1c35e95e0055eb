#pragma once

#include <Eigen/Dense>

#include "specmult/cubes.hpp"

namespace specmult {

/// Calderon-Zygmund decomposition at height lambda: disjoint dyadic cubes
/// selected by the stopping-time rule avg |f| > lambda, good part h equal to
/// f off the cubes and to avg_Q f on each, bad parts f_j = (f - avg) 1_{Q_j}.
struct CZDecomposition {
  double lambda = 0.0;
  std::vector<Cube> cubes;
  Eigen::VectorXd good;
  std::vector<Eigen::VectorXd> bad;
  bool degenerate = false;  // lambda at or below the root average

  struct Realized {
    double good_bound = 0.0;  // max |h| / lambda
    double bad_mass = 0.0;    // max_j int|f_j| / (lambda |Q_j|)
    double cube_mass = 0.0;   // sum |Q_j| * lambda / ||f||_1
  } realized;

  Eigen::VectorXd reconstruct() const;
};

CZDecomposition cz_decompose(const Eigen::VectorXd& f, double lambda, const Grid& grid);

/// Disjoint dyadic cubes covering the open set (a strict-subset mask), each
/// maximal inside it, so the dilate 4Q always meets the complement.
std::vector<Cube> whitney_decompose(const std::vector<char>& open_mask, const Grid& grid);

}  // namespace specmult
