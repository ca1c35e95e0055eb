#pragma once

#include <Eigen/Dense>
#include <json.hpp>

#include "specmult/cubes.hpp"

namespace specmult {

/// Positive grid function with a declared cube family over which the
/// Muckenhoupt and reverse Holder constants are computed. Finite grids only
/// approximate the sup over all cubes from below; every report carries the
/// family it was computed on.
class Weight {
 public:
  static constexpr double kFloor = 1e-30;

  Weight(Eigen::VectorXd values, Grid grid, std::vector<Cube> cube_family = {});

  const Eigen::VectorXd& values() const { return values_; }
  const Grid& grid() const { return grid_; }
  const std::vector<Cube>& cubeFamily() const { return cubes_; }

  double operator[](std::int64_t i) const { return values_[i]; }
  /// w(E) = sum_E w h^n for a set of flat indices.
  double measure(const std::vector<std::int64_t>& set) const;
  double totalMeasure() const;

 private:
  Eigen::VectorXd values_;
  Grid grid_;
  std::vector<Cube> cubes_;
};

struct ApReport {
  double p = 2.0;
  double constant = 1.0;
  Cube argmax_cube;
  nlohmann::json to_json() const;
};

struct RHReport {
  double q = 2.0;  // may be +infinity
  double constant = 1.0;
  Cube argmax_cube;
  nlohmann::json to_json() const;
};

/// sup over the family of (avg_Q w)(avg_Q w^{1-p'})^{p/p'}, p > 1.
ApReport ap_constant(const Weight& w, double p);

/// A_1 convention: sup over the family of (avg_Q w)/(min_Q w).
double a1_constant(const Weight& w);

/// Best C in (avg_Q w^q)^{1/q} <= C avg_Q w over the family; q = infinity
/// uses max_Q w <= C avg_Q w.
RHReport rh_constant(const Weight& w, double q);

/// max over random (Q, E subset Q) of w(E)/w(Q) - ||w||_{RH_{s'}} (|E|/|Q|)^{1/s};
/// nonpositive (up to 1e-12) certifies the subset inequality.
double rh_subset_check(const Weight& w, double s, int trials, std::uint64_t seed = 7);

/// (sum |f|^p w h^n)^{1/p}, p in [1, inf).
double weighted_lp_norm(const Eigen::VectorXcd& f, const Weight& w, double p);
double weighted_lp_norm(const Eigen::VectorXd& f, const Weight& w, double p);

/// w(x) = |x|^alpha with |x| floored at h/2 in the origin cell.
Weight power_weight(double alpha, const Grid& grid);

struct A1Factorization {
  Eigen::VectorXd a, b;      // w = a * b^{1-p} exactly by construction
  double a1_const_a = 0.0;
  double a1_const_b = 0.0;
  double residual = 0.0;     // max relative |w - a b^{1-p}|
  bool converged = true;
};

/// Rubio-de-Francia-style constructive surrogate for the A_p factorization
/// w = a b^{1-p} with a, b of class A_1: a = sum_k 2^{-k} M^k(w^{1/p})
/// (normalized), b = (a/w)^{1/(p-1)}. The verifiable claims are the exact
/// product identity and finiteness of both A_1 constants.
A1Factorization factorize_a1(const Weight& w, double p, int iterations = 12);

}  // namespace specmult
