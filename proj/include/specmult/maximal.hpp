#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "specmult/cubes.hpp"

namespace specmult {

enum class FamilyShape { balls, cubes };

/// Uncentered Hardy-Littlewood maximal function over the discrete family:
/// balls = all node centers with radii {0, h, 2h, ..., diameter} in the grid
/// metric (torus metric when periodic; radius 0 is the singleton, so
/// Mf >= |f| pointwise); cubes = the dyadic family plus half-shifted
/// translates. Averages are plain arithmetic means (cell volumes cancel).
Eigen::VectorXd maximal_function(const Eigen::VectorXd& f, const Grid& grid,
                                 FamilyShape shape = FamilyShape::balls);

/// Exhaustive per-point enumeration over the same family with identical
/// per-member arithmetic; the independent oracle for the scatter
/// implementation (equality is exact, not approximate).
Eigen::VectorXd maximal_function_bruteforce(const Eigen::VectorXd& f, const Grid& grid,
                                            FamilyShape shape = FamilyShape::balls);

/// Empirical weak (q,q) constant of the maximal operator for this family:
/// max over seeded random f and thresholds of lambda^q |{Mf > lambda}| / ||f||_q^q.
/// (Counting measure and h^n cancel in the ratio.)
double weak_qq_constant(double q, int trials, const Grid& grid,
                        FamilyShape shape = FamilyShape::balls, std::uint64_t seed = 11);

/// Ball membership list for B(center, radius) in index order.
std::vector<std::int64_t> ball_points(const Grid& grid, std::int64_t center, double radius);

/// Number of distinct radii in the family (k h for k = 0 .. ceil(diam/h)).
int ball_radius_steps(const Grid& grid);

}  // namespace specmult
