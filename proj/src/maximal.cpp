#include "specmult/maximal.hpp"

#include <cmath>
#include <random>

namespace specmult {

namespace {

constexpr double kMembershipTol = 1e-9;

/// Average of |f| over the member list, summed in index order. Shared by
/// the scatter implementation and the brute-force oracle so both see
/// bit-identical values.
double member_average(const Eigen::VectorXd& f, const std::vector<std::int64_t>& pts) {
  double acc = 0.0;
  for (auto k : pts) acc += std::abs(f[k]);
  return acc / static_cast<double>(pts.size());
}

}  // namespace

int ball_radius_steps(const Grid& grid) {
  return static_cast<int>(std::ceil(grid.maxDistance() / grid.spacing())) + 1;
}

std::vector<std::int64_t> ball_points(const Grid& grid, std::int64_t center, double radius) {
  std::vector<std::int64_t> pts;
  for (std::int64_t k = 0; k < grid.totalPoints(); ++k)
    if (grid.distance(k, center) <= radius + kMembershipTol) pts.push_back(k);
  return pts;
}

Eigen::VectorXd maximal_function(const Eigen::VectorXd& f, const Grid& grid,
                                 FamilyShape shape) {
  const auto total = grid.totalPoints();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(total);
  if (shape == FamilyShape::balls) {
    const int steps = ball_radius_steps(grid);
    for (std::int64_t c = 0; c < total; ++c)
      for (int k = 0; k < steps; ++k) {
        const auto pts = ball_points(grid, c, k * grid.spacing());
        const double avg = member_average(f, pts);
        for (auto p : pts) out[p] = std::max(out[p], avg);
      }
    return out;
  }
  for (const auto& q : dyadic_cube_family(grid, true)) {
    const auto pts = cube_points(q, grid);
    const double avg = member_average(f, pts);
    for (auto p : pts) out[p] = std::max(out[p], avg);
  }
  return out;
}

Eigen::VectorXd maximal_function_bruteforce(const Eigen::VectorXd& f, const Grid& grid,
                                            FamilyShape shape) {
  const auto total = grid.totalPoints();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(total);
  if (shape == FamilyShape::balls) {
    const int steps = ball_radius_steps(grid);
    for (std::int64_t x = 0; x < total; ++x) {
      double best = 0.0;
      for (std::int64_t c = 0; c < total; ++c)
        for (int k = 0; k < steps; ++k) {
          const double radius = k * grid.spacing();
          if (grid.distance(x, c) > radius + kMembershipTol) continue;
          best = std::max(best, member_average(f, ball_points(grid, c, radius)));
        }
      out[x] = best;
    }
    return out;
  }
  const auto family = dyadic_cube_family(grid, true);
  for (std::int64_t x = 0; x < total; ++x) {
    double best = 0.0;
    const auto xi = grid.unflatten(x);
    for (const auto& q : family) {
      bool inside = true;
      for (int a = 0; a < grid.dim(); ++a)
        inside = inside && xi[a] >= q.lo[a] && xi[a] < q.lo[a] + q.side;
      if (!inside) continue;
      best = std::max(best, member_average(f, cube_points(q, grid)));
    }
    out[x] = best;
  }
  return out;
}

double weak_qq_constant(double q, int trials, const Grid& grid, FamilyShape shape,
                        std::uint64_t seed) {
  if (q < 1.0) throw std::invalid_argument("q must be >= 1");
  if (!std::isfinite(q)) return 1.0;  // c_infinity == 1 by convention
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> pick(0, grid.totalPoints() - 1);
  const auto total = grid.totalPoints();
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd f(total);
    switch (trial % 3) {
      case 0:  // white noise
        for (auto& v : f.reshaped()) v = gauss(rng);
        break;
      case 1: {  // sparse spikes
        f.setZero();
        for (int s = 0; s < 1 + trial; ++s) f[pick(rng)] += 1.0 + std::abs(gauss(rng));
        break;
      }
      default: {  // indicator of a random ball
        f.setZero();
        const auto c = pick(rng);
        const double r = (1 + (trial % 7)) * grid.spacing();
        for (auto p : ball_points(grid, c, r)) f[p] = 1.0;
      }
    }
    const Eigen::VectorXd mf = maximal_function(f, grid, shape);
    const double fq = f.array().abs().pow(q).sum();
    if (fq <= 0.0) continue;
    // lambda^q |{Mf > lambda}| is maximized just below each distinct value.
    std::vector<double> vals(mf.data(), mf.data() + mf.size());
    std::sort(vals.begin(), vals.end());
    for (size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] <= 0.0) continue;
      if (i > 0 && vals[i] == vals[i - 1]) continue;
      const double count = static_cast<double>(vals.size() - i);  // |{Mf >= vals[i]}|
      worst = std::max(worst, std::pow(vals[i], q) * count / fq);
    }
  }
  return worst;
}

}  // namespace specmult
