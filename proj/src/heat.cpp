#include "specmult/heat.hpp"

#include <cmath>

namespace specmult {

namespace {

HeatKernelReport scan_kernels(const Grid& grid, int n,
                              const std::vector<KernelMatrix>& kernels,
                              const std::vector<double>& times, double d,
                              std::optional<double> reference_K0) {
  HeatKernelReport rep;
  rep.times = times;
  rep.d_used = d;
  const auto total = grid.totalPoints();
  double sup = 0.0;
  for (size_t ti = 0; ti < times.size(); ++ti) {
    const double t = times[ti];
    const double tn2 = std::pow(t, 0.5 * n);
    const auto& K = kernels[ti].entries;
    for (std::int64_t i = 0; i < total; ++i)
      for (std::int64_t j = 0; j < total; ++j) {
        const double dist = grid.distance(i, j);
        const double v = std::abs(K(i, j)) * tn2 * std::exp(dist * dist / (d * t));
        if (v > sup) sup = v;
      }
  }
  rep.K0_estimate = sup;
  if (reference_K0) rep.max_violation = std::max(0.0, sup - *reference_K0);
  return rep;
}

}  // namespace

HeatKernelReport estimate_gaussian_constant(const SpectralDecomposition& sd,
                                            const std::vector<double>& times, double d,
                                            std::optional<double> reference_K0) {
  if (times.empty()) throw std::invalid_argument("times must be nonempty");
  if (!(d > 0.0)) throw std::invalid_argument("d must be positive");
  std::vector<KernelMatrix> kernels;
  kernels.reserve(times.size());
  for (double t : times) kernels.push_back(heat_kernel(sd, t));
  return scan_kernels(sd.grid(), sd.grid().dim(), kernels, times, d, reference_K0);
}

HeatKernelReport estimate_gaussian_constant(const LatticeOperator& op,
                                            const std::vector<double>& times, double d,
                                            std::optional<double> reference_K0) {
  if (times.empty()) throw std::invalid_argument("times must be nonempty");
  if (!(d > 0.0)) throw std::invalid_argument("d must be positive");
  if (op.grid().totalPoints() <= SpectralDecomposition::kDefaultCeiling)
    return estimate_gaussian_constant(eigendecompose(op), times, d, reference_K0);
  std::vector<KernelMatrix> kernels;
  kernels.reserve(times.size());
  for (double t : times) kernels.push_back(heat_kernel(op, t));
  return scan_kernels(op.grid(), op.grid().dim(), kernels, times, d, reference_K0);
}

double kato_threshold(int n) {
  if (n < 3) throw std::invalid_argument("Kato threshold needs n >= 3");
  return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n - 1.0);
}

double kato_norm(const Eigen::VectorXd& V, const Grid& grid) {
  const int n = grid.dim();
  if (n < 3) throw std::invalid_argument("Kato norm needs n >= 3 (log kernel out of scope)");
  const auto total = grid.totalPoints();
  if (V.size() != total) throw std::invalid_argument("potential size does not match grid");
  const double vol = grid.cellVolume();
  // Exact integral of |z|^{2-n} over the ball of volume h^n:
  // sigma_{n-1} rho^2 / 2 with rho = (h^n / omega_n)^{1/n}.
  const double omega_n = std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
  const double rho = std::pow(vol / omega_n, 1.0 / n);
  const double self_cell = n * omega_n * rho * rho / 2.0;

  double sup = 0.0;
  for (std::int64_t x = 0; x < total; ++x) {
    double acc = std::abs(V[x]) * self_cell;
    for (std::int64_t y = 0; y < total; ++y) {
      if (y == x) continue;
      const double dist = grid.distance(x, y);
      acc += std::abs(V[y]) * std::pow(dist, 2.0 - n) * vol;
    }
    sup = std::max(sup, acc);
  }
  return sup;
}

double check_diamagnetic(const LatticeOperator& op_A, const LatticeOperator& op_0, double t) {
  if (op_A.grid().totalPoints() != op_0.grid().totalPoints() ||
      op_A.grid().dim() != op_0.grid().dim() ||
      op_A.grid().spacing() != op_0.grid().spacing())
    throw std::invalid_argument("grid mismatch between magnetic and free operators");
  const KernelMatrix KA = heat_kernel(op_A, t);
  const KernelMatrix K0 = heat_kernel(op_0, t);
  double worst = -std::numeric_limits<double>::infinity();
  const auto total = op_A.grid().totalPoints();
  for (std::int64_t i = 0; i < total; ++i)
    for (std::int64_t j = 0; j < total; ++j)
      worst = std::max(worst, std::abs(KA.entries(i, j)) - K0.entries(i, j).real());
  return worst;
}

}  // namespace specmult
