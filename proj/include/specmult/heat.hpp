#pragma once

#include <optional>
#include <vector>

#include "specmult/spectral.hpp"

namespace specmult {

/// Empirical Gaussian heat-kernel constant: the sup over sampled (t, x, y)
/// of |p_t(x,y)| t^{n/2} exp(|x-y|^2/(d t)), torus distance on periodic
/// grids. max_violation is the worst excess over reference_K0 when a
/// reference is supplied, else 0.
struct HeatKernelReport {
  std::vector<double> times;
  double K0_estimate = 0.0;
  double d_used = 8.0;
  double max_violation = 0.0;
};

HeatKernelReport estimate_gaussian_constant(const LatticeOperator& op,
                                            const std::vector<double>& times, double d,
                                            std::optional<double> reference_K0 = {});
HeatKernelReport estimate_gaussian_constant(const SpectralDecomposition& sd,
                                            const std::vector<double>& times, double d,
                                            std::optional<double> reference_K0 = {});

/// Kato norm ||V||_K = sup_x int |V(y)| |x-y|^{2-n} dy as a Riemann sum,
/// n >= 3 only. The singular y = x cell contributes |V(x)| times the exact
/// integral of |z|^{2-n} over the ball of volume h^n.
double kato_norm(const Eigen::VectorXd& V, const Grid& grid);

/// Smallness threshold c_n = pi^{n/2} / Gamma(n/2 - 1) for the negative part.
double kato_threshold(int n);

/// max over (x,y) of |e^{-tH_A}(x,y)| - e^{-tH_0}(x,y); nonpositive return
/// certifies the diamagnetic domination on this grid.
double check_diamagnetic(const LatticeOperator& op_A, const LatticeOperator& op_0, double t);

}  // namespace specmult
