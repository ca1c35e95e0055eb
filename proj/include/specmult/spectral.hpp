#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specmult/operators.hpp"

namespace specmult {

using Cplx = std::complex<double>;

/// Scalar multiplier g on [0, infinity). eval must be finite on the sampled
/// range; the value at s = 0 is declared explicitly because discrete spectra
/// may contain 0.
struct MultiplierFn {
  std::string label;
  std::function<Cplx(double)> eval;
  double sup_norm = 0.0;      // estimated on [0, sample_hi]
  double sample_hi = 16.0;    // range the sup was sampled on

  Cplx operator()(double s) const { return eval(s); }

  /// max |g| sampled on [0, hi] (refreshes the cached estimate).
  double supNormOn(double hi, int samples = 8192) const;

  static MultiplierFn constant(double c);
  static MultiplierFn heat();                                  // e^{-s^2}
  static MultiplierFn imaginary_power(double y);               // s^{2iy}, 0 at 0
  static MultiplierFn fractional(double theta);                // s^{2 theta}
  static MultiplierFn indicator_band(double lo, double hi, double tau);
  /// Piecewise-linear interpolation of (s, Re g, Im g) samples; clamps
  /// outside the table range.
  static MultiplierFn from_table(std::vector<std::array<double, 3>> rows);
};

/// Dense integral kernel indexed by grid points. entries(x, y) carries the
/// 1/h^n density normalization, so discrete kernels converge to their
/// continuum counterparts and (Af)(x) = sum_y entries(x,y) f(y) h^n.
struct KernelMatrix {
  Eigen::MatrixXcd entries;
  Grid grid;
  bool density_convention = true;

  Eigen::MatrixXd realEntries() const { return entries.real(); }
};

/// Exact functional-calculus oracle: full eigendecomposition of a
/// LatticeOperator. Eigenvalues ascend; eigenvectors are orthonormal for the
/// unweighted dot product (the h^n factors cancel in U f(Lambda) U^*).
class SpectralDecomposition {
 public:
  static constexpr std::int64_t kDefaultCeiling = 4096;

  const Grid& grid() const { return grid_; }
  const Eigen::VectorXd& eigenvalues() const { return evals_; }
  bool realVectors() const { return real_; }
  const Eigen::MatrixXd& realBasis() const { return vec_r_; }
  const Eigen::MatrixXcd& complexBasis() const { return vec_c_; }

  double maxAbsEigenvalue() const;
  /// Negative eigenvalues above -clampTol() are treated as 0; anything
  /// below trips the precondition check.
  double clampTol() const { return 1e-8 * std::max(maxAbsEigenvalue(), 1e-300); }

  /// sum_i w(lambda_i^clamped) <e_i, f> e_i.
  Eigen::VectorXcd applyFunction(const std::function<Cplx(double)>& w,
                                 const Eigen::VectorXcd& f) const;
  /// Full matrix of w(H) (no density normalization).
  Eigen::MatrixXcd matrixFunction(const std::function<Cplx(double)>& w) const;

  double orthonormalityError() const;
  double reconstructionError(const LatticeOperator& op) const;

  friend SpectralDecomposition eigendecompose(const LatticeOperator&, std::int64_t);

 private:
  Grid grid_{1, 2, 1.0, Boundary::dirichlet};
  Eigen::VectorXd evals_;
  Eigen::MatrixXd vec_r_;
  Eigen::MatrixXcd vec_c_;
  bool real_ = true;
};

SpectralDecomposition eigendecompose(const LatticeOperator& op,
                                     std::int64_t ceiling = SpectralDecomposition::kDefaultCeiling);

/// g(sqrt(H)) f through the eigen-oracle.
Eigen::VectorXcd apply_multiplier(const SpectralDecomposition& sd, const MultiplierFn& g,
                                  const Eigen::VectorXcd& f);

/// Matrix-free alternative: Chebyshev expansion of s -> g(sqrt(s)) on
/// [0, spectral_bound*(1+1e-3)] applied by the three-term recurrence.
Eigen::VectorXcd apply_multiplier_chebyshev(const LatticeOperator& op, const MultiplierFn& g,
                                            int degree, const Eigen::VectorXcd& f);

/// Kernel of g(sqrt(H)) in the density convention.
KernelMatrix multiplier_kernel(const SpectralDecomposition& sd, const MultiplierFn& g);

/// Kernel of cos(t sqrt(H)).
KernelMatrix cosine_propagator(const SpectralDecomposition& sd, double t);

struct FiniteSpeedReport {
  double t = 0.0;
  double buffer = 0.25;
  double outside_mass = 0.0;   // sum |K| h^{2n} outside |x-y| <= t(1+buffer)
  double total_mass = 0.0;
  double relative = 0.0;
  bool pass = false;
};

/// Empirical check of the finite-speed-of-propagation property: discrete
/// operators have exponentially small (not exactly zero) tails outside the
/// light cone, so the criterion is relative outside-cone mass <= tol.
FiniteSpeedReport check_finite_speed(const SpectralDecomposition& sd, double t,
                                     double tol = 1e-3, double buffer = 0.25);

/// max(sup_x sum_y, sup_y sum_x) of |K(x,y)| w(x-y) h^n; the unweighted
/// Schur norm is w == 1.
double weighted_schur_norm(const KernelMatrix& K,
                           const std::function<double(const std::array<double, 3>&)>& weight);
double schur_norm(const KernelMatrix& K);

/// H^{theta + iy} f with 0^{theta+iy} := 0 (spectral projection off ker H).
Eigen::VectorXcd power_apply(const SpectralDecomposition& sd, double theta, double y,
                             const Eigen::VectorXcd& f);

/// Heat propagator e^{-tH} as a density-convention kernel. Uses the
/// eigendecomposition up to `ceiling` total points and per-column Chebyshev
/// expansions of e^{-t s} above it.
KernelMatrix heat_kernel(const LatticeOperator& op, double t,
                         std::int64_t ceiling = SpectralDecomposition::kDefaultCeiling);
KernelMatrix heat_kernel(const SpectralDecomposition& sd, double t);

}  // namespace specmult
