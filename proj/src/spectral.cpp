#include "specmult/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "specmult/bump.hpp"

#ifdef SPECMULT_USE_LAPACKE
#include <lapacke.h>
#endif

namespace specmult {

double MultiplierFn::supNormOn(double hi, int samples) const {
  double m = std::abs(eval(0.0));
  for (int i = 1; i <= samples; ++i) {
    const double s = hi * static_cast<double>(i) / samples;
    m = std::max(m, std::abs(eval(s)));
  }
  return m;
}

MultiplierFn MultiplierFn::constant(double c) {
  MultiplierFn g;
  g.label = "constant(" + std::to_string(c) + ")";
  g.eval = [c](double) { return Cplx(c, 0.0); };
  g.sup_norm = std::abs(c);
  return g;
}

MultiplierFn MultiplierFn::heat() {
  MultiplierFn g;
  g.label = "heat";
  g.eval = [](double s) { return Cplx(std::exp(-s * s), 0.0); };
  g.sup_norm = 1.0;
  return g;
}

MultiplierFn MultiplierFn::imaginary_power(double y) {
  MultiplierFn g;
  g.label = "imaginary_power(y=" + std::to_string(y) + ")";
  g.eval = [y](double s) {
    if (s <= 0.0) return Cplx(0.0, 0.0);
    const double phase = 2.0 * y * std::log(s);
    return Cplx(std::cos(phase), std::sin(phase));
  };
  g.sup_norm = 1.0;
  return g;
}

MultiplierFn MultiplierFn::fractional(double theta) {
  MultiplierFn g;
  g.label = "fractional(theta=" + std::to_string(theta) + ")";
  g.eval = [theta](double s) {
    if (s <= 0.0) return Cplx(theta == 0.0 ? 1.0 : 0.0, 0.0);
    return Cplx(std::pow(s, 2.0 * theta), 0.0);
  };
  g.sup_norm = g.supNormOn(g.sample_hi);
  return g;
}

MultiplierFn MultiplierFn::indicator_band(double lo, double hi, double tau) {
  if (!(lo < hi) || !(tau > 0.0))
    throw std::invalid_argument("indicator_band needs lo < hi and tau > 0");
  MultiplierFn g;
  g.label = "indicator_band[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  g.eval = [lo, hi, tau](double s) {
    return Cplx(smooth_step((s - lo) / tau) * smooth_step((hi - s) / tau), 0.0);
  };
  g.sup_norm = 1.0;
  return g;
}

MultiplierFn MultiplierFn::from_table(std::vector<std::array<double, 3>> rows) {
  if (rows.empty()) throw std::invalid_argument("empty multiplier table");
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  MultiplierFn g;
  g.label = "table(" + std::to_string(rows.size()) + " rows)";
  g.eval = [rows = std::move(rows)](double s) {
    if (s <= rows.front()[0]) return Cplx(rows.front()[1], rows.front()[2]);
    if (s >= rows.back()[0]) return Cplx(rows.back()[1], rows.back()[2]);
    auto it = std::lower_bound(rows.begin(), rows.end(), s,
                               [](const auto& row, double v) { return row[0] < v; });
    const auto& b = *it;
    const auto& a = *(it - 1);
    const double w = (s - a[0]) / (b[0] - a[0]);
    return Cplx(a[1] + w * (b[1] - a[1]), a[2] + w * (b[2] - a[2]));
  };
  g.sup_norm = g.supNormOn(g.sample_hi);
  return g;
}

double SpectralDecomposition::maxAbsEigenvalue() const {
  if (evals_.size() == 0) return 0.0;
  return std::max(std::abs(evals_.minCoeff()), std::abs(evals_.maxCoeff()));
}

namespace {

#ifdef SPECMULT_USE_LAPACKE
bool lapacke_sym_eig(Eigen::MatrixXd& a, Eigen::VectorXd& w) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, w.data());
  return info == 0;
}

bool lapacke_herm_eig(Eigen::MatrixXcd& a, Eigen::VectorXd& w) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'V', 'L', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
  return info == 0;
}
#endif

}  // namespace

SpectralDecomposition eigendecompose(const LatticeOperator& op, std::int64_t ceiling) {
  const auto total = op.grid().totalPoints();
  if (total > ceiling)
    throw std::invalid_argument("grid exceeds the dense eigensolve ceiling (" +
                                std::to_string(total) + " > " + std::to_string(ceiling) + ")");
  SpectralDecomposition sd;
  sd.grid_ = op.grid();
  sd.real_ = op.realValued();
  if (sd.real_) {
    Eigen::MatrixXd dense = Eigen::MatrixXd(op.realMatrix());
#ifdef SPECMULT_USE_LAPACKE
    if (lapacke_sym_eig(dense, sd.evals_)) {
      sd.vec_r_ = std::move(dense);
      return sd;
    }
#endif
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("eigendecomposition did not converge");
    sd.evals_ = solver.eigenvalues();
    sd.vec_r_ = solver.eigenvectors();
  } else {
    Eigen::MatrixXcd dense = Eigen::MatrixXcd(op.matrix());
#ifdef SPECMULT_USE_LAPACKE
    if (lapacke_herm_eig(dense, sd.evals_)) {
      sd.vec_c_ = std::move(dense);
      return sd;
    }
#endif
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("eigendecomposition did not converge");
    sd.evals_ = solver.eigenvalues();
    sd.vec_c_ = solver.eigenvectors();
  }
  return sd;
}

Eigen::VectorXcd SpectralDecomposition::applyFunction(
    const std::function<Cplx(double)>& w, const Eigen::VectorXcd& f) const {
  const double tol = clampTol();
  if (evals_.size() && evals_[0] < -tol)
    throw std::domain_error("eigenvalue below the clamping tolerance");
  Eigen::VectorXcd wv(evals_.size());
  for (Eigen::Index i = 0; i < evals_.size(); ++i)
    wv[i] = w(std::max(evals_[i], 0.0));
  if (real_) {
    // U (w .* (U^T f)) with real U; split f into real/imag parts.
    Eigen::VectorXd fr = f.real(), fi = f.imag();
    Eigen::VectorXcd coeff =
        (vec_r_.transpose() * fr).cast<Cplx>() +
        Cplx(0, 1) * (vec_r_.transpose() * fi).cast<Cplx>();
    coeff.array() *= wv.array();
    Eigen::VectorXcd out =
        (vec_r_ * coeff.real()).cast<Cplx>() + Cplx(0, 1) * (vec_r_ * coeff.imag()).cast<Cplx>();
    return out;
  }
  Eigen::VectorXcd coeff = vec_c_.adjoint() * f;
  coeff.array() *= wv.array();
  return vec_c_ * coeff;
}

Eigen::MatrixXcd SpectralDecomposition::matrixFunction(
    const std::function<Cplx(double)>& w) const {
  const double tol = clampTol();
  if (evals_.size() && evals_[0] < -tol)
    throw std::domain_error("eigenvalue below the clamping tolerance");
  Eigen::VectorXcd wv(evals_.size());
  for (Eigen::Index i = 0; i < evals_.size(); ++i)
    wv[i] = w(std::max(evals_[i], 0.0));
  if (real_) {
    if ((wv.imag().array().abs() > 0.0).any()) {
      Eigen::MatrixXcd scaled = vec_r_.cast<Cplx>() * wv.asDiagonal();
      return scaled * vec_r_.transpose().cast<Cplx>();
    }
    Eigen::MatrixXd scaled = vec_r_ * wv.real().asDiagonal();
    return (scaled * vec_r_.transpose()).cast<Cplx>();
  }
  Eigen::MatrixXcd scaled = vec_c_ * wv.asDiagonal();
  return scaled * vec_c_.adjoint();
}

double SpectralDecomposition::orthonormalityError() const {
  if (real_) {
    Eigen::MatrixXd g = vec_r_.transpose() * vec_r_;
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff();
  }
  Eigen::MatrixXcd g = vec_c_.adjoint() * vec_c_;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff();
}

double SpectralDecomposition::reconstructionError(const LatticeOperator& op) const {
  Eigen::MatrixXcd rec = matrixFunction([](double s) { return Cplx(s, 0.0); });
  // matrixFunction clamps negatives; undo for the residual by re-adding
  // the raw eigenvalues where they were below zero.
  if (real_) {
    for (Eigen::Index i = 0; i < evals_.size(); ++i)
      if (evals_[i] < 0.0)
        rec += evals_[i] * (vec_r_.col(i) * vec_r_.col(i).transpose()).cast<Cplx>();
  } else {
    for (Eigen::Index i = 0; i < evals_.size(); ++i)
      if (evals_[i] < 0.0)
        rec += evals_[i] * (vec_c_.col(i) * vec_c_.col(i).adjoint());
  }
  const Eigen::MatrixXcd dense = Eigen::MatrixXcd(op.matrix());
  return (rec - dense).cwiseAbs().maxCoeff();
}

Eigen::VectorXcd apply_multiplier(const SpectralDecomposition& sd, const MultiplierFn& g,
                                  const Eigen::VectorXcd& f) {
  return sd.applyFunction([&g](double lam) { return g.eval(std::sqrt(lam)); }, f);
}

namespace {

/// Chebyshev coefficients of F on [0, b] (interpolation at degree+1 nodes).
std::vector<Cplx> chebyshev_coefficients(const std::function<Cplx(double)>& F,
                                         double b, int degree) {
  const int m = degree + 1;
  std::vector<Cplx> samples(m);
  for (int j = 0; j < m; ++j) {
    const double theta = M_PI * (j + 0.5) / m;
    const double s = 0.5 * b * (std::cos(theta) + 1.0);
    samples[j] = F(s);
  }
  std::vector<Cplx> coeff(m);
  for (int k = 0; k < m; ++k) {
    Cplx acc(0.0, 0.0);
    for (int j = 0; j < m; ++j) {
      const double theta = M_PI * (j + 0.5) / m;
      acc += samples[j] * std::cos(k * theta);
    }
    coeff[k] = acc * ((k == 0 ? 1.0 : 2.0) / m);
  }
  return coeff;
}

Eigen::VectorXcd chebyshev_apply(const SparseC& H, double b,
                                 const std::vector<Cplx>& coeff,
                                 const Eigen::VectorXcd& f) {
  // Map [0, b] -> [-1, 1]: X = (2/b) H - I.
  const double alpha = 2.0 / b;
  auto applyX = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    return alpha * (H * v) - v;
  };
  Eigen::VectorXcd t_prev = f;
  Eigen::VectorXcd t_curr = applyX(f);
  Eigen::VectorXcd acc = coeff[0] * t_prev;
  if (coeff.size() > 1) acc += coeff[1] * t_curr;
  for (size_t k = 2; k < coeff.size(); ++k) {
    Eigen::VectorXcd t_next = 2.0 * applyX(t_curr) - t_prev;
    acc += coeff[k] * t_next;
    t_prev.swap(t_curr);
    t_curr.swap(t_next);
  }
  return acc;
}

}  // namespace

Eigen::VectorXcd apply_multiplier_chebyshev(const LatticeOperator& op, const MultiplierFn& g,
                                            int degree, const Eigen::VectorXcd& f) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  const double b = op.spectralBound() * (1.0 + 1e-3);
  auto F = [&g](double s) { return g.eval(std::sqrt(std::max(s, 0.0))); };
  const auto coeff = chebyshev_coefficients(F, b, degree);
  return chebyshev_apply(op.matrix(), b, coeff, f);
}

KernelMatrix multiplier_kernel(const SpectralDecomposition& sd, const MultiplierFn& g) {
  KernelMatrix K{Eigen::MatrixXcd(), sd.grid(), true};
  K.entries = sd.matrixFunction([&g](double lam) { return g.eval(std::sqrt(lam)); }) /
              sd.grid().cellVolume();
  return K;
}

KernelMatrix cosine_propagator(const SpectralDecomposition& sd, double t) {
  if (t < 0.0) throw std::invalid_argument("t must be >= 0");
  KernelMatrix K{Eigen::MatrixXcd(), sd.grid(), true};
  K.entries = sd.matrixFunction([t](double lam) {
    return Cplx(std::cos(t * std::sqrt(lam)), 0.0);
  }) / sd.grid().cellVolume();
  return K;
}

FiniteSpeedReport check_finite_speed(const SpectralDecomposition& sd, double t,
                                     double tol, double buffer) {
  const KernelMatrix K = cosine_propagator(sd, t);
  const auto& grid = sd.grid();
  const double cone = t * (1.0 + buffer);
  const double cell2 = grid.cellVolume() * grid.cellVolume();
  FiniteSpeedReport rep;
  rep.t = t;
  rep.buffer = buffer;
  for (std::int64_t i = 0; i < grid.totalPoints(); ++i)
    for (std::int64_t j = 0; j < grid.totalPoints(); ++j) {
      const double mass = std::abs(K.entries(i, j)) * cell2;
      rep.total_mass += mass;
      if (grid.distance(i, j) > cone) rep.outside_mass += mass;
    }
  rep.relative = rep.total_mass > 0.0 ? rep.outside_mass / rep.total_mass : 0.0;
  rep.pass = rep.relative <= tol;
  return rep;
}

double weighted_schur_norm(const KernelMatrix& K,
                           const std::function<double(const std::array<double, 3>&)>& weight) {
  const auto& grid = K.grid;
  const double vol = grid.cellVolume();
  const auto n = grid.totalPoints();
  double sup_row = 0.0, sup_col = 0.0;
  std::vector<double> col_sums(n, 0.0);
  for (std::int64_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
      const double v = std::abs(K.entries(i, j)) * weight(grid.displacement(i, j)) * vol;
      row += v;
      col_sums[j] += v;
    }
    sup_row = std::max(sup_row, row);
  }
  for (auto c : col_sums) sup_col = std::max(sup_col, c);
  return std::max(sup_row, sup_col);
}

double schur_norm(const KernelMatrix& K) {
  return weighted_schur_norm(K, [](const std::array<double, 3>&) { return 1.0; });
}

Eigen::VectorXcd power_apply(const SpectralDecomposition& sd, double theta, double y,
                             const Eigen::VectorXcd& f) {
  return sd.applyFunction(
      [theta, y](double lam) {
        if (lam <= 0.0) return Cplx(0.0, 0.0);
        const double mod = std::pow(lam, theta);
        const double phase = y * std::log(lam);
        return Cplx(mod * std::cos(phase), mod * std::sin(phase));
      },
      f);
}

KernelMatrix heat_kernel(const SpectralDecomposition& sd, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  KernelMatrix K{Eigen::MatrixXcd(), sd.grid(), true};
  K.entries = sd.matrixFunction([t](double lam) { return Cplx(std::exp(-t * lam), 0.0); }) /
              sd.grid().cellVolume();
  return K;
}

KernelMatrix heat_kernel(const LatticeOperator& op, double t, std::int64_t ceiling) {
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  const auto total = op.grid().totalPoints();
  if (total <= ceiling) return heat_kernel(eigendecompose(op, ceiling), t);
  // Chebyshev fallback: columns of e^{-tH} by the three-term recurrence.
  const double b = op.spectralBound() * (1.0 + 1e-3);
  // e^{-t s} on [0, b]: coefficients decay like Bessel I_k(t b / 2).
  const int degree = static_cast<int>(std::ceil(0.7 * t * b)) + 60;
  const auto coeff = chebyshev_coefficients(
      [t](double s) { return Cplx(std::exp(-t * s), 0.0); }, b, degree);
  KernelMatrix K{Eigen::MatrixXcd(total, total), op.grid(), true};
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(total);
  for (std::int64_t j = 0; j < total; ++j) {
    e[j] = 1.0;
    K.entries.col(j) = chebyshev_apply(op.matrix(), b, coeff, e);
    e[j] = 0.0;
  }
  K.entries /= op.grid().cellVolume();
  return K;
}

}  // namespace specmult
