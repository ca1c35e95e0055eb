#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <string>

#include "specmult/grid.hpp"

namespace specmult {

using SparseC = Eigen::SparseMatrix<std::complex<double>>;

enum class OperatorKind { laplacian, schrodinger, magnetic_schrodinger };

std::string to_string(OperatorKind k);

/// Electric potential V and vector potential A, both sampled at grid nodes
/// (A carries one component per axis; hopping phases use the midpoint value
/// obtained by averaging the two endpoint nodes).
struct FieldSpec {
  Eigen::VectorXd potential;                        // size total or empty (== 0)
  std::vector<Eigen::VectorXd> vector_potential;    // dim components or empty

  bool hasMagnetic() const;
  Eigen::VectorXd positivePart() const;   // V_+
  Eigen::VectorXd negativePart() const;   // V_-  (V = V_+ - V_-, both >= 0)
  void validate(const Grid& grid) const;
};

/// Symmetric (Hermitian when A != 0) finite-difference operator on a Grid.
/// Off-diagonal entries couple nearest neighbors only.
class LatticeOperator {
 public:
  LatticeOperator(Grid grid, OperatorKind kind, SparseC matrix, bool real_valued);

  const Grid& grid() const { return grid_; }
  OperatorKind kind() const { return kind_; }
  bool realValued() const { return real_; }
  const SparseC& matrix() const { return mat_; }
  Eigen::SparseMatrix<double> realMatrix() const;

  /// Gershgorin upper bound on the largest eigenvalue (cached).
  double spectralBound() const { return spectral_bound_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& f) const { return mat_ * f; }

  /// max_ij |H - H^*| relative to max_ij |H|.
  double hermiticityError() const;

  /// The operator lambda*H viewed on a grid with spacing h/sqrt(lambda);
  /// realizes the rescaling H -> lambda H of the Gaussian bound.
  LatticeOperator rescaled(double lambda) const;

 private:
  Grid grid_;
  OperatorKind kind_;
  SparseC mat_;
  bool real_;
  double spectral_bound_;
};

/// Standard 3-point (per axis) stencil for -Delta. Positive semidefinite;
/// periodic grids keep the constant vector in the kernel, Dirichlet grids
/// are positive definite. Rejects N < 3 per axis.
LatticeOperator build_laplacian(const Grid& grid);

/// -Delta + V with diagonal potential.
LatticeOperator build_schrodinger(const Grid& grid, const Eigen::VectorXd& V);

/// (i grad - A)^2 + V discretized with Peierls phase factors
/// exp(-i h A_edge) on nearest-neighbor hops; reduces exactly to
/// build_laplacian plus diag(V) when A == 0.
LatticeOperator build_magnetic_schrodinger(const Grid& grid, const FieldSpec& fields);

}  // namespace specmult
