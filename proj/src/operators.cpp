#include "specmult/operators.hpp"

#include <cmath>
#include <vector>

namespace specmult {

using Triplet = Eigen::Triplet<std::complex<double>>;

std::string to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::laplacian: return "laplacian";
    case OperatorKind::schrodinger: return "schrodinger";
    case OperatorKind::magnetic_schrodinger: return "magnetic_schrodinger";
  }
  return "?";
}

bool FieldSpec::hasMagnetic() const {
  for (const auto& a : vector_potential)
    if (a.size() > 0 && a.cwiseAbs().maxCoeff() > 0.0) return true;
  return false;
}

Eigen::VectorXd FieldSpec::positivePart() const {
  return potential.size() ? potential.cwiseMax(0.0) : potential;
}

Eigen::VectorXd FieldSpec::negativePart() const {
  return potential.size() ? (-potential).cwiseMax(0.0) : potential;
}

void FieldSpec::validate(const Grid& grid) const {
  const auto total = grid.totalPoints();
  if (potential.size() != 0 && potential.size() != total)
    throw std::invalid_argument("potential size does not match grid");
  if (!vector_potential.empty()) {
    if (static_cast<int>(vector_potential.size()) != grid.dim())
      throw std::invalid_argument("vector potential must have dim components");
    for (const auto& a : vector_potential)
      if (a.size() != total)
        throw std::invalid_argument("vector potential component size does not match grid");
  }
}

LatticeOperator::LatticeOperator(Grid grid, OperatorKind kind, SparseC matrix,
                                 bool real_valued)
    : grid_(std::move(grid)), kind_(kind), mat_(std::move(matrix)), real_(real_valued) {
  // Gershgorin: max_i sum_j |H_ij|
  double bound = 0.0;
  for (int k = 0; k < mat_.outerSize(); ++k) {
    double row = 0.0;
    for (SparseC::InnerIterator it(mat_, k); it; ++it) row += std::abs(it.value());
    bound = std::max(bound, row);
  }
  spectral_bound_ = bound;
}

Eigen::SparseMatrix<double> LatticeOperator::realMatrix() const {
  if (!real_) throw std::logic_error("operator is not real-valued");
  return mat_.real();
}

double LatticeOperator::hermiticityError() const {
  SparseC diff = SparseC(mat_.adjoint()) - mat_;
  double worst = 0.0, scale = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SparseC::InnerIterator it(diff, k); it; ++it)
      worst = std::max(worst, std::abs(it.value()));
  for (int k = 0; k < mat_.outerSize(); ++k)
    for (SparseC::InnerIterator it(mat_, k); it; ++it)
      scale = std::max(scale, std::abs(it.value()));
  return scale > 0.0 ? worst / scale : worst;
}

LatticeOperator LatticeOperator::rescaled(double lambda) const {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  Grid g(grid_.dim(), grid_.pointsPerAxis(), grid_.spacing() / std::sqrt(lambda),
         grid_.boundary(), grid_.originOffset());
  SparseC m = mat_ * std::complex<double>(lambda, 0.0);
  return LatticeOperator(std::move(g), kind_, std::move(m), real_);
}

namespace {

// Neighbor of idx along `axis` in direction dir (+1/-1); returns -1 when the
// hop leaves a Dirichlet grid.
std::int64_t neighbor(const Grid& grid, std::int64_t idx, int axis, int dir) {
  auto m = grid.unflatten(idx);
  int i = m[axis] + dir;
  const int n = grid.pointsPerAxis();
  if (grid.periodic()) {
    i = (i % n + n) % n;
  } else if (i < 0 || i >= n) {
    return -1;
  }
  m[axis] = i;
  return grid.flatten(m);
}

}  // namespace

LatticeOperator build_laplacian(const Grid& grid) {
  if (grid.pointsPerAxis() < 3)
    throw std::invalid_argument("3-point stencil needs N >= 3 per axis");
  const auto total = grid.totalPoints();
  const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
  std::vector<Triplet> trips;
  trips.reserve(total * (2 * grid.dim() + 1));
  for (std::int64_t i = 0; i < total; ++i) {
    trips.emplace_back(i, i, 2.0 * grid.dim() * inv_h2);
    for (int a = 0; a < grid.dim(); ++a)
      for (int dir : {-1, +1}) {
        const auto j = neighbor(grid, i, a, dir);
        if (j >= 0) trips.emplace_back(i, j, -inv_h2);
      }
  }
  SparseC m(total, total);
  m.setFromTriplets(trips.begin(), trips.end());
  return LatticeOperator(grid, OperatorKind::laplacian, std::move(m), true);
}

LatticeOperator build_schrodinger(const Grid& grid, const Eigen::VectorXd& V) {
  FieldSpec f;
  f.potential = V;
  f.validate(grid);
  auto lap = build_laplacian(grid);
  SparseC m = lap.matrix();
  for (std::int64_t i = 0; i < grid.totalPoints(); ++i)
    m.coeffRef(i, i) += V[i];
  return LatticeOperator(grid, OperatorKind::schrodinger, std::move(m), true);
}

LatticeOperator build_magnetic_schrodinger(const Grid& grid, const FieldSpec& fields) {
  fields.validate(grid);
  if (!fields.hasMagnetic()) {
    if (fields.potential.size() == 0)
      return build_laplacian(grid);
    return build_schrodinger(grid, fields.potential);
  }
  if (grid.pointsPerAxis() < 3)
    throw std::invalid_argument("3-point stencil needs N >= 3 per axis");
  const auto total = grid.totalPoints();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  std::vector<Triplet> trips;
  trips.reserve(total * (2 * grid.dim() + 1));
  for (std::int64_t i = 0; i < total; ++i) {
    double diag = 2.0 * grid.dim() * inv_h2;
    if (fields.potential.size()) diag += fields.potential[i];
    trips.emplace_back(i, i, diag);
    for (int a = 0; a < grid.dim(); ++a)
      for (int dir : {-1, +1}) {
        const auto j = neighbor(grid, i, a, dir);
        if (j < 0) continue;
        // Peierls phase with the midpoint (endpoint-average) edge value:
        // H[i][i+e] = -exp(+i h A_edge)/h^2, so a plane wave e^{ikx} sees
        // the symbol (2 - 2cos(h(k + A)))/h^2 -> (k+A)^2, matching
        // (i grad - A)^2. dir is the position of j relative to i.
        const double a_edge = 0.5 * (fields.vector_potential[a][i] +
                                     fields.vector_potential[a][j]);
        const double theta = dir * h * a_edge;
        trips.emplace_back(i, j, -inv_h2 * std::exp(std::complex<double>(0.0, theta)));
      }
  }
  SparseC m(total, total);
  m.setFromTriplets(trips.begin(), trips.end());
  return LatticeOperator(grid, OperatorKind::magnetic_schrodinger, std::move(m), false);
}

}  // namespace specmult
