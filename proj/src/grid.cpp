#include "specmult/grid.hpp"

#include <cmath>

namespace specmult {

std::string to_string(Boundary b) {
  return b == Boundary::periodic ? "periodic" : "dirichlet";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "periodic") return Boundary::periodic;
  if (s == "dirichlet") return Boundary::dirichlet;
  throw std::invalid_argument("unknown boundary '" + s + "'");
}

Grid::Grid(int dim, int points_per_axis, double spacing, Boundary boundary,
           std::vector<double> origin_offset)
    : dim_(dim), n_(points_per_axis), h_(spacing), boundary_(boundary),
      origin_(std::move(origin_offset)) {
  if (dim_ < 1 || dim_ > 3) throw std::invalid_argument("grid dim must be 1..3");
  if (n_ < 2) throw std::invalid_argument("need at least 2 points per axis");
  if (!(h_ > 0.0)) throw std::invalid_argument("spacing must be positive");
  if (origin_.empty()) origin_.assign(dim_, 0.0);
  if (static_cast<int>(origin_.size()) != dim_)
    throw std::invalid_argument("origin_offset size must equal dim");
  total_ = 1;
  for (int a = 0; a < dim_; ++a) total_ *= n_;
}

double Grid::cellVolume() const {
  double v = 1.0;
  for (int a = 0; a < dim_; ++a) v *= h_;
  return v;
}

double Grid::maxDistance() const {
  const double per_axis = periodic() ? axisLength() / 2.0 : (n_ - 1) * h_;
  return per_axis * std::sqrt(static_cast<double>(dim_));
}

std::int64_t Grid::flatten(const std::array<int, 3>& idx) const {
  std::int64_t k = 0;
  for (int a = 0; a < dim_; ++a) k = k * n_ + idx[a];
  return k;
}

std::array<int, 3> Grid::unflatten(std::int64_t k) const {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = dim_ - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(k % n_);
    k /= n_;
  }
  return idx;
}

std::array<double, 3> Grid::point(std::int64_t k) const {
  const auto idx = unflatten(k);
  std::array<double, 3> p{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) p[a] = coordinate(a, idx[a]);
  return p;
}

std::array<double, 3> Grid::displacement(std::int64_t i, std::int64_t j) const {
  const auto ia = unflatten(i), ja = unflatten(j);
  std::array<double, 3> d{0.0, 0.0, 0.0};
  const double L = axisLength();
  for (int a = 0; a < dim_; ++a) {
    double z = (ia[a] - ja[a]) * h_;
    if (periodic()) {
      z = std::remainder(z, L);  // wraps into [-L/2, L/2]
    }
    d[a] = z;
  }
  return d;
}

double Grid::distance(std::int64_t i, std::int64_t j) const {
  const auto d = displacement(i, j);
  return std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
}

double Grid::distanceToPoint(std::int64_t i, const std::array<double, 3>& p) const {
  const auto ia = unflatten(i);
  double s = 0.0;
  const double L = axisLength();
  for (int a = 0; a < dim_; ++a) {
    double z = coordinate(a, ia[a]) - p[a];
    if (periodic()) z = std::remainder(z, L);
    s += z * z;
  }
  return std::sqrt(s);
}

Grid centered_grid(int dim, int points_per_axis, double spacing, Boundary b) {
  const double off = -0.5 * (points_per_axis - 1) * spacing;
  return Grid(dim, points_per_axis, spacing, b, std::vector<double>(dim, off));
}

}  // namespace specmult
