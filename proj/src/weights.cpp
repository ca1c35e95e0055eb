#include "specmult/weights.hpp"

#include <cmath>
#include <random>

#include "specmult/maximal.hpp"

namespace specmult {

namespace {

nlohmann::json cube_to_json(const Cube& q) {
  return nlohmann::json{{"lo", {q.lo[0], q.lo[1], q.lo[2]}}, {"side", q.side}};
}

}  // namespace

nlohmann::json ApReport::to_json() const {
  return {{"p", p}, {"constant", constant}, {"argmax_cube", cube_to_json(argmax_cube)}};
}

nlohmann::json RHReport::to_json() const {
  nlohmann::json j{{"constant", constant}, {"argmax_cube", cube_to_json(argmax_cube)}};
  if (std::isfinite(q))
    j["q"] = q;
  else
    j["q"] = "inf";
  return j;
}

Weight::Weight(Eigen::VectorXd values, Grid grid, std::vector<Cube> cube_family)
    : values_(std::move(values)), grid_(std::move(grid)), cubes_(std::move(cube_family)) {
  if (values_.size() != grid_.totalPoints())
    throw std::invalid_argument("weight size does not match grid");
  values_ = values_.cwiseMax(kFloor);
  if (cubes_.empty()) cubes_ = dyadic_cube_family(grid_, true);
  if (cubes_.empty()) throw std::invalid_argument("empty cube family");
}

double Weight::measure(const std::vector<std::int64_t>& set) const {
  double acc = 0.0;
  for (auto k : set) acc += values_[k];
  return acc * grid_.cellVolume();
}

double Weight::totalMeasure() const { return values_.sum() * grid_.cellVolume(); }

ApReport ap_constant(const Weight& w, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("A_p needs p > 1");
  const double pp = p / (p - 1.0);  // p'
  ApReport rep;
  rep.p = p;
  rep.constant = 0.0;
  for (const auto& q : w.cubeFamily()) {
    double avg_w = 0.0, avg_dual = 0.0;
    std::int64_t count = 0;
    for_each_cube_point(q, w.grid(), [&](std::int64_t k) {
      avg_w += w[k];
      avg_dual += std::pow(w[k], 1.0 - pp);
      ++count;
    });
    avg_w /= count;
    avg_dual /= count;
    const double val = avg_w * std::pow(avg_dual, p / pp);
    if (val > rep.constant) {
      rep.constant = val;
      rep.argmax_cube = q;
    }
  }
  return rep;
}

double a1_constant(const Weight& w) {
  double sup = 0.0;
  for (const auto& q : w.cubeFamily()) {
    double avg = 0.0, lo = std::numeric_limits<double>::infinity();
    std::int64_t count = 0;
    for_each_cube_point(q, w.grid(), [&](std::int64_t k) {
      avg += w[k];
      lo = std::min(lo, w[k]);
      ++count;
    });
    sup = std::max(sup, avg / count / lo);
  }
  return sup;
}

RHReport rh_constant(const Weight& w, double q_exp) {
  if (!(q_exp > 1.0)) throw std::invalid_argument("RH_q needs q > 1");
  RHReport rep;
  rep.q = q_exp;
  rep.constant = 0.0;
  const bool inf = !std::isfinite(q_exp);
  for (const auto& q : w.cubeFamily()) {
    double avg = 0.0, avg_pow = 0.0, hi = 0.0;
    std::int64_t count = 0;
    for_each_cube_point(q, w.grid(), [&](std::int64_t k) {
      avg += w[k];
      if (inf)
        hi = std::max(hi, w[k]);
      else
        avg_pow += std::pow(w[k], q_exp);
      ++count;
    });
    avg /= count;
    const double lhs = inf ? hi : std::pow(avg_pow / count, 1.0 / q_exp);
    const double val = lhs / avg;
    if (val > rep.constant) {
      rep.constant = val;
      rep.argmax_cube = q;
    }
  }
  return rep;
}

double rh_subset_check(const Weight& w, double s, int trials, std::uint64_t seed) {
  if (s < 1.0) throw std::invalid_argument("s must be >= 1");
  const double s_dual = s > 1.0 ? s / (s - 1.0) : std::numeric_limits<double>::infinity();
  const double rh = rh_constant(w, s_dual).constant;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick_cube(0, w.cubeFamily().size() - 1);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const Cube& q = w.cubeFamily()[pick_cube(rng)];
    const auto pts = cube_points(q, w.grid());
    std::vector<std::int64_t> subset;
    const double keep = unif(rng);
    for (auto k : pts)
      if (unif(rng) < keep) subset.push_back(k);
    const double wQ = w.measure(pts);
    const double wE = w.measure(subset);
    const double frac = static_cast<double>(subset.size()) / pts.size();
    const double lhs = wQ > 0.0 ? wE / wQ : 0.0;
    const double rhs = rh * std::pow(frac, 1.0 / s);
    worst = std::max(worst, lhs - rhs);
  }
  return worst;
}

double weighted_lp_norm(const Eigen::VectorXcd& f, const Weight& w, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("weighted_lp_norm needs p in [1, inf)");
  if (f.size() != w.values().size())
    throw std::invalid_argument("function and weight live on different grids");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i)
    acc += std::pow(std::abs(f[i]), p) * w[i];
  return std::pow(acc * w.grid().cellVolume(), 1.0 / p);
}

double weighted_lp_norm(const Eigen::VectorXd& f, const Weight& w, double p) {
  return weighted_lp_norm(Eigen::VectorXcd(f.cast<Cplx>()), w, p);
}

Weight power_weight(double alpha, const Grid& grid) {
  const auto total = grid.totalPoints();
  Eigen::VectorXd v(total);
  const double floor_r = grid.spacing() / 2.0;
  for (std::int64_t k = 0; k < total; ++k) {
    const auto p = grid.point(k);
    const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    v[k] = std::pow(std::max(r, floor_r), alpha);
  }
  return Weight(std::move(v), grid);
}

A1Factorization factorize_a1(const Weight& w, double p, int iterations) {
  if (!(p > 1.0)) throw std::invalid_argument("factorization needs p > 1");
  const auto& grid = w.grid();
  A1Factorization out;
  // a = sum_{k<=K} 2^{-k} M^k(w^{1/p}); M is a sup-norm contraction on the
  // finite grid so the series converges geometrically.
  Eigen::VectorXd term = w.values().array().pow(1.0 / p);
  Eigen::VectorXd a = term;
  double scale = 1.0;
  for (int k = 1; k <= iterations; ++k) {
    term = maximal_function(term, grid, FamilyShape::cubes);
    scale *= 0.5;
    a += scale * term;
    if (!term.allFinite()) {
      out.converged = false;
      break;
    }
  }
  a /= a.mean();
  Eigen::VectorXd b(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    b[i] = std::pow(a[i] / w[i], 1.0 / (p - 1.0));
  out.a = a;
  out.b = b;
  Weight wa(a, grid, w.cubeFamily());
  Weight wb(b, grid, w.cubeFamily());
  out.a1_const_a = a1_constant(wa);
  out.a1_const_b = a1_constant(wb);
  double rel = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double recon = a[i] * std::pow(b[i], 1.0 - p);
    rel = std::max(rel, std::abs(recon - w[i]) / std::max(w[i], Weight::kFloor));
  }
  out.residual = rel;
  return out;
}

}  // namespace specmult
