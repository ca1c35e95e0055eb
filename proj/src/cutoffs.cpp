#include "specmult/cutoffs.hpp"

#include <cmath>
#include <string>

#include "specmult/bump.hpp"

namespace specmult {

double DyadicCutoffs::psi(double s) const { return smooth_step(2.0 - std::abs(s)); }

double DyadicCutoffs::phi(double s) const {
  if (s <= 0.0) return 0.0;
  return psi(s) - psi(2.0 * s);
}

double DyadicCutoffs::partitionIdentityError(int samples, double s_hi) const {
  double worst = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double s = s_hi * static_cast<double>(i) / samples;
    // phi(2^k s) vanishes once 2^k s > 2 or 2^k s < 1/2; truncate there.
    double sum_pos = 0.0;  // k >= 0
    for (int k = 0; k <= 80; ++k) {
      const double arg = std::ldexp(s, k);
      if (arg > 2.0) break;
      sum_pos += phi(arg);
    }
    double sum_neg = 0.0;  // k < 0
    for (int k = -1; k >= -80; --k) {
      const double arg = std::ldexp(s, k);
      if (arg < 0.5) break;
      sum_neg += phi(arg);
    }
    worst = std::max(worst, std::abs(sum_pos - psi(s)));
    worst = std::max(worst, std::abs(sum_neg - (1.0 - psi(s))));
  }
  return worst;
}

double DyadicCutoffs::supportLeakage(int samples) const {
  double worst = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double s = -1.0 + 6.0 * static_cast<double>(i) / samples;
    if (s >= 0.5 && s <= 2.0) continue;
    worst = std::max(worst, std::abs(phi(s)));
  }
  return worst;
}

DyadicCutoffs::DyadicCutoffs(int sample_rate) : sample_rate_(sample_rate) {
  if (sample_rate_ < 64) throw std::invalid_argument("sample_rate must be >= 64");
  const double id_err = partitionIdentityError(2048);
  if (id_err > 1e-10)
    throw std::runtime_error("cutoff partition identity failed: " + std::to_string(id_err));
  if (supportLeakage(2048) > 1e-12)
    throw std::runtime_error("phi leaks outside [1/2, 2]");
}

DyadicCutoffs make_cutoffs(int sample_rate) { return DyadicCutoffs(sample_rate); }

}  // namespace specmult
