#pragma once

#include <stdexcept>

namespace specmult {

/// The fixed Littlewood-Paley pair: psi is the canonical e^{-1/x} bump,
/// even, == 1 on [-1,1], supported in [-2,2]; phi(s) = psi(s) - psi(2s) for
/// s > 0 and 0 for s <= 0, supported in [1/2, 2]. Construction verifies the
/// support facts and the telescoping partition identities
///   psi(s) = sum_{k >= 0} phi(2^k s),   1 - psi(s) = sum_{k < 0} phi(2^k s)
/// at sampled s > 0 and throws if either fails beyond 1e-10.
class DyadicCutoffs {
 public:
  explicit DyadicCutoffs(int sample_rate = 256);

  int sampleRate() const { return sample_rate_; }

  double psi(double s) const;
  double phi(double s) const;

  /// Rescaled cutoff psi_r(s) = psi(r s).
  double psiScaled(double r, double s) const { return psi(r * s); }

  /// Worst deviation of the two partition identities over `samples` points
  /// of (0, s_hi]; used by the construction self-test and check-cutoffs.
  double partitionIdentityError(int samples = 10000, double s_hi = 4.0) const;
  /// Largest |phi| outside [1/2, 2].
  double supportLeakage(int samples = 10000) const;

 private:
  int sample_rate_;
};

DyadicCutoffs make_cutoffs(int sample_rate = 256);

}  // namespace specmult
