#pragma once

#include <cmath>

namespace specmult {

/// e^{-1/x} mollifier piece: smooth on R, 0 for x <= 0.
inline double mollifier(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

/// Smooth monotone step: 0 for x <= 0, 1 for x >= 1, C^inf in between.
inline double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = mollifier(x);
  const double b = mollifier(1.0 - x);
  return a / (a + b);
}

}  // namespace specmult
