#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "specmult/cutoffs.hpp"
#include "specmult/spectral.hpp"

namespace specmult {

/// Geometric grid of scaling parameters for the sup over lambda.
struct LambdaGrid {
  double lo = 0.0009765625;  // 2^-10
  double hi = 1024.0;        // 2^10
  int per_octave = 8;
  std::vector<double> values() const;
};

/// One mu_a / mu'_a evaluation: value = sup over the lambda grid of
/// ||<xi>^a F[phi(s) S_lambda g]||_{L^1}. Fourier convention module-wide:
/// F f(xi) = int f(s) e^{-i s xi} ds, approximated by an FFT of the samples
/// on [0, 4) at sample_rate points per unit with 8x zero padding.
struct MuEstimate {
  std::string label;
  double a = 0.0;
  bool primed = false;
  double value = 0.0;
  std::vector<std::pair<double, double>> per_lambda;

  nlohmann::json to_json() const;
};

MuEstimate mu_norm(const MultiplierFn& g, double a, const DyadicCutoffs& cutoffs,
                   const LambdaGrid& grid = {});
MuEstimate mu_prime_norm(const MultiplierFn& g, double a, const DyadicCutoffs& cutoffs,
                         const LambdaGrid& grid = {});

/// sup_t || phi S_t g ||_{H^{a + 1/2 + eps}} over the given t grid, with
/// ||u||_{H^sigma}^2 = (2 pi)^{-1} int <xi>^{2 sigma} |u^hat|^2 d xi.
double sobolev_majorant(const MultiplierFn& g, double a, double eps,
                        const DyadicCutoffs& cutoffs, const std::vector<double>& t_grid);

/// Structural constants of the main estimates with every unspecified c(...)
/// factor set to 1; shape-only values for trend tests, never absolute ones.
struct PredictedConstants {
  double hebweak = 0.0;   // K0^4 (1 + mu + ||g||^2)
  double hebLp = 0.0;     // 6 * hebweak * (p + (p-1)^{-1})
  double fh = 0.0;        // K0^{1+2p^2} (1 + mu + ||g||^2) q
  bool sigma_valid = false;  // sigma > n/2 (the unprimed family's hypothesis)
};

PredictedConstants predicted_constants(double K0, double mu, double sup_norm, int n,
                                       double sigma, double p, double q);

/// Least-squares slope of log(values) against log(1 + y); the growth
/// exponent fits of Remark-style bounds.
double fit_growth_exponent(const std::vector<double>& y, const std::vector<double>& values);

}  // namespace specmult
