#include "specmult/mu_norms.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace specmult {

std::vector<double> LambdaGrid::values() const {
  std::vector<double> v;
  const double step = std::pow(2.0, 1.0 / per_octave);
  for (double lam = lo; lam <= hi * (1.0 + 1e-12); lam *= step) v.push_back(lam);
  return v;
}

namespace {

constexpr double kWindowHi = 4.0;  // phi * S_lambda g lives in [1/2, 2]
constexpr int kPadFactor = 8;

std::mutex fftw_mutex;  // fftw planning is not thread-safe

/// F f(xi_k) = ds * FFT(samples zero-padded), xi_k = 2 pi k / (M ds) mapped
/// to (-pi/ds, pi/ds].
std::vector<Cplx> continuum_fft(const std::vector<Cplx>& samples, double ds,
                                std::vector<double>* xi_out) {
  const int m = static_cast<int>(samples.size()) * kPadFactor;
  std::vector<Cplx> in(m, Cplx(0.0, 0.0)), out(m);
  std::copy(samples.begin(), samples.end(), in.begin());
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    fftw_plan plan = fftw_plan_dft_1d(
        m, reinterpret_cast<fftw_complex*>(in.data()),
        reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  const double dxi = 2.0 * M_PI / (m * ds);
  if (xi_out) {
    xi_out->resize(m);
    for (int k = 0; k < m; ++k) {
      const int signed_k = k <= m / 2 ? k : k - m;
      (*xi_out)[k] = signed_k * dxi;
    }
  }
  for (auto& v : out) v *= ds;
  return out;
}

double bracket(double xi) { return std::sqrt(1.0 + xi * xi); }

/// || <xi>^a F[h] ||_{L^1} for h sampled on [0, kWindowHi).
double weighted_l1_of_transform(const std::vector<Cplx>& samples, double ds, double a) {
  std::vector<double> xi;
  const auto transform = continuum_fft(samples, ds, &xi);
  const double dxi = 2.0 * M_PI / (transform.size() * ds);
  double acc = 0.0;
  for (size_t k = 0; k < transform.size(); ++k)
    acc += std::pow(bracket(xi[k]), a) * std::abs(transform[k]) * dxi;
  return acc;
}

double sobolev_norm(const std::vector<Cplx>& samples, double ds, double sigma) {
  std::vector<double> xi;
  const auto transform = continuum_fft(samples, ds, &xi);
  const double dxi = 2.0 * M_PI / (transform.size() * ds);
  double acc = 0.0;
  for (size_t k = 0; k < transform.size(); ++k)
    acc += std::pow(bracket(xi[k]), 2.0 * sigma) * std::norm(transform[k]) * dxi;
  return std::sqrt(acc / (2.0 * M_PI));
}

MuEstimate mu_impl(const MultiplierFn& g, double a, const DyadicCutoffs& cutoffs,
                   const LambdaGrid& grid, bool primed) {
  if (a < 0.0) throw std::invalid_argument("a must be >= 0");
  MuEstimate est;
  est.label = g.label;
  est.a = a;
  est.primed = primed;
  const int n_samples = cutoffs.sampleRate() * static_cast<int>(kWindowHi);
  const double ds = 1.0 / cutoffs.sampleRate();
  std::vector<Cplx> samples(n_samples);
  for (double lam : grid.values()) {
    for (int j = 0; j < n_samples; ++j) {
      const double s = j * ds;
      const double window = primed ? s * cutoffs.phi(s) : cutoffs.phi(s);
      Cplx v(0.0, 0.0);
      if (window != 0.0) {
        v = window * g.eval(lam * s);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
          throw std::domain_error("multiplier sample not finite at s = " +
                                  std::to_string(lam * s));
      }
      samples[j] = v;
    }
    const double value = weighted_l1_of_transform(samples, ds, a);
    est.per_lambda.emplace_back(lam, value);
    est.value = std::max(est.value, value);
  }
  return est;
}

}  // namespace

MuEstimate mu_norm(const MultiplierFn& g, double a, const DyadicCutoffs& cutoffs,
                   const LambdaGrid& grid) {
  return mu_impl(g, a, cutoffs, grid, false);
}

MuEstimate mu_prime_norm(const MultiplierFn& g, double a, const DyadicCutoffs& cutoffs,
                         const LambdaGrid& grid) {
  return mu_impl(g, a, cutoffs, grid, true);
}

double sobolev_majorant(const MultiplierFn& g, double a, double eps,
                        const DyadicCutoffs& cutoffs, const std::vector<double>& t_grid) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double sigma = a + 0.5 + eps;
  const int n_samples = cutoffs.sampleRate() * static_cast<int>(kWindowHi);
  const double ds = 1.0 / cutoffs.sampleRate();
  std::vector<Cplx> samples(n_samples);
  double sup = 0.0;
  for (double t : t_grid) {
    for (int j = 0; j < n_samples; ++j) {
      const double s = j * ds;
      const double window = cutoffs.phi(s);
      samples[j] = window != 0.0 ? window * g.eval(t * s) : Cplx(0.0, 0.0);
    }
    sup = std::max(sup, sobolev_norm(samples, ds, sigma));
  }
  return sup;
}

PredictedConstants predicted_constants(double K0, double mu, double sup_norm, int n,
                                       double sigma, double p, double q) {
  if (!std::isfinite(K0) || !std::isfinite(mu) || !std::isfinite(sup_norm))
    throw std::invalid_argument("predicted_constants needs finite inputs");
  PredictedConstants c;
  c.sigma_valid = sigma > 0.5 * n;
  const double base = 1.0 + mu + sup_norm * sup_norm;
  c.hebweak = std::pow(K0, 4.0) * base;
  if (p > 1.0) c.hebLp = 6.0 * c.hebweak * (p + 1.0 / (p - 1.0));
  c.fh = std::pow(K0, 1.0 + 2.0 * p * p) * base * q;
  return c;
}

double fit_growth_exponent(const std::vector<double>& y, const std::vector<double>& values) {
  if (y.size() != values.size() || y.size() < 2)
    throw std::invalid_argument("need matching y/value lists of size >= 2");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    const double xi = std::log1p(std::abs(y[i]));
    const double yi = std::log(values[i]);
    sx += xi;
    sy += yi;
    sxx += xi * xi;
    sxy += xi * yi;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

nlohmann::json MuEstimate::to_json() const {
  nlohmann::json j;
  j["label"] = label;
  j["a"] = a;
  j["primed"] = primed;
  j["value"] = value;
  auto rows = nlohmann::json::array();
  for (const auto& [lam, v] : per_lambda) rows.push_back({lam, v});
  j["per_lambda"] = rows;
  return j;
}

}  // namespace specmult
