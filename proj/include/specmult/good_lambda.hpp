#pragma once

#include <json.hpp>

#include "specmult/cutoffs.hpp"
#include "specmult/maximal.hpp"
#include "specmult/spectral.hpp"
#include "specmult/weights.hpp"

namespace specmult {

/// The (F, G, {G_B, H_B}) data of the good-lambda maximal lemma over the
/// discrete ball family. Providers are indexed by the radius step (the
/// kernels behind them depend on the ball only through its radius).
struct GoodLambdaScenario {
  Grid grid{1, 2, 1.0, Boundary::dirichlet};
  Eigen::VectorXd F, G, MF;
  std::vector<Eigen::VectorXd> H_by_radius;  // H_B for radius k*h
  std::vector<Eigen::VectorXd> G_by_radius;  // G_B for radius k*h
  double q = 2.0;  // (1, inf]
  double a = 1.0;  // >= 1
  double s = 1.0;  // [1, inf)
  Weight w{Eigen::VectorXd::Ones(4), Grid(1, 4, 1.0, Boundary::dirichlet)};
  double rh_norm = 1.0;  // ||w||_{RH_{s'}}

  // worst violations found by the precondition audit (<= tol to accept)
  double cond1_violation = 0.0;
  double cond2_violation = 0.0;
  double cond3_violation = 0.0;

  /// Runs the audit of conditions F <= G_B + H_B, the L^q bound on H_B and
  /// the L^1 bound on G_B over every ball of the family; fills the
  /// violation fields and throws if any exceeds tol.
  void auditConditions(double tol = 1e-12);
};

struct GoodLambdaParams {
  double K = 0.0;
  double gamma = 0.0;
  double C1 = 0.0;
  bool widened_K = false;  // formula under-delivered K >= 2^{n+2} a
};

/// Parameter recipe: K^{q-ps} = 4^s (C0 ||w|| + 2^n)^s a^q and
/// gamma = 4^{-s} (C0 ||w|| + 2^n)^{-s} K^{1-ps}; for q = infinity the
/// a^q/K^q term drops and K = max(2^{n+2} a, the q->inf limit of the
/// display). C1 = [(8 C0 ||w|| + 2^{n+3}) a^p]^{s/(1-ps/q)}.
GoodLambdaParams select_parameters(double a, double q, double p, double s, double C0,
                                   double rh_norm, int n);

/// C0 = 2^{6(n+q)} (c_1 + c_q) for finite q; the q = infinity convention is
/// 2^{6n} (c_1 + 1) with c_infinity == 1.
double good_lambda_C0(int n, double q, double c1, double cq);

struct GoodLambdaRow {
  double lambda = 0.0, lhs = 0.0, rhs = 0.0, margin = 0.0;
};

struct GoodLambdaReport {
  std::vector<GoodLambdaRow> rows;
  bool pass = false;
  double C0 = 0.0, c1 = 0.0, cq = 0.0;
  GoodLambdaParams params;
  double p = 1.0;
  double mf_lp = 0.0, g_lp = 0.0;  // ||MF||_{L^p(w)}, ||G||_{L^p(w)}
  double final_ratio = 0.0;        // mf_lp / g_lp, compared against C1
  bool final_pass = false;

  nlohmann::json to_json() const;
};

/// Checks w{MF > K lambda, G <= gamma lambda} <=
/// C0 ||w||_{RH_{s'}} (gamma/K + a^q/K^q)^{1/s} w{MF > lambda} on the grid
/// of lambdas, with the measured maximal constants feeding C0.
GoodLambdaReport good_lambda_check(const GoodLambdaScenario& sc,
                                   const std::vector<double>& lambda_grid, double p,
                                   double c1, double cq);
/// Convenience overload measuring c_1, c_q on the scenario's grid.
GoodLambdaReport good_lambda_check(const GoodLambdaScenario& sc,
                                   const std::vector<double>& lambda_grid, double p,
                                   int maximal_trials = 12);

struct RecurrenceRow {
  int j = 0;
  double cj = 0.0, dj = 0.0, rhs = 0.0;  // rhs = cj_prev/2 + (K/gamma)^p dj
  bool ok = false;
};

struct RecurrenceReport {
  std::vector<RecurrenceRow> rows;
  bool recurrence_pass = false;
  double sum_c = 0.0;      // == ||MF||_{L^p(w)}^p (exact layer cake)
  double sum_d = 0.0;      // == ||G||_{L^p(w)}^p
  double final_bound = 0.0;  // 2 (K/gamma)^p sum_d
  bool sum_pass = false;
  bool envelope_pass = false;  // c_j below the weak-(1,1) envelope for j < 0

  nlohmann::json to_json() const;
};

/// Verifies the band recurrence c_j <= c_{j-1}/2 + (K/gamma)^p d_j with the
/// layer-cake integrals computed exactly (the integrands are step functions
/// of lambda on a finite grid), plus sum_j c_j <= 2 (K/gamma)^p sum_j d_j.
RecurrenceReport recurrence_check(const GoodLambdaScenario& sc, double p,
                                  const GoodLambdaParams& params);

/// The bootstrap construction: F = |g(sqrt H) f|^nu, and per ball of radius
/// r, H_B = 2^nu |g(sqrt H) psi_r(sqrt H) f|^nu and G_B the complementary
/// piece, with G = kappa M(|f|^nu) and (a, kappa) calibrated as the smallest
/// factors that make the lemma's conditions hold on the whole family.
GoodLambdaScenario make_bootstrap_scenario(const SpectralDecomposition& sd,
                                           const MultiplierFn& g, const Eigen::VectorXcd& f,
                                           double nu, const DyadicCutoffs& cutoffs,
                                           const Weight& w, double q, double s);

}  // namespace specmult
