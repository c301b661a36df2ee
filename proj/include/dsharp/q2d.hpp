#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsharp/sharpening.hpp"

namespace dsharp {

// Ordered quantile-probability judgments (x_i, p_i), strictly increasing in
// both coordinates, with at least two pairs.
struct QPData {
  std::vector<double> x;
  std::vector<double> p;

  QPData(std::vector<double> xs, std::vector<double> ps);

  // CSV with header "x,p"; rejects non-monotone rows with their row index
  static QPData from_csv(const std::string& path);

  std::size_t size() const { return x.size(); }
};

// Location/scale initializer: least squares of the x_i on the family's
// standard quantiles at p_i. Families: Normal, Laplace, Logistic, Uniform.
// Throws if the fitted scale is not positive.
BaseModel init_location_scale(const QPData& qp, Family family);

// Exponential initializer from the median: mean = median / ln 2. The median
// is taken from an exact p = 0.5 pair or interpolated between the
// bracketing neighbors; throws if 0.5 is not bracketed.
BaseModel init_exponential(const QPData& qp);

// Probability-gap linear system: v_i = p_i - F0(x_i) and
// S0[i,j] = integral of T_j over [0, F0(x_i)].
struct DesignSystem {
  Eigen::VectorXd v;
  Eigen::MatrixXd S0;
};
DesignSystem design_matrix(const QPData& qp, const Distribution& base, int m);

// Least squares via SVD. Requires m <= l and condition number < 1e12;
// rank-deficient designs raise, directing the caller to the lasso.
Eigen::VectorXd solve_ols(const Eigen::VectorXd& v, const Eigen::MatrixXd& S0);

struct LassoResult {
  Eigen::VectorXd beta;
  double lambda = 0.0;
};

// l1-penalized least squares ||v - S0 b||^2 + lambda*||b||_1 by cyclic
// coordinate descent with soft thresholding (handles m > l). Convergence:
// max coefficient change < 1e-10, at most 1e5 sweeps (then raises).
// lambda = nullopt selects automatically: scan a 50-point log grid from
// lambda_max (smallest full-shrinkage value) down to lambda_max*1e-4 and
// keep the largest lambda whose fit matches every pair within 0.01 -- the
// resolution quantile judgments are typically elicited at -- falling back
// to the smallest-lambda solution.
LassoResult solve_lasso(const Eigen::VectorXd& v, const Eigen::MatrixXd& S0,
                        std::optional<double> lambda = std::nullopt);

enum class Q2DMethod { OLS, Lasso };

struct Q2DFit {
  BaseModel base;
  std::vector<double> beta;  // length m
  Q2DMethod method = Q2DMethod::Lasso;
  double lambda = 0.0;       // lasso only
  double residual = 0.0;     // ||v - S0*beta||_2
  DSharpModel model;         // base sharpened by the nonzero coefficients
};

// Full pipeline: initialize the base from the family, build the design, and
// solve. The lasso is used whenever l >= 5; smaller systems use least
// squares when l >= m and the design is well conditioned.
Q2DFit q2d(const QPData& qp, Family family, int m = 6,
           std::optional<double> lambda = std::nullopt);

// Signed-series cdf F0(x) + sum_j beta_j * integral of T_j over [0, F0(x)];
// the linear object the solver fits (no clipping).
double raw_series_cdf(const Distribution& base,
                      const std::map<int, double>& coeffs, double x);

}  // namespace dsharp
