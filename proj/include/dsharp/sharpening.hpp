#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "dsharp/distributions.hpp"

namespace dsharp {

// Orthogonal-series coefficients of the comparison ratio d(u) between the
// data distribution and a base model, estimated as sample means
//   coeff[j] = (1/n) * sum_i T_j(F0(x_i)),  j = 1..m_max.
std::vector<double> estimate_raw(const Sample& data, const Distribution& base,
                                 int m_max);

struct OpenSelection {
  std::vector<int> selected;           // retained orders, ascending
  std::map<int, double> smooth;        // order -> raw coefficient value
  std::vector<double> scores;          // penalized ordered sums, m = 1..m_max
};

// Ordered penalization: sort coefficients by |value| descending, score the
// top-m prefix as (sum of squares) - gamma*m/n, and keep the prefix with the
// best score. Ties break toward smaller m; if no prefix scores above zero
// the selection is empty. The classical AIC charge is gamma = 2; the fitting
// pipeline defaults to the stricter gamma = log(n) (see pipeline_gamma).
OpenSelection open_select(std::span<const double> raw, std::size_t n,
                          double gamma = 2.0);

// n-adaptive selection penalty used by the fitting pipeline (BIC charge)
double pipeline_gamma(std::size_t n);

struct SharpeningFit {
  std::shared_ptr<const Distribution> base;
  std::size_t n = 0;
  double gamma = 2.0;                  // penalty the selection actually used
  std::vector<double> raw_coeffs;      // j = 1..m_max
  std::vector<int> selected;
  std::map<int, double> smooth_coeffs;
  std::vector<double> open_scores;
};

// estimate_raw followed by open_select; gamma defaults to pipeline_gamma(n)
SharpeningFit fit_sharpening(const Sample& data,
                             std::shared_ptr<const Distribution> base,
                             int m_max,
                             std::optional<double> gamma = std::nullopt);
SharpeningFit fit_sharpening(const Sample& data, const BaseModel& base,
                             int m_max,
                             std::optional<double> gamma = std::nullopt);

// selected-series value 1 + sum_{j in selected} coeff_j T_j(u); may be
// negative. Requires u in [0,1].
double eval_d(const SharpeningFit& fit, double u);

/// Base model multiplied by a truncated orthogonal series: the repaired
/// ("d-sharp") distribution
///
///   f(x) = f0(x) * [1 + sum_j coeff_j T_j(F0(x))].
///
/// The raw series can dip below zero; the usable density clips it at zero
/// and renormalizes. pdf() / cdf() / quantile() refer to the clipped,
/// renormalized density; pdf_raw() keeps the signed series for coefficient
/// math. cdf/quantile are evaluated on a fixed 4096-point grid over the
/// base's u-scale with monotone (linear) interpolation.
class DSharpModel final : public Distribution {
 public:
  DSharpModel(std::shared_ptr<const Distribution> base,
              std::map<int, double> coeffs);

  double pdf(double x) const override;
  double pdf_raw(double x) const;
  double cdf(double x) const override;
  double quantile(double u) const override;

  // signed series 1 + sum_j coeff_j T_j(u)
  double series(double u) const;

  const Distribution& u_base() const override { return *base_; }
  // max(0, series(u)) / normalizer
  double u_weight(double u) const override;

  // mass of the positively clipped series (1 when the series never dips
  // below zero); 2048-point quadrature
  double normalizer() const { return normalizer_; }

  // accept-reject bound 1 + sum_j |coeff_j| sqrt(2j+1) >= sup series
  double envelope() const;

  const std::map<int, double>& coeffs() const { return coeffs_; }
  std::shared_ptr<const Distribution> base_ptr() const { return base_; }

  // accept-reject sampling with the base as proposal; deterministic per seed
  Sample sample(std::size_t n, std::uint64_t seed) const;

 private:
  struct CdfGrid {
    std::once_flag once;
    std::vector<double> cum;  // normalized cumulative series mass
  };
  const CdfGrid& grid() const;

  std::shared_ptr<const Distribution> base_;
  std::map<int, double> coeffs_;
  double normalizer_ = 1.0;
  std::shared_ptr<CdfGrid> grid_;  // built lazily, shared across copies
};

// Throws std::runtime_error if the clipped series mass is <= 1e-12.
DSharpModel make_dsharp(std::shared_ptr<const Distribution> base,
                        std::map<int, double> coeffs);
DSharpModel make_dsharp(const BaseModel& base,
                        const std::map<int, double>& coeffs);
DSharpModel make_dsharp(const SharpeningFit& fit);

Sample sample_dsharp(const DSharpModel& model, std::size_t n,
                     std::uint64_t seed);

// Recursive upgrade: treat `model` as the new base and fit again.
DSharpModel resharpen(const DSharpModel& model, const Sample& data, int m_max,
                      std::optional<double> gamma = std::nullopt);

}  // namespace dsharp
