#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsharp/distribution.hpp"

namespace dsharp {

class Rng;

enum class Family {
  Normal,
  LogNormal,
  Exponential,
  Uniform,
  Laplace,
  Logistic,
  Mixture,
};

std::string family_name(Family f);
Family family_from_name(std::string_view name);

// A random sample of finite real observations, n >= 1.
struct Sample {
  std::vector<double> values;

  Sample() = default;
  explicit Sample(std::vector<double> v);  // validates finiteness and n >= 1

  std::size_t n() const { return values.size(); }
  double mean() const;
  double min() const;
  double max() const;
};

/// A parametric starting model with exact pdf/cdf/quantile and inverse-cdf
/// sampling. Values are immutable after construction and safe to evaluate
/// concurrently.
///
/// Spec-string grammar (used by the CLI and config files):
///   normal:mean=M,sd=S      lognormal:mu=M,sigma=S   exp:mean=L
///   uniform:a=A,b=B         laplace:loc=L,scale=S    logistic:loc=L,scale=S
///   mix:w1*SPEC1|w2*SPEC2|...    (components may be parenthesized)
class BaseModel final : public Distribution {
 public:
  static BaseModel normal(double mean, double sd);
  static BaseModel lognormal(double mu, double sigma);
  // mean parameterization: lambda = E[X]
  static BaseModel exponential(double mean);
  static BaseModel uniform(double a, double b);
  static BaseModel laplace(double loc, double scale);
  static BaseModel logistic(double loc, double scale);
  // weights must be nonnegative and sum to 1 within 1e-12
  static BaseModel mixture(std::vector<BaseModel> components,
                           std::vector<double> weights);

  static BaseModel parse(std::string_view spec);
  std::string to_spec() const;

  Family family() const { return family_; }
  std::span<const double> params() const { return params_; }
  std::span<const BaseModel> components() const { return components_; }
  std::span<const double> weights() const { return weights_; }

  double pdf(double x) const override;   // exactly 0 outside the support
  double cdf(double x) const override;   // exact 0/1 outside the support
  double quantile(double u) const override;  // requires 0 < u < 1

  double support_lo() const;
  double support_hi() const;

  // inverse-cdf sampling; mixtures draw a component then a value.
  // Deterministic for a fixed seed.
  Sample sample(std::size_t n, std::uint64_t seed) const;
  double draw(Rng& rng) const;

 private:
  BaseModel(Family f, std::vector<double> params);
  BaseModel(std::vector<BaseModel> components, std::vector<double> weights);

  Family family_;
  std::vector<double> params_;
  std::vector<BaseModel> components_;  // Mixture only
  std::vector<double> weights_;        // Mixture only
};

// Convenience initializer matching the family's first two moments (log
// moments for the lognormal); mixtures are not supported.
BaseModel moment_match(Family family, const Sample& data);

}  // namespace dsharp
