#pragma once

namespace dsharp {

// Minimal interface every usable model exposes. A model that is a
// reweighting of some base model (see DSharpModel) additionally reports
// that structure through u_base()/u_weight(), which lets expectations be
// computed as integrals over the base's unit-interval probability scale:
//
//   E_F[g(X)] = integral over u in (0,1) of g(u_base().quantile(u)) * u_weight(u)
//
// For a plain distribution the weight is identically 1.
class Distribution {
 public:
  virtual ~Distribution() = default;

  virtual double pdf(double x) const = 0;
  virtual double cdf(double x) const = 0;
  virtual double quantile(double u) const = 0;

  virtual const Distribution& u_base() const { return *this; }
  virtual double u_weight(double /*u*/) const { return 1.0; }
};

}  // namespace dsharp
