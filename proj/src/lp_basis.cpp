#include "dsharp/lp_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace dsharp {

LPBasis::LPBasis(int max_order) : max_order_(max_order) {
  if (max_order < 1 || max_order > kMaxOrder) {
    throw std::domain_error("LPBasis: order must be in [1, 20]");
  }
  // shifted Legendre recurrence in monomial form:
  //   (j+1) P_{j+1} = (2j+1)(2u-1) P_j - j P_{j-1}
  std::vector<std::vector<double>> legendre(max_order + 1);
  legendre[0] = {1.0};
  if (max_order >= 1) legendre[1] = {-1.0, 2.0};
  for (int j = 1; j < max_order; ++j) {
    const auto& pj = legendre[j];
    const auto& pm = legendre[j - 1];
    std::vector<double> next(j + 2, 0.0);
    for (std::size_t k = 0; k < pj.size(); ++k) {
      next[k + 1] += (2.0 * j + 1.0) * 2.0 * pj[k];
      next[k] -= (2.0 * j + 1.0) * pj[k];
    }
    for (std::size_t k = 0; k < pm.size(); ++k) next[k] -= j * pm[k];
    for (double& c : next) c /= (j + 1.0);
    legendre[j + 1] = std::move(next);
  }
  coef_.resize(max_order + 1);
  for (int j = 0; j <= max_order; ++j) {
    coef_[j] = legendre[j];
    const double norm = std::sqrt(2.0 * j + 1.0);
    for (double& c : coef_[j]) c *= norm;
  }
}

double LPBasis::eval(int j, double u) const {
  if (j < 1 || j > max_order_) {
    throw std::domain_error("LPBasis::eval: order out of range");
  }
  const auto& c = coef_[j];
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * u + c[k];
  return v;
}

double LPBasis::integral(int j, double w) const {
  if (j < 1 || j > max_order_) {
    throw std::domain_error("LPBasis::integral: order out of range");
  }
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::domain_error("LPBasis::integral: w must be in [0,1]");
  }
  // antiderivative sum c_k w^{k+1}/(k+1), evaluated by Horner times w
  const auto& c = coef_[j];
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * w + c[k] / (k + 1.0);
  return v * w;
}

std::span<const double> LPBasis::coefficients(int j) const {
  if (j < 0 || j > max_order_) {
    throw std::domain_error("LPBasis::coefficients: order out of range");
  }
  return coef_[j];
}

const LPBasis& LPBasis::shared() {
  static const LPBasis basis(kMaxOrder);
  return basis;
}

}  // namespace dsharp
