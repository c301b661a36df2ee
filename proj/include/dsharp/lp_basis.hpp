#pragma once

#include <span>
#include <vector>

namespace dsharp {

// Orthonormal polynomial system on the unit interval used throughout the
// library: T_j restricted to u = F0(x) is the normalized shifted Legendre
// polynomial of degree j,
//
//   T_1(u) = sqrt(12) (u - 1/2),   T_2(u) = sqrt(5) (6u^2 - 6u + 1),  ...
//
// built from the exact Legendre three-term recurrence in monomial form.
// Properties: zero mean, unit norm, sup |T_j| = sqrt(2j+1) attained at u=1.
class LPBasis {
 public:
  // monomial coefficients above degree ~20 are no longer representable
  // accurately in double precision
  static constexpr int kMaxOrder = 20;

  explicit LPBasis(int max_order);  // requires 1 <= max_order <= kMaxOrder

  int max_order() const { return max_order_; }

  // T_j(u), Horner evaluation of the stored monomial coefficients
  double eval(int j, double u) const;

  // integral of T_j over [0, w]; exact polynomial antiderivative.
  // Vanishes at w = 0 and w = 1 for every j >= 1.
  double integral(int j, double w) const;

  // coefficients of T_j in ascending powers of u
  std::span<const double> coefficients(int j) const;

  // shared order-20 instance
  static const LPBasis& shared();

 private:
  int max_order_;
  std::vector<std::vector<double>> coef_;  // [j][k] coefficient of u^k
};

}  // namespace dsharp
