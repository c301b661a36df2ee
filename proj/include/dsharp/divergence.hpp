#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>

namespace dsharp {

// Convex generators psi with psi(1) = 0; the induced divergence between a
// model and the data distribution is the integral of psi over the comparison
// ratio d(u) on the unit interval.
enum class Psi { KL, TV, Hellinger, ChiSq };

std::string psi_name(Psi psi);
Psi psi_from_name(std::string_view name);

double eval_psi(Psi psi, double x);

// integral over [0,1] of psi(d(u)) with an n-point Gauss-Legendre rule.
// d must be a nonnegative ratio integrating to ~1; NaN values raise.
double csiszar(const std::function<double(double)>& d, Psi psi,
               int nodes = 2048);

// adaptive-quadrature variant for integrands with kinks (clipped ratios)
double csiszar_adaptive(const std::function<double(double)>& d, Psi psi,
                        double tol = 1e-10);

struct DivergenceReport {
  Psi kind = Psi::ChiSq;
  std::optional<double> alpha;    // Renyi order, when applicable
  double value = 0.0;
  int dof = 0;                    // chi-square index only
  std::optional<double> p_value;  // chi-square index only
};

// Squared-coefficient index: value = sum coeff_j^2, and n*value is referred
// to a chi-square with m degrees of freedom for the null p-value. Valid only
// for raw (pre-selection) coefficients at fixed m. Requires n >= 2.
DivergenceReport chisq_index(std::span<const double> coeffs, std::size_t n);

// Renyi divergence of order alpha (alpha not in {0,1}):
//   (1/(alpha(1-alpha))) * (1 - integral of d(u)^alpha).
// Nonnegative for ratios of unit mass; values below -1e-9 raise, tiny
// negative quadrature residue is clamped to 0.
double renyi(const std::function<double(double)>& d, double alpha,
             int nodes = 2048);

}  // namespace dsharp
