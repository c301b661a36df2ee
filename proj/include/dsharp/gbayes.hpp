#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dsharp/distributions.hpp"

namespace dsharp {

// theta -> model map over a 1- or 2-dimensional parameter
using ParamFamily = std::function<BaseModel(std::span<const double>)>;

// Builds a family from a spec string with '?' placeholders, e.g.
// "normal:mean=?,sd=1"; the k-th placeholder receives theta[k].
ParamFamily family_from_template(const std::string& spec_template);

// Series coefficients of the data against family(theta); the data-vs-model
// discrepancy as a function of the parameter.
std::vector<double> sharpening_kernel(const Sample& data,
                                      const ParamFamily& family,
                                      std::span<const double> theta, int m);

enum class GBayesDivergence { KL, TV, Renyi };
enum class Smoothing { Raw, Selected };

struct PosteriorGrid {
  std::vector<std::vector<double>> grid;  // theta points
  std::vector<double> prior;              // normalized
  std::vector<double> posterior;          // normalized, same order as grid
  std::vector<double> divergences;        // I(theta) per grid point
  GBayesDivergence kind = GBayesDivergence::KL;
  double alpha = 0.5;  // Renyi only
  int m = 0;
  Smoothing smoothing = Smoothing::Raw;

  std::size_t mode_index() const;  // argmax posterior, first on ties
};

// Grid posterior: weight(theta) proportional to prior(theta) * exp(-I) where
// I integrates the chosen divergence generator over the fitted series ratio
// for family(theta). The series is clipped at 1e-12 before log/power
// operations. Weights are normalized after subtracting the max log weight;
// an all-degenerate grid raises.
PosteriorGrid d_posterior(const Sample& data, const ParamFamily& family,
                          std::vector<std::vector<double>> grid,
                          std::vector<double> prior, GBayesDivergence kind,
                          int m, double alpha = 0.5,
                          Smoothing smoothing = Smoothing::Raw);

}  // namespace dsharp
