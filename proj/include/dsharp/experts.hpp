#pragma once

#include <vector>

#include "dsharp/distributions.hpp"

namespace dsharp {

// Data-driven weight per expert model: 1 / (1 + sum of squared series
// coefficients of the data against that expert), in (0, 1]. A weight of 1
// means the expert's model leaves nothing to explain. Requires k >= 2
// experts, n >= 10, and every expert's support to cover the data range.
std::vector<double> relevance_weights(const Sample& data,
                                      const std::vector<BaseModel>& experts,
                                      int m = 10);

struct ExpertEnsemble {
  std::vector<BaseModel> experts;
  std::vector<double> weights;        // relevance weights
  std::vector<double> probabilities;  // weights normalized to sum 1
  BaseModel consensus;                // mixture of experts with those probs
};

// Combines the experts into a mixture usable as a starting model for
// further sharpening.
ExpertEnsemble consensus(const Sample& data,
                         const std::vector<BaseModel>& experts, int m = 10);

}  // namespace dsharp
