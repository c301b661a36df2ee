#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dsharp/sharpening.hpp"

namespace dsharp {

struct Action {
  std::string label;
  std::function<double(double)> loss;  // outcome x -> loss
};

// A finite action set (q >= 2) with per-action loss evaluators.
class DecisionProblem {
 public:
  explicit DecisionProblem(std::vector<Action> actions);

  // JSON: a list of {"action": label, "expr": string} or
  // {"action": label, "table": [[x, loss], ...]} entries.
  static DecisionProblem from_json_text(std::string_view text);
  static DecisionProblem from_json_file(const std::string& path);

  std::size_t size() const { return actions_.size(); }
  const Action& action(std::size_t i) const { return actions_.at(i); }
  std::vector<std::string> labels() const;

 private:
  std::vector<Action> actions_;
};

// Bootstrap tally of which action each synthesized model prefers.
struct ActionProfile {
  std::vector<std::string> labels;
  std::vector<std::size_t> counts;   // sum = total
  std::size_t total = 0;
  std::vector<double> probabilities;
  double entropy = 0.0;  // natural log; 0*log0 = 0
};

// Models synthesized by resampling the data and refitting against the same
// base; `averaged` evaluations are equal-weight mixtures over the members.
struct ModelEnsemble {
  std::vector<DSharpModel> members;
  std::vector<std::size_t> skipped;  // replicate indices that degenerated

  double averaged_pdf(double x) const;
  std::size_t size() const { return members.size(); }
};

// Risk of an action: integral of loss against the model, computed on the
// model's u-scale with a 2048-point rule. Non-finite loss values raise.
double expected_loss(const DecisionProblem& problem, std::size_t action,
                     const Distribution& model);

// argmin of expected loss; ties go to the first-listed action
std::size_t optimal_action(const DecisionProblem& problem,
                           const Distribution& model);

// Resample-and-refit exploration of the model neighborhood around `base`.
// Replicate i draws with its own generator seeded seed + i; a replicate
// whose clipped series mass degenerates is skipped (hard error if more than
// 10% skip). Requires n >= 10, B >= 1.
ModelEnsemble bootstrap_ensemble(const Sample& data, const BaseModel& base,
                                 int M = 10, int B = 1000,
                                 std::uint64_t seed = 0);

// Truncated-series fits on the full data at each order m = 0..M (m = 0 is
// the base itself); candidate models for the minimax sweep.
std::vector<DSharpModel> direct_fits(const Sample& data, const BaseModel& base,
                                     int M);

ActionProfile action_profile(const DecisionProblem& problem,
                             const ModelEnsemble& ensemble);

// Index of the ensemble member with the worst (largest) expected loss for
// the given action; ties go to the lowest replicate index.
std::size_t least_favorable(const DecisionProblem& problem, std::size_t action,
                            const ModelEnsemble& ensemble);

// argmin over actions of the worst-case expected loss across candidates
std::size_t minimax_action(const DecisionProblem& problem,
                           std::span<const Distribution* const> candidates);

// minimax over ensemble members plus the direct fits m = 0..M
std::size_t minimax_action(const DecisionProblem& problem,
                           const ModelEnsemble& ensemble,
                           std::span<const DSharpModel> fits);

// argmin of expected loss under the ensemble average; by linearity this is
// the mean of the member expected losses.
std::size_t robust_action(const DecisionProblem& problem,
                          const ModelEnsemble& ensemble);

// expected loss of every action under every candidate; rows = actions.
// Shared by the minimax/robust/profile routines and the CLI report.
std::vector<std::vector<double>> loss_matrix(
    const DecisionProblem& problem,
    std::span<const Distribution* const> candidates);

}  // namespace dsharp
