#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctk/rng.hpp"

namespace ctk {

struct StateId {
  std::string label;
  std::size_t index = 0;
};

struct ContextId {
  std::string label;
  std::size_t index = 0;
};

// Row-normalization tolerance for kernel validation and loaders.
inline constexpr double kKernelRowTol = 1e-9;

// Finite transition kernel mu(q, p, e): the probability that context e sends
// state p to state q. Probabilities are stored [context][source][target],
// matching the on-disk layout; a "row" is the distribution over targets for
// one (source, context) pair. Immutable after construction; safe to share
// across threads.
class TransitionKernel {
 public:
  // Structural checks only (shape, nonempty unique labels). Probabilistic
  // validity is a separate concern, see validate_kernel().
  TransitionKernel(std::vector<std::string> state_labels,
                   std::vector<std::string> context_labels,
                   std::vector<double> prob);

  std::size_t state_count() const { return states_.size(); }
  std::size_t context_count() const { return contexts_.size(); }

  double prob(std::size_t target, std::size_t source, std::size_t context) const {
    return prob_[(context * state_count() + source) * state_count() + target];
  }

  const std::vector<StateId>& states() const { return states_; }
  const std::vector<ContextId>& contexts() const { return contexts_; }

  std::optional<std::size_t> state_index(std::string_view label) const;
  std::optional<std::size_t> context_index(std::string_view label) const;

  // Resolve an id against this kernel: nonempty labels are looked up (and
  // must exist); empty labels fall back to the index. Throws input_error on
  // unknown ids.
  std::size_t resolve(const StateId& id) const;
  std::size_t resolve(const ContextId& id) const;

 private:
  std::vector<StateId> states_;
  std::vector<ContextId> contexts_;
  std::vector<double> prob_;  // [context][source][target]
};

struct RowViolation {
  std::size_t source = 0;
  std::size_t context = 0;
  double row_sum = 0.0;
  bool entry_out_of_range = false;
};

struct ValidationReport {
  bool valid = true;
  std::vector<RowViolation> violations;
};

// Checks every (source, context) row: entries in [0,1] and sum within
// kKernelRowTol of 1. Violated rows are listed individually.
ValidationReport validate_kernel(const TransitionKernel& kernel);

struct Trajectory {
  StateId initial;
  std::vector<std::pair<ContextId, StateId>> steps;
  std::uint64_t seed = 0;
};

// One contextual transition, drawn with probability mu(q, p, e). The kernel
// must be valid (std::invalid_argument otherwise). Identical rng state yields
// identical results.
StateId sample_step(const TransitionKernel& kernel, const StateId& state,
                    const ContextId& context, SplitMix64& rng);

// Chains sample_step over the context list; a pure function of
// (kernel, initial, contexts, seed).
Trajectory sample_trajectory(const TransitionKernel& kernel, const StateId& initial,
                             const std::vector<ContextId>& contexts,
                             std::uint64_t seed);

// JSON: {"states": [..], "contexts": [..], "prob": [[[..]]]} with prob
// indexed [context][source][target].
TransitionKernel kernel_from_json(const std::string& text);
std::string kernel_to_json(const TransitionKernel& kernel);

// read + parse + validate; throws input_error when rows fail validation.
TransitionKernel load_kernel(const std::filesystem::path& file);

std::string validation_report_to_json(const ValidationReport& report,
                                      const TransitionKernel& kernel);

}  // namespace ctk
