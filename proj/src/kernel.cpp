#include "ctk/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "ctk/jsonw.hpp"
#include "ctk/util.hpp"

namespace ctk {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* kind) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) {
      throw input_error(std::string(kind) + " label must be nonempty");
    }
    if (!seen.insert(l).second) {
      throw input_error(std::string("duplicate ") + kind + " label: " + l);
    }
  }
}

}  // namespace

TransitionKernel::TransitionKernel(std::vector<std::string> state_labels,
                                   std::vector<std::string> context_labels,
                                   std::vector<double> prob)
    : prob_(std::move(prob)) {
  if (state_labels.empty() || context_labels.empty()) {
    throw input_error("kernel needs at least one state and one context");
  }
  check_labels(state_labels, "state");
  check_labels(context_labels, "context");
  const std::size_t expected =
      context_labels.size() * state_labels.size() * state_labels.size();
  if (prob_.size() != expected) {
    throw input_error("kernel table has " + std::to_string(prob_.size()) +
                      " entries, expected " + std::to_string(expected));
  }
  states_.reserve(state_labels.size());
  for (std::size_t i = 0; i < state_labels.size(); ++i) {
    states_.push_back({std::move(state_labels[i]), i});
  }
  contexts_.reserve(context_labels.size());
  for (std::size_t i = 0; i < context_labels.size(); ++i) {
    contexts_.push_back({std::move(context_labels[i]), i});
  }
}

std::optional<std::size_t> TransitionKernel::state_index(std::string_view label) const {
  for (const auto& s : states_) {
    if (s.label == label) return s.index;
  }
  return std::nullopt;
}

std::optional<std::size_t> TransitionKernel::context_index(std::string_view label) const {
  for (const auto& c : contexts_) {
    if (c.label == label) return c.index;
  }
  return std::nullopt;
}

std::size_t TransitionKernel::resolve(const StateId& id) const {
  if (!id.label.empty()) {
    if (auto i = state_index(id.label)) return *i;
    throw input_error("unknown state: " + id.label);
  }
  if (id.index >= state_count()) {
    throw input_error("state index out of range: " + std::to_string(id.index));
  }
  return id.index;
}

std::size_t TransitionKernel::resolve(const ContextId& id) const {
  if (!id.label.empty()) {
    if (auto i = context_index(id.label)) return *i;
    throw input_error("unknown context: " + id.label);
  }
  if (id.index >= context_count()) {
    throw input_error("context index out of range: " + std::to_string(id.index));
  }
  return id.index;
}

ValidationReport validate_kernel(const TransitionKernel& kernel) {
  ValidationReport report;
  for (std::size_t e = 0; e < kernel.context_count(); ++e) {
    for (std::size_t p = 0; p < kernel.state_count(); ++p) {
      double sum = 0.0;
      bool out_of_range = false;
      for (std::size_t q = 0; q < kernel.state_count(); ++q) {
        const double v = kernel.prob(q, p, e);
        if (!(v >= 0.0 && v <= 1.0)) out_of_range = true;
        sum += v;
      }
      if (out_of_range || std::abs(sum - 1.0) > kKernelRowTol) {
        report.violations.push_back({p, e, sum, out_of_range});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

namespace {

std::size_t sample_row(const TransitionKernel& kernel, std::size_t p, std::size_t e,
                       SplitMix64& rng) {
  const double u = rng.next_double();
  double cum = 0.0;
  std::size_t last_positive = 0;
  bool any_positive = false;
  for (std::size_t q = 0; q < kernel.state_count(); ++q) {
    const double v = kernel.prob(q, p, e);
    if (v > 0.0) {
      last_positive = q;
      any_positive = true;
    }
    cum += v;
    if (u < cum) return q;
  }
  // u landed in the sub-tolerance gap between cum and 1
  if (!any_positive) throw std::invalid_argument("kernel row has no positive mass");
  return last_positive;
}

}  // namespace

StateId sample_step(const TransitionKernel& kernel, const StateId& state,
                    const ContextId& context, SplitMix64& rng) {
  if (!validate_kernel(kernel).valid) {
    throw std::invalid_argument("sample_step: kernel failed validation");
  }
  const std::size_t p = kernel.resolve(state);
  const std::size_t e = kernel.resolve(context);
  return kernel.states()[sample_row(kernel, p, e, rng)];
}

Trajectory sample_trajectory(const TransitionKernel& kernel, const StateId& initial,
                             const std::vector<ContextId>& contexts,
                             std::uint64_t seed) {
  if (contexts.empty()) {
    throw std::invalid_argument("sample_trajectory: context list is empty");
  }
  if (!validate_kernel(kernel).valid) {
    throw std::invalid_argument("sample_trajectory: kernel failed validation");
  }
  SplitMix64 rng(seed);
  Trajectory traj;
  std::size_t p = kernel.resolve(initial);
  traj.initial = kernel.states()[p];
  traj.seed = seed;
  traj.steps.reserve(contexts.size());
  for (const auto& ctx : contexts) {
    const std::size_t e = kernel.resolve(ctx);
    const std::size_t q = sample_row(kernel, p, e, rng);
    traj.steps.emplace_back(kernel.contexts()[e], kernel.states()[q]);
    p = q;
  }
  return traj;
}

TransitionKernel kernel_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("kernel JSON parse error: ") + e.what());
  }
  try {
    std::vector<std::string> states = doc.at("states").get<std::vector<std::string>>();
    std::vector<std::string> contexts = doc.at("contexts").get<std::vector<std::string>>();
    const auto& table = doc.at("prob");
    std::vector<double> prob;
    prob.reserve(contexts.size() * states.size() * states.size());
    if (!table.is_array() || table.size() != contexts.size()) {
      throw input_error("prob must have one block per context");
    }
    for (const auto& block : table) {
      if (!block.is_array() || block.size() != states.size()) {
        throw input_error("each context block must have one row per source state");
      }
      for (const auto& row : block) {
        if (!row.is_array() || row.size() != states.size()) {
          throw input_error("each row must have one entry per target state");
        }
        for (const auto& v : row) prob.push_back(v.get<double>());
      }
    }
    return TransitionKernel(std::move(states), std::move(contexts), std::move(prob));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("kernel JSON structure error: ") + e.what());
  }
}

std::string kernel_to_json(const TransitionKernel& kernel) {
  JsonWriter w;
  w.begin_object();
  w.key("states").begin_array();
  for (const auto& s : kernel.states()) w.value(s.label);
  w.end_array();
  w.key("contexts").begin_array();
  for (const auto& c : kernel.contexts()) w.value(c.label);
  w.end_array();
  w.key("prob").begin_array();
  for (std::size_t e = 0; e < kernel.context_count(); ++e) {
    w.begin_array();
    for (std::size_t p = 0; p < kernel.state_count(); ++p) {
      w.begin_array();
      for (std::size_t q = 0; q < kernel.state_count(); ++q) {
        w.value(kernel.prob(q, p, e));
      }
      w.end_array();
    }
    w.end_array();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

TransitionKernel load_kernel(const std::filesystem::path& file) {
  TransitionKernel kernel = kernel_from_json(read_file(file));
  const auto report = validate_kernel(kernel);
  if (!report.valid) {
    std::string msg = "kernel failed validation:";
    for (const auto& v : report.violations) {
      msg += " row(source=" + kernel.states()[v.source].label +
             ", context=" + kernel.contexts()[v.context].label +
             ") sum=" + format_double(v.row_sum) +
             (v.entry_out_of_range ? " entry-out-of-range" : "") + ";";
    }
    throw input_error(msg);
  }
  return kernel;
}

std::string validation_report_to_json(const ValidationReport& report,
                                      const TransitionKernel& kernel) {
  JsonWriter w;
  w.begin_object();
  w.kv("valid", report.valid);
  w.key("violations").begin_array();
  for (const auto& v : report.violations) {
    w.begin_object();
    w.kv("source", kernel.states()[v.source].label);
    w.kv("context", kernel.contexts()[v.context].label);
    w.kv("row_sum", v.row_sum);
    w.kv("entry_out_of_range", v.entry_out_of_range);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace ctk
