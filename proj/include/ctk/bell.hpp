#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>

namespace ctk {

inline constexpr double kTableTol = 1e-9;        // joint-table normalization
inline constexpr double kViolationSlack = 1e-12; // strict > 2 boundary

struct DichotomicExperiment {
  int id = 0;  // 1..4
  std::string description;
  double outcome_value_up = +1.0;
  double outcome_value_down = -1.0;
};

// Outcome probabilities of one coincidence experiment e_i e_j.
struct JointOutcomeTable {
  std::pair<int, int> pair{0, 0};  // (i, j) with i in {1,2}, j in {3,4}
  double p_uu = 0.0;
  double p_ud = 0.0;
  double p_du = 0.0;
  double p_dd = 0.0;
  // Set when the table was normalized from raw counts.
  std::optional<std::uint64_t> sample_size;

  static JointOutcomeTable from_counts(std::pair<int, int> pair, std::uint64_t n_uu,
                                       std::uint64_t n_ud, std::uint64_t n_du,
                                       std::uint64_t n_dd);
};

// Four experiments and the four CHSH coincidence tables, stored in canonical
// pair order (1,3), (1,4), (2,3), (2,4).
struct BellScenario {
  std::array<DichotomicExperiment, 4> experiments;
  std::array<JointOutcomeTable, 4> joints;
};

struct BellReport {
  double e13 = 0.0;
  double e14 = 0.0;
  double e23 = 0.0;
  double e24 = 0.0;
  double chsh = 0.0;
  bool violated = false;
};

// E = p_uu + p_dd - p_ud - p_du. Throws std::invalid_argument on a table
// that is not a probability distribution.
double expectation_value(const JointOutcomeTable& table);

// |E13 - E14| + |E23 + E24|; inputs must lie in [-1, 1].
double chsh_value(double e13, double e14, double e23, double e24);

BellReport evaluate_bell_scenario(const BellScenario& scenario);

BellScenario scenario_from_json(const std::string& text);
BellScenario load_scenario(const std::filesystem::path& file);
std::string bell_report_to_json(const BellReport& report);
std::string bell_report_summary(const BellReport& report);  // one line

}  // namespace ctk
